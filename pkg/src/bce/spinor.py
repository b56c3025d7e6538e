"""Isotropic splittings, the Cartan map and the spinor module.

For W = W1 (+) W2 the spinor space is S = W1^wedge, realised inside the ambient
W^wedge, with x . xi = x1 ^ xi + iota_{x2}(xi).  A second model is the quotient
cl / cl o K_+ with K = W2^wedge; the two are compared by an explicit module map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .braid import BraidOperator, OperatorBank
from .clifford import CliffordAlgebra
from .exactlin import (
    ONE,
    ZERO,
    ExactMatrix,
    Vector,
    inverse,
    nullspace_basis,
    rank,
    rref_rows,
    solve,
    vec_axpy,
)
from .exterior import ExteriorAlgebra, WedgeElement, contract, lift, wedge
from .tensor import CapExceededError, GradedElement, digits, tensor_vectors
from .verdict import Verdict, all_passed

__all__ = [
    "Splitting",
    "SplittingData",
    "Representation",
    "SpinorModel",
    "ModuleMap",
    "validate_splitting",
    "cartan_map",
    "build_spinor",
    "verify_spinor_theorem",
    "cyclic_witness",
    "universal_embedding",
    "volume_elements",
]


@dataclass(frozen=True)
class Splitting:
    """W = span(w1_basis) (+) span(w2_basis), vectors in the standard basis of W."""

    w1_basis: Tuple[Vector, ...]
    w2_basis: Tuple[Vector, ...]

    @classmethod
    def from_indices(cls, w1: Sequence[int], w2: Sequence[int]) -> "Splitting":
        return cls(tuple({i: ONE} for i in w1), tuple({i: ONE} for i in w2))

    @property
    def d1(self) -> int:
        return len(self.w1_basis)

    @property
    def d2(self) -> int:
        return len(self.w2_basis)


@dataclass
class SplittingData:
    """Change of basis P = [W1 | W2] and everything expressed in it."""

    splitting: Splitting
    change: ExactMatrix
    change_inverse: ExactMatrix
    braid_adapted: ExactMatrix
    form_adapted: ExactMatrix
    duality: ExactMatrix  # d2 x d1, F(v_i (x) u_j)

    def w1_part(self, x: Vector) -> Vector:
        """Component of x in W1, as a vector of W."""
        return self._part(x, range(self.splitting.d1))

    def w2_part(self, x: Vector) -> Vector:
        d1 = self.splitting.d1
        return self._part(x, range(d1, d1 + self.splitting.d2))

    def _part(self, x: Vector, block) -> Vector:
        coords = self.change_inverse.apply(x)
        keep = {i: c for i, c in coords.items() if i in block}
        return self.change.apply(keep)

    def restricted_braid(self, block: int) -> ExactMatrix:
        """sigma on W_block (x) W_block in the adapted basis of that block."""
        d1, d2 = self.splitting.d1, self.splitting.d2
        n = d1 + d2
        lo, size = (0, d1) if block == 1 else (d1, d2)
        cols = {}
        for a in range(size):
            for b in range(size):
                col = self.braid_adapted.column((lo + a) * n + lo + b)
                cols[a * size + b] = {(c // n - lo) * size + (c % n - lo): x for c, x in col.items()}
        return ExactMatrix(size * size, size * size, cols)


def _adapt(cl: CliffordAlgebra, s: Splitting) -> Tuple[Optional[SplittingData], Optional[Verdict]]:
    N = cl.dim_w
    basis = list(s.w1_basis) + list(s.w2_basis)
    if len(basis) != N or any(not 0 <= i < N for v in basis for i in v):
        return None, Verdict("direct_sum", False, witness={"vectors": len(basis), "dim_w": N})
    P = ExactMatrix.from_columns(N, basis)
    try:
        Pinv = inverse(P)
    except ZeroDivisionError:
        return None, Verdict("direct_sum", False, witness="W1 and W2 do not span W")
    S = Pinv.kron(Pinv) @ cl.bank.braiding.matrix @ P.kron(P)
    F = P.transpose() @ cl.form.matrix @ P
    d1 = s.d1
    duality = ExactMatrix(s.d2, d1, {j: {i - d1: x for i, x in F.column(j).items() if i >= d1} for j in range(d1)})
    return SplittingData(s, P, Pinv, S, F, duality), None


def validate_splitting(cl: CliffordAlgebra, s: Splitting) -> Tuple[Verdict, Optional[SplittingData]]:
    """Direct sum, sigma(Wi(x)Wj) = Wj(x)Wi, sigma^2 = id across, isotropy, nondegenerate duality."""
    data, bad = _adapt(cl, s)
    if bad is not None:
        return all_passed("splitting", [bad]), None
    N, d1 = cl.dim_w, s.d1

    def side(i: int) -> int:
        return 1 if i < d1 else 2

    verdicts = [Verdict("direct_sum", True)]
    S = data.braid_adapted
    compat = Verdict("braid_compatible", True)
    for j in range(N * N):
        a, b = divmod(j, N)
        for c in S.column(j):
            x, y = divmod(c, N)
            if (side(x), side(y)) != (side(b), side(a)):
                compat = Verdict("braid_compatible", False, witness={"adapted_source": [a, b], "adapted_target": [x, y]})
                break
        if not compat.passed:
            break
    verdicts.append(compat)
    S2 = S @ S
    invol = Verdict("cross_involution", True)
    for j in range(N * N):
        a, b = divmod(j, N)
        if side(a) != side(b) and S2.column(j) != {j: ONE}:
            invol = Verdict("cross_involution", False, witness={"adapted_source": [a, b]})
            break
    verdicts.append(invol)
    F = data.form_adapted
    iso = Verdict("isotropic", True)
    for j, col in F.cols.items():
        for i in col:
            if not (side(i) == 2 and side(j) == 1):
                iso = Verdict("isotropic", False, witness={"adapted_entry": [i, j]})
                break
        if not iso.passed:
            break
    verdicts.append(iso)
    D = data.duality
    nondeg = D.nrows == D.ncols and rank(D) == D.nrows
    verdicts.append(Verdict("nondegenerate_duality", nondeg, witness=None if nondeg else {"rank": rank(D), "shape": list(D.shape)}))
    v = all_passed("splitting", verdicts, duality=D.to_rows())
    return v, (data if v.passed else None)


class Representation:
    """A cl-module given by the action matrices of the standard generators e_a."""

    def __init__(self, cl: CliffordAlgebra, generators: Dict[int, ExactMatrix]):
        self.cl = cl
        self.generators = generators
        self.dim = next(iter(generators.values())).nrows
        self._words: Dict[Tuple[int, int], ExactMatrix] = {(0, 0): ExactMatrix.identity(self.dim)}
        self._basis: Dict[int, ExactMatrix] = {}

    def of_word(self, degree: int, index: int) -> ExactMatrix:
        """rho(e_{i1}) ... rho(e_{in})."""
        key = (degree, index)
        if key not in self._words:
            N = self.cl.dim_w
            head, rest = divmod(index, N ** (degree - 1))
            self._words[key] = self.generators[head] @ self.of_word(degree - 1, rest)
        return self._words[key]

    def of_tensor(self, g: GradedElement) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim)
        for n, v in sorted(g.components.items()):
            for idx, c in sorted(v.items()):
                out = out + self.of_word(n, idx).scale(c)
        return out

    def of_basis(self, g: int) -> ExactMatrix:
        """rho(b_g) for the global cl basis index g, via j_F(lambda^-1(lift b)) = b."""
        if g not in self._basis:
            ext = self.cl.exterior
            n, j = ext.locate(g)
            t = GradedElement(self.cl.dim_w, self.cl.cap, {n: ext.degree(n).lifts[j]})
            self._basis[g] = self.of_tensor(self.cl.lambda_map.inverse(t))
        return self._basis[g]

    def of_element(self, x: WedgeElement) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim)
        for g, c in sorted(x.to_global().items()):
            out = out + self.of_basis(g).scale(c)
        return out

    def check(self) -> Verdict:
        """rho^(x)(t) == rho(j_F t) for every basis tensor within cap, and rho(a o b) == rho(a) rho(b)."""
        cl = self.cl
        ext = cl.exterior
        if not ext.exhausted:
            raise CapExceededError("module checks need a finite Clifford algebra within cap")
        N = cl.dim_w
        jf, offsets = cl.jf_matrix(cl.cap)
        for m in range(cl.cap + 1):
            for j in range(N**m):
                image = WedgeElement.from_global(ext, jf.column(offsets[m] + j))
                if self.of_word(m, j) != self.of_element(image):
                    return Verdict("representation", False, witness={"relation": list(digits(j, N, m))})
        size = ext.total_dim
        for g in range(size):
            for h in range(size):
                prod = cl.circ(ext.basis_element(*ext.locate(g)), ext.basis_element(*ext.locate(h)))
                if self.of_basis(g) @ self.of_basis(h) != self.of_element(prod):
                    return Verdict("representation", False, witness={"pair": [g, h]})
        return Verdict("representation", True, details={"module_dim": self.dim})

    def image_rank(self) -> Tuple[int, int]:
        """(rank of span{rho(b)}, dim of kernel of cl -> End)."""
        size = self.cl.exterior.total_dim
        d = self.dim
        cols = {}
        for g in range(size):
            m = self.of_basis(g)
            cols[g] = {i * d + j: x for j, col in m.cols.items() for i, x in col.items()}
        r = rank(ExactMatrix(d * d, size, cols))
        return r, size - r


def regular_representation(cl: CliffordAlgebra) -> Representation:
    return Representation(cl, {a: cl.left_matrix(cl.generator(a)) for a in range(cl.dim_w)})


def _subalgebra_basis(cl: CliffordAlgebra, vectors: Sequence[Vector]) -> Dict[int, List[Vector]]:
    """Per degree, a basis (embedded tensors) of the span of classes of products of ``vectors``."""
    ext = cl.exterior
    N = cl.dim_w
    out: Dict[int, List[Vector]] = {0: [{0: ONE}]}
    words: List[Vector] = [{0: ONE}]
    for n in range(1, cl.cap + 1):
        words = [tensor_vectors(v, w, N, n - 1) for v in vectors for w in words]
        classes = [ext.degree(n).antisym.apply(w) for w in words]
        out[n] = [row for _, row in rref_rows(classes)]
        if not out[n]:
            break
    return out


@dataclass
class SpinorModel:
    cl: CliffordAlgebra
    data: SplittingData
    w1_algebra: ExteriorAlgebra
    basis: List[WedgeElement]  # S basis as ambient elements, graded
    degrees: List[int]
    action: Dict[int, ExactMatrix]
    representation: Representation
    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    quotient_map: Optional[ExactMatrix] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: WedgeElement) -> Vector:
        """Coordinates in the S basis of an ambient element lying in W1^wedge."""
        m = ExactMatrix(self.cl.exterior.total_dim, self.dim, {j: b.to_global() for j, b in enumerate(self.basis)})
        c = solve(m, x.to_global())
        if c is None:
            raise ArithmeticError("element is not in W1^wedge")
        return c

    def unit(self) -> Vector:
        return {0: ONE}

    def act(self, x: WedgeElement, psi: Vector) -> Vector:
        return self.representation.of_element(x).apply(psi)


def _ambient_action(cl: CliffordAlgebra, data: SplittingData, x: Vector, xi: WedgeElement) -> WedgeElement:
    x1 = cl.vector(data.w1_part(x))
    x2 = cl.vector(data.w2_part(x))
    return wedge(x1, xi) + cl.iota(x2, xi)


def build_spinor(cl: CliffordAlgebra, s: Splitting) -> SpinorModel:
    verdict, data = validate_splitting(cl, s)
    if data is None:
        raise ValueError(f"invalid splitting: {verdict.witness}")
    ext = cl.exterior
    if not ext.exhausted:
        raise CapExceededError("the Clifford algebra is not exhausted within cap; spinor construction refused")
    N = cl.dim_w
    b1 = BraidOperator(data.restricted_braid(1), s.d1, check=False)
    w1 = ExteriorAlgebra(OperatorBank(b1, cl.cap))
    if not w1.exhausted:
        raise CapExceededError("W1^wedge is not exhausted within cap")
    # embed the intrinsic W1^wedge basis into the ambient algebra
    P1 = ExactMatrix.from_columns(N, list(s.w1_basis))
    basis: List[WedgeElement] = []
    degrees: List[int] = []
    for n in range(w1.top + 1):
        Pn = ExactMatrix.identity(1)
        for _ in range(n):
            Pn = Pn.kron(P1)
        for v in w1.degree(n).basis:
            basis.append(ext.from_embedded(n, Pn.apply(v)))
            degrees.append(n)
    sm = SpinorModel(cl, data, w1, basis, degrees, {}, None)  # type: ignore[arg-type]
    ambient = _subalgebra_basis(cl, s.w1_basis)
    same = all(len(ambient.get(n, [])) == w1.dims[n] for n in range(cl.cap + 1))
    sm.verdicts["w1_embedding"] = Verdict(
        "w1_embedding", same, details={"intrinsic": w1.dims[: w1.top + 1], "ambient": [len(ambient.get(n, [])) for n in range(w1.top + 1)]}
    )
    for a in range(N):
        cols = {j: sm.coords(_ambient_action(cl, data, {a: ONE}, b)) for j, b in enumerate(basis)}
        sm.action[a] = ExactMatrix(sm.dim, sm.dim, cols)
    sm.representation = Representation(cl, sm.action)
    sm.verdicts["intrinsic_contraction"] = _check_intrinsic(sm, P1)
    sm.verdicts["representation"] = sm.representation.check()
    quotient, qmap = _quotient_model(sm)
    sm.verdicts["quotient_model"] = quotient
    sm.quotient_map = qmap
    return sm


def _check_intrinsic(sm: SpinorModel, P1: ExactMatrix) -> Verdict:
    """x2 acting by the ambient contraction equals the W1-intrinsic contraction via W2 = W1*."""
    cl, data, w1 = sm.cl, sm.data, sm.w1_algebra
    dual = ExteriorAlgebra(w1.bank.dual, dual=True)
    s = data.splitting
    for i, v in enumerate(s.w2_basis):
        f = dual.from_embedded(1, {j: x for j, x in enumerate(data.duality.to_rows()[i]) if x != 0})
        x2 = cl.vector(v)
        for j, b in enumerate(sm.basis):
            n = sm.degrees[j]
            local = w1.basis_element(n, j - w1.offsets[n])
            got = contract(f, local)
            mapped = cl.exterior.zero()
            for m, coords in got.components.items():
                Pm = ExactMatrix.identity(1)
                for _ in range(m):
                    Pm = Pm.kron(P1)
                mapped = mapped + cl.exterior.from_embedded(m, Pm.apply(w1.embed_coords(m, coords)))
            if mapped != cl.iota(x2, b):
                return Verdict("intrinsic_contraction", False, witness={"w2_vector": i, "spinor": j})
    return Verdict("intrinsic_contraction", True)


def _row_reduce_modulo(rows: List[Tuple[int, Vector]], v: Vector) -> Vector:
    out = dict(v)
    for p, row in rows:
        c = out.get(p)
        if c is not None:
            vec_axpy(out, row, -c)
    return out


def k_basis(cl: CliffordAlgebra, data: SplittingData) -> List[WedgeElement]:
    """Basis of K = W2^wedge inside cl (classes of products of W2 vectors)."""
    ext = cl.exterior
    out = []
    for n, vs in sorted(_subalgebra_basis(cl, data.splitting.w2_basis).items()):
        out.extend(ext.from_embedded(n, v) for v in vs)
    return out


def _quotient_model(sm: SpinorModel) -> Tuple[Verdict, Optional[ExactMatrix]]:
    """cl / cl o K_+ with its left action, and the module map to S sending [1] to 1_S."""
    cl = sm.cl
    ext = cl.exterior
    size = ext.total_dim
    kplus = [k for k in k_basis(cl, sm.data) if k.degree() > 0]
    ideal = []
    for g in range(size):
        b = ext.basis_element(*ext.locate(g))
        ideal.extend(cl.circ(b, k).to_global() for k in kplus)
    rows = rref_rows(ideal)
    pivots = {p for p, _ in rows}
    qbasis = [g for g in range(size) if g not in pivots]
    qindex = {g: i for i, g in enumerate(qbasis)}
    details = {"quotient_dim": len(qbasis), "spinor_dim": sm.dim}
    # character: kappa(1) = 1, kappa(K_+) = 0 means [1] survives and [k] = 0
    unit_class = _row_reduce_modulo(rows, ext.one().to_global())
    if not unit_class:
        return Verdict("quotient_model", False, witness="1 lies in cl o K_+", details=details), None

    def q_coords(v: Vector) -> Vector:
        return {qindex[g]: c for g, c in _row_reduce_modulo(rows, v).items()}

    # pi: cl -> S, b |-> b . 1_S, vanishes on cl o K_+ and induces Phi on the quotient
    rep = sm.representation
    pi_cols = {g: rep.of_basis(g).apply(sm.unit()) for g in range(size)}
    for v in ideal:
        image: Vector = {}
        for g, c in v.items():
            vec_axpy(image, pi_cols[g], c)
        if image:
            return Verdict("quotient_model", False, witness="cl o K_+ does not kill 1_S", details=details), None
    phi = ExactMatrix(sm.dim, len(qbasis), {i: pi_cols[g] for i, g in enumerate(qbasis)})
    if phi.nrows != phi.ncols or rank(phi) != phi.nrows:
        return Verdict("quotient_model", False, witness={"phi_rank": rank(phi)}, details=details), None
    for a in range(cl.dim_w):
        left = cl.left_matrix(cl.generator(a))
        qa = ExactMatrix(len(qbasis), len(qbasis), {i: q_coords(left.column(g)) for i, g in enumerate(qbasis)})
        if phi @ qa != sm.action[a] @ phi:
            return Verdict("quotient_model", False, witness={"intertwining_generator": a}, details=details), None
    return Verdict("quotient_model", True, details=details), phi


def cartan_map(cl: CliffordAlgebra, s: Splitting) -> Tuple[ExactMatrix, Verdict]:
    """mu(u (x) v) = u o v over (W1^wedge basis) x (W2^wedge basis), plus the rewriting relation."""
    verdict, data = validate_splitting(cl, s)
    if data is None:
        raise ValueError(f"invalid splitting: {verdict.witness}")
    ext = cl.exterior
    if not ext.exhausted:
        raise CapExceededError("Cartan map needs a finite Clifford algebra within cap")
    w1 = [ext.from_embedded(n, v) for n, vs in sorted(_subalgebra_basis(cl, s.w1_basis).items()) for v in vs]
    w2 = k_basis(cl, data)
    cols = {}
    for i, u in enumerate(w1):
        for j, v in enumerate(w2):
            cols[i * len(w2) + j] = cl.circ(u, v).to_global()
    mu = ExactMatrix(ext.total_dim, len(w1) * len(w2), cols)
    r = rank(mu)
    square = mu.nrows == mu.ncols
    details = {"dim_w1_wedge": len(w1), "dim_w2_wedge": len(w2), "dim_cl": ext.total_dim, "rank": r}
    N = cl.dim_w
    S = cl.bank.braiding.matrix
    for u in s.w1_basis:
        for v in s.w2_basis:
            vu = tensor_vectors(v, u, N, 1)
            lhs = cl.element_of_tensor(vu, 2) + cl.element_of_tensor(S.apply(vu), 2) - cl.one().scale(cl.form.on_tensor(vu))
            if not lhs.is_zero():
                return mu, Verdict("cartan_map", False, witness={"rewriting": {"u": u, "v": v}}, details=details)
    passed = square and r == mu.ncols
    return mu, Verdict("cartan_map", passed, witness=None if passed else "mu is not bijective", details=details)


def verify_spinor_theorem(sm: SpinorModel) -> Verdict:
    """Faithful (kernel rank 0) and irreducible (image rank dim S^2, Burnside)."""
    image, kernel = sm.representation.image_rank()
    details = {"dim_cl": sm.cl.exterior.total_dim, "dim_S": sm.dim, "image_rank": image, "kernel_rank": kernel}
    faithful = Verdict("faithful", kernel == 0, details={"kernel_rank": kernel})
    irreducible = Verdict("irreducible", image == sm.dim**2, details={"image_rank": image})
    cyclic = []
    for j in range(sm.dim):
        try:
            cyclic_witness(sm, {j: ONE})
            cyclic.append(Verdict("cyclic", True))
        except ArithmeticError as exc:
            cyclic.append(Verdict("cyclic", False, witness={"spinor": j, "error": str(exc)}))
    return all_passed("spinor_theorem", [faithful, irreducible, *cyclic, *sm.verdicts.values()], **details)


def cyclic_witness(sm: SpinorModel, psi: Vector) -> WedgeElement:
    """phi in K with phi . psi = 1_S, from the top-degree part of psi.

    Elements of K_d lower degree by d, so only the degree-d part of psi reaches
    the scalars and the lower parts are annihilated.
    """
    if not psi:
        raise ValueError("the zero spinor is not cyclic")
    top = max(sm.degrees[j] for j in psi)
    top_part = {j: c for j, c in psi.items() if sm.degrees[j] == top}
    k_top = [k for k in k_basis(sm.cl, sm.data) if k.degree() == top]
    rep = sm.representation
    cols = {i: rep.of_element(k).apply(top_part) for i, k in enumerate(k_top)}
    coeffs = solve(ExactMatrix(sm.dim, len(k_top), cols), sm.unit())
    if coeffs is None:
        raise ArithmeticError("no element of K maps psi to 1_S")
    phi = sm.cl.exterior.zero()
    for i, c in sorted(coeffs.items()):
        phi = phi + k_top[i].scale(c)
    if sm.act(phi, psi) != sm.unit():
        raise ArithmeticError("cyclic witness failed verification")
    return phi


@dataclass
class ModuleMap:
    matrix: ExactMatrix
    verdict: Verdict


def universal_embedding(sm: SpinorModel, module: Representation, v: Vector) -> ModuleMap:
    """The unique module map rho: S -> V with rho(1_S) = v, for v killed by W2."""
    cl = sm.cl
    check = module.check()
    if not check.passed:
        raise ValueError(f"not a cl-module: {check.witness}")
    for i, w in enumerate(sm.data.splitting.w2_basis):
        if module.of_element(cl.vector(w)).apply(v):
            raise ValueError(f"vector is not killed by W2 (basis vector {i})")
    size = cl.exterior.total_dim
    rep = sm.representation
    orbit_s = ExactMatrix(sm.dim, size, {g: rep.of_basis(g).apply(sm.unit()) for g in range(size)})
    orbit_v = {g: module.of_basis(g).apply(v) for g in range(size)}
    cols = {}
    for j in range(sm.dim):
        c = solve(orbit_s, {j: ONE})
        image: Vector = {}
        for g, x in c.items():
            vec_axpy(image, orbit_v[g], x)
        cols[j] = image
    phi = ExactMatrix(module.dim, sm.dim, cols)
    verdicts = []
    well_defined = all(phi.apply(orbit_s.column(g)) == orbit_v[g] for g in range(size))
    verdicts.append(Verdict("well_defined", well_defined))
    intertwines = all(phi @ sm.action[a] == module.generators[a] @ phi for a in range(cl.dim_w))
    verdicts.append(Verdict("intertwining", intertwines))
    r = rank(phi)
    verdicts.append(Verdict("injective", r == sm.dim, details={"rank": r}))
    orbit_rank = rank(ExactMatrix(module.dim, size, orbit_v))
    cyclic = orbit_rank == module.dim
    details = {"rank": r, "orbit_rank": orbit_rank, "module_dim": module.dim, "isomorphism": cyclic and r == module.dim}
    return ModuleMap(phi, all_passed("universal_embedding", verdicts, **details))


def volume_elements(cl: CliffordAlgebra, s: Splitting) -> List[WedgeElement]:
    """Basis of {omega in W2^wedge : w o omega = 0 for all w in W2}."""
    verdict, data = validate_splitting(cl, s)
    if data is None:
        raise ValueError(f"invalid splitting: {verdict.witness}")
    ext = cl.exterior
    kb = k_basis(cl, data)
    rows = ext.total_dim
    stacked = {}
    for j, k in enumerate(kb):
        col: Vector = {}
        for i, w in enumerate(s.w2_basis):
            prod = cl.circ(cl.vector(w), k).to_global()
            col.update({i * rows + g: x for g, x in prod.items()})
        stacked[j] = col
    kernel = nullspace_basis(ExactMatrix(rows * len(s.w2_basis), len(kb), stacked))
    out = []
    for vec in kernel:
        omega = ext.zero()
        for j, c in sorted(vec.items()):
            omega = omega + kb[j].scale(c)
        out.append(omega)
    return out


def left_ideal_basis(cl: CliffordAlgebra, omega: WedgeElement) -> List[Vector]:
    """Echelon basis of I_omega = cl o omega (global coordinates)."""
    ext = cl.exterior
    gens = [cl.circ(ext.basis_element(*ext.locate(g)), omega).to_global() for g in range(ext.total_dim)]
    return [row for _, row in rref_rows(gens)]
