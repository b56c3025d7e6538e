"""Braided exterior algebras realised as im(A) inside the tensor algebra.

Degree-n elements are stored by coordinates over the reduced echelon basis of
im(A_n); since every basis vector is 1 at its own pivot and 0 at the others,
the coordinates of any element of im(A_n) are its entries at the pivots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .braid import OperatorBank
from .exactlin import ONE, ZERO, ExactMatrix, Vector, column_space_basis, inverse, pivot_columns, vec_axpy, vec_scale
from .tensor import CapExceededError, digits, split_vector, tensor_vectors, undigits
from .verdict import Verdict

__all__ = [
    "ExteriorAlgebra",
    "WedgeElement",
    "build_exterior",
    "build_dual_exterior",
    "contract_tensor",
    "pair_tensors",
    "apply_left",
    "apply_right",
    "wedge",
    "lift",
    "pairing",
    "contract",
    "check_leibniz",
    "check_transpose",
    "check_pairing_descent",
    "check_wedge_associativity",
    "check_braiding_multiplicativity",
]


@dataclass
class _Degree:
    antisym: ExactMatrix
    pivots: List[int]
    basis: List[Vector]
    lifts: List[Vector]


def apply_left(op: ExactMatrix, v: Vector, n_dim: int, right_degree: int) -> Vector:
    """(op (x) id_{right_degree}) v."""
    out: Vector = {}
    shift = n_dim**right_degree
    for left, part in split_vector(v, n_dim, right_degree).items():
        col = op.cols.get(left)
        if col:
            for i, x in col.items():
                vec_axpy(out, {i * shift + r: y for r, y in part.items()}, x)
    return out


def apply_right(op: ExactMatrix, v: Vector, n_dim: int, right_degree: int) -> Vector:
    """(id (x) op) v where op acts on the last ``right_degree`` legs."""
    out: Vector = {}
    shift_in = n_dim**right_degree
    shift_out = op.nrows
    for idx, x in v.items():
        left, right = divmod(idx, shift_in)
        col = op.cols.get(right)
        if col:
            vec_axpy(out, {left * shift_out + i: y for i, y in col.items()}, x)
    return out


def _reverse_index(idx: int, n_dim: int, degree: int) -> int:
    return undigits(reversed(digits(idx, n_dim, degree)), n_dim)


def pair_tensors(f: Vector, x: Vector, n_dim: int, degree: int):
    """<f, x> with f_1 .. f_n paired against the legs of x in reverse order."""
    total = ZERO
    for idx, c in x.items():
        y = f.get(_reverse_index(idx, n_dim, degree))
        if y is not None:
            total = total + y * c
    return total


def contract_tensor(f: Vector, f_degree: int, x: Vector, x_degree: int, n_dim: int) -> Vector:
    """(f (x) id)(x): f in W*^{(x)r} eats the first r legs of x via the reversed pairing."""
    if f_degree > x_degree:
        return {}
    rest = x_degree - f_degree
    out: Vector = {}
    for left, part in split_vector(x, n_dim, rest).items():
        c = f.get(_reverse_index(left, n_dim, f_degree))
        if c is not None:
            vec_axpy(out, part, c)
    return out


class ExteriorAlgebra:
    """W^wedge = im(A) up to ``bank.cap``; ``dual=True`` marks an algebra over W*."""

    def __init__(self, bank: OperatorBank, dual: bool = False):
        self.bank = bank
        self.dual = dual
        self.dim_w = bank.dim_w
        self.cap = bank.cap
        self._deg: Dict[int, _Degree] = {}
        self.dims: List[int] = []
        for n in range(self.cap + 1):
            self.dims.append(len(self.degree(n).basis))
        zeros = [n for n, d in enumerate(self.dims) if d == 0]
        self.top: Optional[int] = zeros[0] - 1 if zeros else None
        self.exhausted = bool(zeros) and all(d == 0 for d in self.dims[zeros[0]:])
        self.offsets = list(itertools.accumulate([0] + self.dims))

    # -- per-degree data -----------------------------------------------------

    def degree(self, n: int) -> _Degree:
        if n > self.cap:
            raise CapExceededError(f"degree {n} above cap {self.cap}")
        if n not in self._deg:
            a = self.bank.antisym(n).matrix
            reduced = column_space_basis(a)
            pivots = [p for p, _ in reduced]
            basis = [v for _, v in reduced]
            indep = pivot_columns(a)
            # A e_p = sum_j C[j,p] b_j with C[j,p] the pivot entries; lifts of b_j are C^{-1} columns
            change = ExactMatrix.from_columns(
                len(basis), [{j: c for j, pv in enumerate(pivots) if (c := a.column(p).get(pv)) is not None} for p in indep]
            )
            inv = inverse(change) if basis else ExactMatrix.zeros(0, 0)
            lifts = [{indep[p]: x for p, x in inv.column(j).items()} for j in range(len(basis))]
            self._deg[n] = _Degree(a, pivots, basis, lifts)
        return self._deg[n]

    @property
    def degree_basis(self) -> Dict[int, List[Vector]]:
        return {n: self.degree(n).basis for n in range(self.cap + 1)}

    @property
    def total_dim(self) -> Optional[int]:
        return sum(self.dims) if self.exhausted else None

    def is_zero_degree(self, n: int) -> bool:
        """True if W^wedge n is known to vanish (including above cap when exhausted)."""
        if n <= self.cap:
            return self.dims[n] == 0
        return self.exhausted

    # -- coordinates ---------------------------------------------------------

    def project(self, n: int, tensor: Vector, check: bool = True) -> Dict[int, object]:
        """Coordinates of an element of im(A_n)."""
        d = self.degree(n)
        coords = {j: c for j, p in enumerate(d.pivots) if (c := tensor.get(p)) is not None}
        if check:
            back = self.embed_coords(n, coords)
            if back != tensor:
                raise ArithmeticError(f"tensor is not in im(A_{n})")
        return coords

    def cls(self, n: int, tensor: Vector) -> Dict[int, object]:
        """Coordinates of the class [tensor] = A_n tensor."""
        return self.project(n, self.degree(n).antisym.apply(tensor), check=False)

    def embed_coords(self, n: int, coords) -> Vector:
        out: Vector = {}
        basis = self.degree(n).basis
        for j, c in coords.items():
            vec_axpy(out, basis[j], c)
        return out

    def lift_coords(self, n: int, coords) -> Vector:
        out: Vector = {}
        lifts = self.degree(n).lifts
        for j, c in coords.items():
            vec_axpy(out, lifts[j], c)
        return out

    def element(self, n: int, coords) -> "WedgeElement":
        return WedgeElement(self, {n: dict(coords)})

    def basis_element(self, n: int, j: int) -> "WedgeElement":
        return WedgeElement(self, {n: {j: ONE}})

    def from_tensor(self, n: int, tensor: Vector) -> "WedgeElement":
        """The class of an arbitrary tensor."""
        return WedgeElement(self, {n: self.cls(n, tensor)})

    def from_embedded(self, n: int, tensor: Vector) -> "WedgeElement":
        return WedgeElement(self, {n: self.project(n, tensor)})

    def one(self) -> "WedgeElement":
        return self.basis_element(0, 0)

    def zero(self) -> "WedgeElement":
        return WedgeElement(self, {})

    def generator(self, i: int) -> "WedgeElement":
        return self.from_embedded(1, {i: ONE})

    def basis_elements(self, max_degree: Optional[int] = None) -> Iterator["WedgeElement"]:
        top = self.cap if max_degree is None else min(max_degree, self.cap)
        for n in range(top + 1):
            for j in range(self.dims[n]):
                yield self.basis_element(n, j)

    def global_index(self, n: int, j: int) -> int:
        return self.offsets[n] + j

    def locate(self, g: int) -> Tuple[int, int]:
        for n in range(len(self.dims)):
            if g < self.offsets[n + 1]:
                return n, g - self.offsets[n]
        raise IndexError(g)

    # -- degree-level products on embedded tensors ---------------------------

    def wedge_tensors(self, x: Vector, n: int, y: Vector, k: int) -> Vector:
        if n + k > self.cap:
            if self.exhausted:
                return {}
            raise CapExceededError(f"wedge of degrees {n}+{k} above cap {self.cap}")
        if not x or not y:
            return {}
        b = self.bank.B(n, k).matrix
        return b.apply(tensor_vectors(x, y, self.dim_w, k))


class WedgeElement:
    """Element of an exterior algebra, by degree -> echelon coordinates."""

    __slots__ = ("algebra", "components")

    def __init__(self, algebra: ExteriorAlgebra, components: Dict[int, Dict[int, object]]):
        self.algebra = algebra
        self.components = {n: dict(c) for n, c in components.items() if c}

    def embedded(self, n: int) -> Vector:
        return self.algebra.embed_coords(n, self.components.get(n, {}))

    def degrees(self) -> List[int]:
        return sorted(self.components)

    def is_homogeneous(self) -> bool:
        return len(self.components) <= 1

    def degree(self) -> int:
        """Top degree (-1 for zero)."""
        return max(self.components, default=-1)

    def homogeneous_parts(self) -> Iterator[Tuple[int, Dict[int, object]]]:
        for n in sorted(self.components):
            yield n, self.components[n]

    def to_global(self) -> Vector:
        alg = self.algebra
        return {alg.global_index(n, j): c for n, cs in self.components.items() for j, c in cs.items()}

    @classmethod
    def from_global(cls, algebra: ExteriorAlgebra, v: Vector) -> "WedgeElement":
        comps: Dict[int, Dict[int, object]] = {}
        for g, c in v.items():
            n, j = algebra.locate(g)
            comps.setdefault(n, {})[j] = c
        return cls(algebra, comps)

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        comps = {n: dict(c) for n, c in self.components.items()}
        for n, c in other.components.items():
            comps[n] = vec_axpy(comps.get(n, {}), c)
        return WedgeElement(self.algebra, comps)

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + other.scale(-ONE)

    def __neg__(self) -> "WedgeElement":
        return self.scale(-ONE)

    def scale(self, c) -> "WedgeElement":
        return WedgeElement(self.algebra, {n: vec_scale(v, c) for n, v in self.components.items()})

    def __rmul__(self, c) -> "WedgeElement":
        return self.scale(c)

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.algebra is other.algebra and self.components == other.components

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"WedgeElement({self.components})"


def build_exterior(bank: OperatorBank) -> ExteriorAlgebra:
    return ExteriorAlgebra(bank)


def build_dual_exterior(bank: OperatorBank) -> ExteriorAlgebra:
    return ExteriorAlgebra(bank.dual, dual=True)


def wedge(x: WedgeElement, y: WedgeElement) -> WedgeElement:
    """psi ^ phi = B_nk(psi (x) phi) on embedded representatives, bilinearly extended."""
    alg = x.algebra
    comps: Dict[int, Dict[int, object]] = {}
    for n, _ in x.homogeneous_parts():
        xe = x.embedded(n)
        for k, _ in y.homogeneous_parts():
            t = alg.wedge_tensors(xe, n, y.embedded(k), k)
            if t:
                vec_axpy(comps.setdefault(n + k, {}), alg.project(n + k, t))
    return WedgeElement(alg, comps)


def lift(x: WedgeElement, n: Optional[int] = None) -> Vector:
    """A preimage under A_n of the embedded degree-n part of x."""
    if n is None:
        if not x.is_homogeneous():
            raise ValueError("lift of an inhomogeneous element needs a degree")
        n = x.degree() if x.components else 0
    return x.algebra.lift_coords(n, x.components.get(n, {}))


def pairing(f: WedgeElement, x: WedgeElement):
    """(f, x)^wedge = <f embedded, lift of x>, summed over matching degrees."""
    total = ZERO
    n_dim = x.algebra.dim_w
    for n in set(f.components) & set(x.components):
        total = total + pair_tensors(f.embedded(n), lift(x, n), n_dim, n)
    return total


def contract(f: WedgeElement, x: WedgeElement) -> WedgeElement:
    """f _| x: contract the first legs of x against a lift of f (zero below degree)."""
    alg = x.algebra
    n_dim = alg.dim_w
    comps: Dict[int, Dict[int, object]] = {}
    for r, _ in f.homogeneous_parts():
        ft = lift(f, r)
        for n, _ in x.homogeneous_parts():
            if r > n:
                continue
            t = contract_tensor(ft, r, x.embedded(n), n, n_dim)
            if t:
                vec_axpy(comps.setdefault(n - r, {}), alg.project(n - r, t))
    return WedgeElement(alg, comps)


# -- law checks ------------------------------------------------------------


def _homog_basis(alg: ExteriorAlgebra, max_degree: int):
    for n in range(min(max_degree, alg.cap) + 1):
        for j in range(alg.dims[n]):
            yield n, alg.degree(n).basis[j]


def check_leibniz(alg: ExteriorAlgebra, dual_alg: ExteriorAlgebra) -> Verdict:
    """f_|(xi eta) == f_|(xi) eta + (-1)^|xi| m s^{-1} (f_| (x) id) s (xi (x) eta) for f in W*."""
    N = alg.dim_w
    bank = alg.bank
    checked = 0
    for a in range(N):
        f = {a: ONE}
        for n, xi in _homog_basis(alg, alg.cap):
            for k, eta in _homog_basis(alg, alg.cap - n):
                lhs = contract_tensor(f, 1, alg.wedge_tensors(xi, n, eta, k), n + k, N)
                rhs: Vector = {}
                if n >= 1:
                    rhs = alg.wedge_tensors(contract_tensor(f, 1, xi, n, N), n - 1, eta, k)
                if k >= 1:
                    t = bank.mixed(n, k).matrix.apply(tensor_vectors(xi, eta, N, k))
                    t = contract_tensor(f, 1, t, k + n, N)
                    t = bank.mixed_inverse(n, k - 1).matrix.apply(t)
                    t = bank.B(n, k - 1).matrix.apply(t)
                    vec_axpy(rhs, t, -ONE if n % 2 else ONE)
                if lhs != rhs:
                    return Verdict("leibniz", False, witness={"f": a, "xi_degree": n, "eta_degree": k, "lhs": lhs, "rhs": rhs})
                checked += 1
    return Verdict("leibniz", True, details={"triples": checked})


def check_transpose(alg: ExteriorAlgebra, dual_alg: ExteriorAlgebra) -> Verdict:
    """(phi, f_|xi)^wedge == (phi ^ f, xi)^wedge over all basis triples within cap."""
    checked = 0
    for r in range(alg.cap + 1):
        for k in range(alg.cap + 1 - r):
            for fj in range(dual_alg.dims[r]):
                f = dual_alg.basis_element(r, fj)
                for pj in range(dual_alg.dims[k]):
                    phi = dual_alg.basis_element(k, pj)
                    phi_f = wedge(phi, f)
                    for xj in range(alg.dims[k + r]):
                        xi = alg.basis_element(k + r, xj)
                        lhs = pairing(phi, contract(f, xi))
                        rhs = pairing(phi_f, xi)
                        if lhs != rhs:
                            return Verdict("transpose", False, witness={"degrees": [k, r], "lhs": lhs, "rhs": rhs})
                        checked += 1
    return Verdict("transpose", True, details={"triples": checked})


def check_pairing_descent(alg: ExteriorAlgebra, dual_alg: ExteriorAlgebra) -> Verdict:
    """Contraction by any tensor in ker(A*_r) kills every element of W^wedge."""
    from .exactlin import nullspace_basis

    N = alg.dim_w
    checked = 0
    for r in range(1, alg.cap + 1):
        kernel = nullspace_basis(dual_alg.degree(r).antisym)
        for f in kernel:
            for n in range(r, alg.cap + 1):
                for xi in alg.degree(n).basis:
                    if contract_tensor(f, r, xi, n, N):
                        return Verdict("pairing_descent", False, witness={"r": r, "n": n, "f": f})
                    checked += 1
    return Verdict("pairing_descent", True, details={"pairs": checked})


def check_wedge_associativity(alg: ExteriorAlgebra) -> Verdict:
    N = alg.dim_w
    checked = 0
    for a, x in _homog_basis(alg, alg.cap):
        for b, y in _homog_basis(alg, alg.cap - a):
            xy = alg.wedge_tensors(x, a, y, b)
            for c, z in _homog_basis(alg, alg.cap - a - b):
                lhs = alg.wedge_tensors(xy, a + b, z, c)
                rhs = alg.wedge_tensors(x, a, alg.wedge_tensors(y, b, z, c), b + c)
                if lhs != rhs:
                    return Verdict("wedge_associativity", False, witness={"degrees": [a, b, c]})
                checked += 1
    return Verdict("wedge_associativity", True, details={"triples": checked})


def check_braiding_multiplicativity(alg: ExteriorAlgebra) -> Verdict:
    """The extended braiding on W^wedge (x) W^wedge is compatible with the product on either side."""
    N = alg.dim_w
    bank = alg.bank
    checked = 0
    for a, x in _homog_basis(alg, alg.cap):
        for b, y in _homog_basis(alg, alg.cap - a):
            for c, z in _homog_basis(alg, alg.cap - a - b):
                xyz = tensor_vectors(tensor_vectors(x, y, N, b), z, N, c)
                # s(m (x) id) = (id (x) m)(s (x) id)(id (x) s)
                lhs = bank.mixed(a + b, c).matrix.apply(apply_left(bank.B(a, b).matrix, xyz, N, c))
                t = apply_right(bank.mixed(b, c).matrix, xyz, N, b + c)
                t = apply_left(bank.mixed(a, c).matrix, t, N, b)
                rhs = apply_right(bank.B(a, b).matrix, t, N, a + b)
                if lhs != rhs:
                    return Verdict("braiding_multiplicativity", False, witness={"side": "left", "degrees": [a, b, c]})
                # s(id (x) m) = (m (x) id)(id (x) s)(s (x) id)
                lhs = bank.mixed(a, b + c).matrix.apply(apply_right(bank.B(b, c).matrix, xyz, N, b + c))
                t = apply_left(bank.mixed(a, b).matrix, xyz, N, c)
                t = apply_right(bank.mixed(a, c).matrix, t, N, a + c)
                rhs = apply_left(bank.B(b, c).matrix, t, N, a)
                if lhs != rhs:
                    return Verdict("braiding_multiplicativity", False, witness={"side": "right", "degrees": [a, b, c]})
                checked += 1
    return Verdict("braiding_multiplicativity", True, details={"triples": checked})
