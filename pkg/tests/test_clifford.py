import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.clifford import CliffordAlgebra, ScalarProduct, check_ffun
from bce.exactlin import ONE, ZERO, ExactMatrix, nullspace_basis, rref_rows, solve
from bce.exterior import ExteriorAlgebra, wedge
from bce.tensor import GradedElement
from conftest import braid, clifford, exterior, rationals

CLIFFORD_FIXTURES = ["flip2", "flip3", "negflip2", "hecke2", "hsplit"]


def form_matrices(n):
    return st.lists(rationals, min_size=n * n, max_size=n * n).map(
        lambda xs: ExactMatrix.from_rows([xs[i * n:(i + 1) * n] for i in range(n)])
    )


# -- funny functoriality ------------------------------------------------------


@given(form_matrices(3))
def test_flip_accepts_every_form(f):
    assert check_ffun(braid("flip3"), ScalarProduct(f)).passed


def test_identity_braiding_with_zero_form():
    ident = BraidOperator(ExactMatrix.identity(4), 2)
    assert check_ffun(ident, ScalarProduct(fx.zero_form(2))).passed


def test_hecke_rejects_hyperbolic_form_with_witness():
    v = check_ffun(braid("hecke2"), ScalarProduct(fx.hyperbolic_form(2)))
    assert not v.passed and len(v.witness["basis_vector"]) == 3
    with pytest.raises(ValueError):
        CliffordAlgebra(exterior("hecke2"), ScalarProduct(fx.hyperbolic_form(2)))


def test_hecke_split_evaluation_form_is_admissible():
    assert check_ffun(braid("hsplit"), ScalarProduct(fx.evaluation_form())).passed


# -- golden values on the flip, dim 2, F(e1 (x) e0) = 1 -------------------------


def test_correlation_wedge_low_degrees(flip2):
    assert flip2.correlation_wedge(0) == ExactMatrix.identity(1)
    m1 = flip2.correlation_wedge(1)
    for i in range(2):
        for j in range(2):
            assert m1.entry(j, i) == flip2.form(i, j)
    assert flip2.correlation_wedge(2) == ExactMatrix.zeros(1, 1)


def test_iota_examples(flip2):
    ext = flip2.exterior
    e0, e1 = flip2.generator(0), flip2.generator(1)
    top = ext.from_embedded(2, {1: ONE, 2: -ONE})  # e0 ^ e1
    assert flip2.iota(e1, ext.one()).is_zero()
    assert flip2.iota(e1, e0) == ext.one()
    assert flip2.iota(e0, e1).is_zero()
    assert flip2.iota(e1, top) == e1


def test_relative_contraction_examples(flip2):
    ext = flip2.exterior
    e0, e1 = flip2.generator(0), flip2.generator(1)
    top = ext.from_embedded(2, {1: ONE, 2: -ONE})
    assert flip2.relative_contraction(3, top, e0).is_zero()
    for x in (e0, e1):
        for y in (ext.one(), e0, e1, top):
            assert flip2.relative_contraction(1, x, y) == flip2.iota(x, y)
    assert flip2.relative_contraction(1, top, e0) == e0


def test_anticommutator_is_one(flip2):
    e0, e1 = flip2.generator(0), flip2.generator(1)
    assert flip2.circ(e0, e1) + flip2.circ(e1, e0) == flip2.one()
    assert flip2.total_dim == 4
    # the same relation from the tensor-algebra side
    x = GradedElement(2, 4, {1: {0: ONE}})
    y = GradedElement(2, 4, {1: {1: ONE}})
    s = flip2.tensor_circ(x, y) + flip2.tensor_circ(y, x)
    assert flip2.quotient(s) == flip2.one()


def test_lambda_degree3_matches_classical_unrolling(flip2):
    lam = flip2.lambda_map
    F = flip2.form
    for x, y, z in itertools.product(range(2), repeat=3):
        expect = GradedElement(2, 4, {3: {x * 4 + y * 2 + z: ONE}})
        expect = expect + GradedElement(2, 4, {1: {x: F(y, z)}}) - GradedElement(2, 4, {1: {y: F(x, z)}})
        expect = expect + GradedElement(2, 4, {1: {z: F(x, y)}})
        assert lam(GradedElement(2, 4, {3: {x * 4 + y * 2 + z: ONE}})) == expect


def test_tensor_circ_basics(flip2):
    one = GradedElement.one(2, 4)
    t = GradedElement(2, 4, {2: {1: ONE}, 0: {0: ONE}})
    assert flip2.tensor_circ(one, t) == t
    for a in range(2):
        for b in range(2):
            x = GradedElement(2, 4, {1: {a: ONE}})
            y = GradedElement(2, 4, {1: {b: ONE}})
            assert flip2.tensor_circ(x, y) == x.tensor(y) + one.scale(flip2.form(a, b))


# -- independent oracle: classical Clifford algebra by word straightening ------


def classical_product(F, n_dim, s, t):
    """Monomials are increasing index tuples; e_a e_b = -e_b e_a + F_ab + F_ba, e_a e_a = F_aa."""
    out = {}
    stack = [(list(s) + list(t), ONE)]
    while stack:
        word, c = stack.pop()
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a == b:
                stack.append((word[:k] + word[k + 2:], c * F(a, a)))
                break
            if a > b:
                stack.append((word[:k] + [b, a] + word[k + 2:], -c))
                sym = F(a, b) + F(b, a)
                if sym != 0:
                    stack.append((word[:k] + word[k + 2:], c * sym))
                break
        else:
            key = tuple(word)
            out[key] = out.get(key, ZERO) + c
    return {k: v for k, v in out.items() if v != 0}


@settings(max_examples=8)
@given(st.sampled_from([2, 3]), st.data())
def test_flip_matches_classical_clifford_oracle(n_dim, data):
    f = data.draw(form_matrices(n_dim))
    cl = CliffordAlgebra(ExteriorAlgebra(OperatorBank(BraidOperator(fx.flip(n_dim), n_dim), n_dim + 1)), ScalarProduct(f))
    monos = [m for k in range(n_dim + 1) for m in itertools.combinations(range(n_dim), k)]

    def mono(m):
        x = cl.one()
        for a in m:
            x = cl.circ(x, cl.generator(a))
        return x

    images = {m: mono(m) for m in monos}
    basis = ExactMatrix(cl.total_dim, len(monos), {j: images[m].to_global() for j, m in enumerate(monos)})
    assert len(rref_rows(basis.sparse_rows())) == len(monos) == cl.total_dim
    index = {m: j for j, m in enumerate(monos)}
    for s in monos:
        for t in monos:
            coords = solve(basis, cl.circ(images[s], images[t]).to_global())
            assert {monos[j]: c for j, c in coords.items()} == classical_product(cl.form, n_dim, s, t)


# -- laws ----------------------------------------------------------------------


@pytest.mark.parametrize("name", CLIFFORD_FIXTURES)
def test_product_laws(name):
    cl = clifford(name)
    for check in (
        cl.check_unit,
        cl.check_lambda,
        cl.check_deformation,
        cl.check_generator_formula,
        cl.check_iota_leibniz,
        cl.check_iota_multiplicative,
        cl.check_correlation_multiplicative,
    ):
        v = check()
        assert v.passed, (check.__name__, v.witness)


@pytest.mark.parametrize("name", CLIFFORD_FIXTURES)
def test_associativity_and_quotient_homomorphism(name):
    cl = clifford(name)
    assert cl.check_associativity(4).passed
    assert cl.check_quotient_homomorphism(4 if cl.dim_w == 2 else 3).passed


@pytest.mark.parametrize("name", CLIFFORD_FIXTURES)
def test_ideal_correspondence(name):
    v = clifford(name).check_ideal_correspondence()
    assert v.passed, v.witness
    assert v.details["dims"][0] == v.details["dims"][1] == 0


def elements(cl, max_degree):
    basis = list(cl.exterior.basis_elements(max_degree))
    return st.lists(rationals, min_size=len(basis), max_size=len(basis)).map(
        lambda cs: sum((b.scale(c) for b, c in zip(basis, cs)), cl.exterior.zero())
    )


@settings(max_examples=15)
@given(st.data())
def test_associativity_on_random_hecke_split_elements(data):
    cl = clifford("hsplit")
    x, y, z = (data.draw(elements(cl, 4)) for _ in range(3))
    assert cl.circ(cl.circ(x, y), z) == cl.circ(x, cl.circ(y, z))


@settings(max_examples=15)
@given(st.data())
def test_relative_contraction_is_lift_independent(data):
    cl = clifford("hsplit")
    ext = cl.exterior
    n = data.draw(st.integers(2, 3))  # A_1 is the identity, so lifts are unique there
    m = data.draw(st.integers(0, 4 - n))
    k = data.draw(st.integers(1, n))
    i = data.draw(st.integers(0, ext.dims[n] - 1))
    j = data.draw(st.integers(0, ext.dims[m] - 1))
    kernel = nullspace_basis(ext.degree(n).antisym)
    extra = kernel[data.draw(st.integers(0, len(kernel) - 1))]
    zl = ext.degree(n).lifts[i]
    shifted = dict(zl)
    for key, c in extra.items():
        shifted[key] = shifted.get(key, ZERO) + c
    shifted = {key: c for key, c in shifted.items() if c != 0}
    x = ext.degree(m).basis[j]
    assert cl.relative_contraction_tensor(k, zl, n, x, m) == cl.relative_contraction_tensor(k, shifted, n, x, m)


def test_hecke_split_rewriting_relation():
    cl = clifford("hsplit")
    S = cl.bank.braiding.matrix
    for u in (0, 1):
        for v in (2, 3):
            vu = {v * 4 + u: ONE}
            lhs = cl.element_of_tensor(vu, 2) + cl.element_of_tensor(S.apply(vu), 2)
            assert lhs == cl.one().scale(cl.form(v, u))


def test_zero_form_gives_the_exterior_algebra():
    cl = clifford("hecke2")
    for x in cl.exterior.basis_elements():
        for y in cl.exterior.basis_elements():
            assert cl.circ(x, y) == wedge(x, y)


# -- quadratic generators ------------------------------------------------------


@pytest.mark.parametrize("name", ["flip2", "flip3", "hecke2", "negflip2", "hsplit"])
def test_quadratic_generators(name):
    cl = clifford(name, 4)
    quads, v = cl.quadratic_generators()
    assert v.passed and v.details["applicable"], v.details
    assert v.details["tensor_ideal_is_J_F"] and v.details["circ_ideal_is_ker_A"]


def test_flip_quadratic_generators_are_classical(flip2):
    quads, _ = flip2.quadratic_generators()
    F = flip2.form
    expected = []
    for a in range(2):
        for b in range(a, 2):
            t = GradedElement(2, 4, {2: {a * 2 + b: ONE}}) + GradedElement(2, 4, {2: {b * 2 + a: ONE}})
            expected.append(t - GradedElement.one(2, 4).scale(F(a, b) + F(b, a)))

    def flat(g):
        return {(d, i): c for d, v in g.components.items() for i, c in v.items()}

    keys = sorted({k for g in quads + expected for k in flat(g)})
    idx = {k: n for n, k in enumerate(keys)}
    span = lambda gs: rref_rows([{idx[k]: c for k, c in flat(g).items()} for g in gs])
    assert span(quads) == span(expected)


def test_zero_form_quadratic_generators_are_sigma_invariants():
    quads, _ = clifford("hecke2").quadratic_generators()
    assert quads and all(set(q.components) == {2} for q in quads)


def test_non_quadratic_kernel_is_reported_not_applicable():
    b = BraidOperator(fx.hecke(2, 2).scale(2), 2)  # eigenvalues 2 and -1/2: sigma-invariants vanish
    cl = CliffordAlgebra(ExteriorAlgebra(OperatorBank(b, 3)), ScalarProduct(fx.zero_form(2)))
    quads, v = cl.quadratic_generators()
    assert not quads
    assert v.details["rescaled_eigenspaces"] == {"2": 3}
    assert v.details["applicable"] is False


def test_right_ideal_diagnostic_without_ffun():
    cl = CliffordAlgebra(exterior("hecke2"), ScalarProduct(fx.hyperbolic_form(2)), require_ffun=False)
    assert not cl.ffun.passed
    assert not cl.check_associativity().passed
    assert not cl.check_right_ideal().passed
    assert clifford("flip2").check_right_ideal().passed
