from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.clifford import CliffordAlgebra, ScalarProduct
from bce.exactlin import ONE, ExactMatrix, GaussianRational, rank, rref_rows
from bce.exterior import ExteriorAlgebra
from bce.spinor import (
    Representation,
    Splitting,
    build_spinor,
    cartan_map,
    cyclic_witness,
    k_basis,
    left_ideal_basis,
    regular_representation,
    universal_embedding,
    validate_splitting,
    verify_spinor_theorem,
    volume_elements,
)
from conftest import clifford, rationals

STD = {"flip2": ([0], [1]), "flip4": ([0, 1], [2, 3]), "hsplit": ([0, 1], [2, 3])}


def splitting(name):
    return Splitting.from_indices(*STD[name])


@lru_cache(maxsize=None)
def spinor(name):
    return build_spinor(clifford(name), splitting(name))


@lru_cache(maxsize=None)
def hsplit_gaussian():
    q = ONE + GaussianRational(0, 1)
    b = BraidOperator(fx.hecke_split(q), 4)
    cl = CliffordAlgebra(ExteriorAlgebra(OperatorBank(b, 5)), ScalarProduct(fx.evaluation_form()))
    return build_spinor(cl, splitting("hsplit"))


# -- splittings ----------------------------------------------------------------


def test_standard_splitting_is_valid(flip2):
    v, data = validate_splitting(flip2, splitting("flip2"))
    assert v.passed and data.duality == ExactMatrix.from_rows([[1]])


@pytest.mark.parametrize(
    "w1, w2, failing",
    [
        ([0], [0], "direct_sum"),
        ([0, 1], [], "isotropic"),
    ],
)
def test_bad_splittings_fail(flip2, w1, w2, failing):
    v, data = validate_splitting(flip2, Splitting.from_indices(w1, w2))
    assert not v.passed and data is None
    assert v.witness["name"] == failing


def test_non_isotropic_splitting_fails():
    f = ExactMatrix.from_rows([[1, 0], [1, 0]])
    cl = CliffordAlgebra(clifford("flip2").exterior, ScalarProduct(f))
    v, _ = validate_splitting(cl, splitting("flip2"))
    assert not v.passed


def test_zero_form_is_refused():
    cl = clifford("hecke2")
    v, data = validate_splitting(cl, Splitting.from_indices([0], [1]))
    assert not v.passed
    with pytest.raises(ValueError):
        build_spinor(cl, Splitting.from_indices([0], [1]))


# -- Cartan map ----------------------------------------------------------------


@pytest.mark.parametrize("name", ["flip2", "flip4", "hsplit"])
def test_cartan_map_is_bijective(name):
    cl = clifford(name)
    mu, v = cartan_map(cl, splitting(name))
    assert v.passed, v.witness
    assert mu.ncols == cl.exterior.total_dim == rank(mu)


def test_cartan_map_values(flip2):
    mu, _ = cartan_map(flip2, splitting("flip2"))
    ext = flip2.exterior
    # columns are u_i (x) v_j with u in (1, e0), v in (1, e1)
    assert mu.column(0) == ext.one().to_global()
    assert mu.column(2) == flip2.generator(0).to_global()
    assert mu.column(1) == flip2.generator(1).to_global()


# -- the spinor module ---------------------------------------------------------


def test_flip2_actions():
    sm = spinor("flip2")
    assert sm.dim == 2 and sm.degrees == [0, 1]
    assert sm.action[0] == ExactMatrix.from_rows([[0, 0], [1, 0]])
    assert sm.action[1] == ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert sm.act(clifford("flip2").generator(1), sm.unit()) == {}


@pytest.mark.parametrize("name", ["flip2", "flip4", "hsplit"])
def test_spinor_theorem(name):
    sm = spinor(name)
    v = verify_spinor_theorem(sm)
    assert v.passed, v.witness
    assert v.details["image_rank"] == sm.dim**2 == clifford(name).exterior.total_dim
    assert v.details["kernel_rank"] == 0
    assert sm.verdicts["quotient_model"].passed


def test_gaussian_hecke_parameter():
    sm = hsplit_gaussian()
    assert sm.dim == 4
    assert verify_spinor_theorem(sm).passed


def test_quotient_model_map_is_invertible():
    sm = spinor("flip4")
    assert sm.quotient_map is not None and rank(sm.quotient_map) == sm.dim


# -- cyclicity -----------------------------------------------------------------


def test_cyclic_witness_examples(flip2):
    sm = spinor("flip2")
    assert cyclic_witness(sm, {0: ONE}) == flip2.one()
    assert cyclic_witness(sm, {1: ONE}) == flip2.generator(1)
    assert cyclic_witness(sm, {0: ONE, 1: ONE}) == flip2.generator(1)
    with pytest.raises(ValueError):
        cyclic_witness(sm, {})


@settings(max_examples=20)
@given(st.lists(rationals, min_size=4, max_size=4).filter(any))
def test_every_nonzero_spinor_is_cyclic(coeffs):
    sm = spinor("flip4")
    psi = {j: c for j, c in enumerate(coeffs) if c != 0}
    phi = cyclic_witness(sm, psi)
    kb = rref_rows([k.to_global() for k in k_basis(sm.cl, sm.data)])
    assert rref_rows([*(r for _, r in kb), phi.to_global()]) == kb  # phi lies in K
    assert sm.act(phi, psi) == sm.unit()


# -- universal property --------------------------------------------------------


def test_universal_embedding_identity():
    sm = spinor("flip4")
    m = universal_embedding(sm, sm.representation, sm.unit())
    assert m.verdict.passed and m.matrix == ExactMatrix.identity(sm.dim)
    assert m.verdict.details["isomorphism"]


def block_diag(a, b):
    n, m = a.nrows, b.nrows
    rows = [list(r) + [0] * m for r in a.to_rows()] + [[0] * n + list(r) for r in b.to_rows()]
    return ExactMatrix.from_rows(rows)


def test_universal_embedding_into_direct_sum():
    sm = spinor("flip2")
    twice = Representation(sm.cl, {a: block_diag(m, m) for a, m in sm.action.items()})
    emb = universal_embedding(sm, twice, {0: ONE})
    assert emb.verdict.passed and not emb.verdict.details["isomorphism"]
    assert emb.matrix == ExactMatrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]])
    diag = universal_embedding(sm, twice, {0: ONE, 2: ONE})
    assert diag.matrix == ExactMatrix.from_rows([[1, 0], [0, 1], [1, 0], [0, 1]])


def test_universal_embedding_rejects_vectors_not_killed_by_w2():
    sm = spinor("flip2")
    with pytest.raises(ValueError):
        universal_embedding(sm, sm.representation, {1: ONE})


@pytest.mark.parametrize("name", ["flip2", "flip4", "hsplit"])
def test_volume_element_ideal(name):
    cl, s = clifford(name), splitting(name)
    sm = spinor(name)
    vols = volume_elements(cl, s)
    assert len(vols) == 1
    omega = vols[0]
    assert omega.degree() == s.d2
    emb = universal_embedding(sm, regular_representation(cl), omega.to_global())
    ideal = left_ideal_basis(cl, omega)
    assert emb.verdict.passed and len(ideal) == sm.dim
    image = [emb.matrix.column(j) for j in range(sm.dim)]
    assert rref_rows(image) == rref_rows(ideal)
