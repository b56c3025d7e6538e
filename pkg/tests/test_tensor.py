import pytest
from hypothesis import given, strategies as st

from bce import fixtures as fx
from bce.exactlin import ONE, ExactMatrix
from bce.tensor import (
    CapExceededError,
    GradedElement,
    LegOperator,
    apply_at_leg,
    digits,
    embed_at_leg,
    leg_permutation,
    tensor_vectors,
    undigits,
)
from conftest import rationals


@given(st.integers(2, 4), st.integers(0, 5), st.data())
def test_digits_roundtrip(n, degree, data):
    idx = data.draw(st.integers(0, n**degree - 1))
    ds = digits(idx, n, degree)
    assert len(ds) == degree and undigits(ds, n) == idx


def test_leg_one_is_most_significant():
    assert undigits((1, 0, 0), 2) == 4


@pytest.mark.parametrize("n, degree", [(2, 3), (3, 3), (2, 4)])
def test_apply_at_leg_matches_kron(n, degree):
    op = fx.hecke(n, 3)
    for pos in range(1, degree):
        left = ExactMatrix.identity(n ** (pos - 1))
        right = ExactMatrix.identity(n ** (degree - pos - 1))
        oracle = left.kron(op).kron(right)
        assert embed_at_leg(LegOperator(n, 2, 2, op), pos, degree).matrix == oracle


@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_leg_permutation_is_a_homomorphism(p, q):
    # moving legs by q then by p moves them by p o q
    pq = tuple(p[q[x] - 1] for x in range(3))
    assert leg_permutation(2, tuple(p)) @ leg_permutation(2, tuple(q)) == leg_permutation(2, pq)


def test_flip_is_the_adjacent_leg_swap():
    assert leg_permutation(3, (2, 1)) == fx.flip(3)


@given(st.dictionaries(st.integers(0, 3), rationals), st.dictionaries(st.integers(0, 7), rationals))
def test_graded_tensor_is_bilinear(x, y):
    x = {k: v for k, v in x.items() if v != 0}
    y = {k: v for k, v in y.items() if v != 0}
    a = GradedElement(2, 5, {2: x})
    b = GradedElement(2, 5, {3: y})
    assert (a + a).tensor(b) == a.tensor(b).scale(2)
    assert a.tensor(b).components.get(5, {}) == {k: v for k, v in tensor_vectors(x, y, 2, 3).items() if v != 0}


def test_graded_tensor_respects_cap():
    a = GradedElement.basis_tensor(2, 3, (0, 1))
    with pytest.raises(CapExceededError):
        a.tensor(a)
    one = GradedElement.one(2, 3)
    assert one.tensor(a) == a == a.tensor(one)


def test_leg_operator_shape_check():
    with pytest.raises(ValueError):
        LegOperator(2, 2, 2, ExactMatrix.identity(3))
