from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bce.exactlin import (
    ONE,
    ZERO,
    ExactMatrix,
    GaussianRational,
    ScalarSyntaxError,
    format_scalar,
    inverse,
    nullspace_basis,
    parse_scalar,
    rank,
    solve,
    to_scalar,
)
from conftest import rationals, scalars

I = GaussianRational(0, 1)


def as_pair(x):
    return Fraction(int(x.real.numerator), int(x.real.denominator)), Fraction(int(x.imag.numerator), int(x.imag.denominator))


@pytest.mark.parametrize(
    "text, canonical",
    [("3", "3"), ("-6/4", "-3/2"), (" 3/6 - 1/2*i ", "1/2-1/2*i"), ("i", "0+1*i"), ("-i", "0-1*i"), ("2*i", "0+2*i"), ("0-1*i", "0-1*i"), ("1+0*i", "1")],
)
def test_parse_format_examples(text, canonical):
    assert format_scalar(parse_scalar(text)) == canonical


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1.5", "1//2", "3+"])
def test_parse_rejects(bad):
    with pytest.raises((ScalarSyntaxError, ZeroDivisionError)):
        parse_scalar(bad)


def test_real_results_normalise_to_mpq():
    z = (1 + I) * (1 - I)
    assert z == 2 and not isinstance(z, GaussianRational)
    assert I * I == -1


@given(scalars)
def test_format_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(scalars, scalars, scalars)
def test_field_laws_against_fraction_pairs(a, b, c):
    # oracle: complex arithmetic on pairs of Fractions
    def mul(p, q):
        return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])

    assert as_pair(a * b) == mul(as_pair(a), as_pair(b))
    assert as_pair(a + b) == (as_pair(a)[0] + as_pair(b)[0], as_pair(a)[1] + as_pair(b)[1])
    assert a * (b + c) == a * b + a * c
    if b != 0:
        assert (a / b) * b == a


def matrices(n_rows, n_cols, elements=rationals):
    return st.lists(st.lists(elements, min_size=n_cols, max_size=n_cols), min_size=n_rows, max_size=n_rows).map(
        ExactMatrix.from_rows
    )


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c, scalars))))
def test_rank_nullity_and_kernel(m):
    kernel = nullspace_basis(m)
    assert rank(m) + len(kernel) == m.ncols
    for v in kernel:
        assert m.apply(v) == {}


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n, scalars)))
def test_inverse_or_singular(m):
    try:
        inv = inverse(m)
    except ZeroDivisionError:
        assert rank(m) < m.nrows
        return
    assert m @ inv == ExactMatrix.identity(m.nrows)
    assert inv @ m == ExactMatrix.identity(m.nrows)


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))), st.data())
def test_solve_consistent_systems(m, data):
    x = {j: data.draw(rationals) for j in range(m.ncols)}
    x = {j: v for j, v in x.items() if v != 0}
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None and m.apply(sol) == b


def test_solve_inconsistent():
    m = ExactMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(m, {0: ONE}) is None


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_kron_mixed_product(a, b, c):
    # (A (x) C)(B (x) I) == (AB) (x) C
    lhs = a.kron(c) @ b.kron(ExactMatrix.identity(2))
    assert lhs == (a @ b).kron(c)


def test_entry_bounds():
    m = ExactMatrix.identity(2)
    with pytest.raises(IndexError):
        m.entry(2, 0)
    assert m.entry(1, 1) == ONE and m.entry(0, 1) == ZERO


def test_to_scalar_rejects_floats():
    with pytest.raises(TypeError):
        to_scalar(0.5)
