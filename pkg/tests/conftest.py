from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.clifford import CliffordAlgebra, ScalarProduct
from bce.exactlin import GaussianRational, to_scalar
from bce.exterior import ExteriorAlgebra

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# name -> (braid matrix factory, dim, form factory, cap)
SETUPS = {
    "flip2": (lambda: fx.flip(2), 2, lambda: fx.hyperbolic_form(2), 4),
    "flip3": (lambda: fx.flip(3), 3, lambda: fx.zero_form(3), 4),
    "flip4": (lambda: fx.flip(4), 4, lambda: fx.hyperbolic_form(4), 5),
    "negflip2": (lambda: fx.neg_flip(2), 2, lambda: fx.hyperbolic_form(2), 4),
    "hecke2": (lambda: fx.hecke(2, 2), 2, lambda: fx.zero_form(2), 4),
    "hecke3": (lambda: fx.hecke(3, 2), 3, lambda: fx.zero_form(3), 4),
    "hsplit": (lambda: fx.hecke_split(2), 4, fx.evaluation_form, 5),
}


@lru_cache(maxsize=None)
def braid(name):
    m, n, _, _ = SETUPS[name]
    return BraidOperator(m(), n)


@lru_cache(maxsize=None)
def exterior(name, cap=None):
    return ExteriorAlgebra(OperatorBank(braid(name), SETUPS[name][3] if cap is None else cap))


@lru_cache(maxsize=None)
def dual_exterior(name, cap=None):
    return ExteriorAlgebra(exterior(name, cap).bank.dual, dual=True)


@lru_cache(maxsize=None)
def clifford(name, cap=None):
    return CliffordAlgebra(exterior(name, cap), ScalarProduct(SETUPS[name][2]()))


rationals = st.builds(lambda a, b: to_scalar(f"{a}/{b}"), st.integers(-9, 9), st.integers(1, 5))
gaussians = st.builds(lambda a, b: a + b * GaussianRational(0, 1), rationals, rationals)
scalars = st.one_of(rationals, gaussians)


@pytest.fixture
def flip2():
    return clifford("flip2")


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
