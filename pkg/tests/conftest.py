import pytest
from mpmath import fabs, mp, mpf

from torusasym import Precision, TorusKnot


@pytest.fixture(scope="session", autouse=True)
def ambient_precision():
    """Raise the ambient mpmath precision for test-level arithmetic.

    Library calls manage their own precision; this keeps comparisons and
    oracle formulas evaluated inside tests from rounding their inputs.
    """
    old = mp.dps
    mp.dps = 60
    yield
    mp.dps = old


@pytest.fixture(scope="session")
def prec30():
    return Precision(working_digits=30, target_rel_tol=1e-12)


@pytest.fixture(scope="session")
def trefoil():
    return TorusKnot(2, 3)


@pytest.fixture(scope="session")
def t35():
    return TorusKnot(3, 5)


def assert_close(actual, expected, rel=mpf("1e-12"), abs_tol=mpf("1e-25")):
    """|actual - expected| <= max(rel * |expected|, abs_tol), with a readable message."""
    err = fabs(actual - expected)
    bound = max(rel * fabs(expected), abs_tol)
    assert err <= bound, f"got {actual}, want {expected} (err {err} > {bound})"
