import pytest

from ybtruss import census
from ybtruss.solution import classify

ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def census2_all():
    return census.enumerate_solutions(census.SearchSpec(2, require_lnd=False)).solutions


@pytest.fixture(scope="session")
def census_lnd():
    """Full left non-degenerate census for n = 1, 2, 3, keyed by n."""
    return {n: census.enumerate_solutions(census.SearchSpec(n)).solutions for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def census_flat(census_lnd):
    return [S for n in (1, 2, 3) for S in census_lnd[n]]


@pytest.fixture(scope="session")
def census_bij_nondeg(census_flat):
    out = []
    for S in census_flat:
        f = classify(S)
        if f.lnd and f.rnd and f.bijective:
            out.append(S)
    return out


@pytest.fixture
def record():
    def _record(number, ok, detail=""):
        ACCEPTANCE[number] = (ok, detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
