import random

import pytest
from hypothesis import settings, strategies as st

from awdaha.coeff import make_params, parse_params, sample_params

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")

MAIN_PARAMS = "1/2,2,3,5,7"


@pytest.fixture(scope="session")
def P():
    return parse_params(MAIN_PARAMS, depth=16)


@pytest.fixture(scope="session")
def P_quarter():
    # q = 1/4, (a, b, c, d) = (1, 2, 3, 4); ad q = 1, so the pack is not strict.
    return make_params("1/2", 1, 2, 3, 4, depth=12)


def packs(depth: int = 12, ultraspherical: bool = False):
    """Random nondegenerate packs, drawn through a seeded generator."""
    return st.integers(0, 2**32 - 1).map(
        lambda seed: sample_params(random.Random(seed), depth, ultraspherical))


@st.composite
def laurent_polys(draw, lo: int = -4, hi: int = 4, max_terms: int = 5):
    from awdaha.laurent import LaurentPoly

    ks = draw(st.lists(st.integers(lo, hi), max_size=max_terms, unique=True))
    vals = draw(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9),
                         min_size=len(ks), max_size=len(ks)))
    return LaurentPoly(dict(zip(ks, vals)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, text = RESULTS[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {text}")
