from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from isopieri.bruhat import poset_for
from isopieri.grassmannian import make_spec

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# The spaces every exhaustive suite runs over.
LISTED = [
    ("C", 2, 2), ("C", 2, 4), ("C", 3, 4),
    ("B", 2, 3), ("B", 3, 3),
    ("D", 2, 2), ("D", 2, 3), ("D", 3, 3), ("D", 4, 4),
]
TYPE_D = [("D", 2, 2), ("D", 2, 3), ("D", 3, 3), ("D", 4, 4)]
SMALL = LISTED + [("C", 1, 3), ("B", 1, 2), ("B", 1, 3), ("D", 1, 2), ("D", 1, 3), ("B", 2, 2), ("C", 2, 3)]


def spec_id(triple):
    return "{}{}{}".format(*triple)


def brute_symbols(lie_type, m, n):
    """Isotropic m-subsets, written out independently of the library."""
    N = {"C": 2 * n, "B": 2 * n + 1, "D": 2 * n + 2}[lie_type]
    return [S for S in combinations(range(1, N + 1), m) if all(a + b != N + 1 for a in S for b in S)]


def pairs_below(spec):
    poset = poset_for(spec)
    for i, P in enumerate(poset.symbols):
        for j in sorted(poset.down[i]):
            yield P, poset.symbols[j]


@pytest.fixture(params=LISTED, ids=spec_id)
def listed_spec(request):
    return make_spec(*request.param)


@pytest.fixture(params=TYPE_D, ids=spec_id)
def d_spec(request):
    return make_spec(*request.param)


@st.composite
def spec_and_pair(draw, specs=tuple(SMALL)):
    """A spec and a Bruhat-comparable pair (P, T) with T below P."""
    spec = make_spec(*draw(st.sampled_from(specs)))
    poset = poset_for(spec)
    i = draw(st.integers(0, len(poset) - 1))
    j = draw(st.sampled_from(sorted(poset.down[i])))
    return spec, poset.symbols[i], poset.symbols[j]


# criterion number -> (passed, one-line detail), filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
