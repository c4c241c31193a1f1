import pytest
from hypothesis import strategies as st

from ordkit.core import Ordinal, nat

ACCEPTANCE_LINES = []


def ordinals(depth=2, max_terms=3, max_coeff=20):
    """Hereditary CNF values; ``depth`` bounds the exponent nesting."""
    if depth == 0:
        return st.integers(0, max_coeff).map(nat)
    exps = ordinals(depth - 1, max_terms, max_coeff)
    terms = st.lists(
        st.tuples(exps, st.integers(1, max_coeff)),
        max_size=max_terms,
        unique_by=lambda t: t[0].key,
    )
    return terms.map(lambda ts: Ordinal(sorted(ts, key=lambda t: t[0].key, reverse=True)))


@pytest.fixture
def acceptance_line():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
