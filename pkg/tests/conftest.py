import random
import string

import pytest
from hypothesis import settings, strategies as st

from citeratio.dataset import CitationTable, FieldId, builtin_nsf_table


# the 1000-case randomized sweeps live in test_acceptance; keep these quick
settings.register_profile("quick", max_examples=50, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile("quick")


@pytest.fixture
def nsf():
    return builtin_nsf_table()


def field_names(n):
    return [f"Field {string.ascii_uppercase[i // 26]}{string.ascii_uppercase[i % 26]}" for i in range(n)]


def make_table(names, years, counts):
    fields = tuple(FieldId.from_name(n) for n in names)
    grid = {(f.slug, y): counts[i][j] for i, f in enumerate(fields) for j, y in enumerate(years)}
    return CitationTable(fields, tuple(years), grid, "generated")


@st.composite
def tables(draw, min_fields=2, max_fields=12, max_years=10, min_count=1, max_count=10**6):
    n = draw(st.integers(min_fields, max_fields))
    years = sorted(draw(st.sets(st.integers(1900, 2100), min_size=1, max_size=max_years)))
    counts = [
        [draw(st.integers(min_count, max_count)) for _ in years] for _ in range(n)
    ]
    return make_table(field_names(n), years, counts)


def random_table(rng: random.Random, n_fields=None, n_years=None, max_count=10**6):
    n = n_fields or rng.randint(2, 12)
    k = n_years or rng.randint(1, 10)
    years = sorted(rng.sample(range(1950, 2050), k))
    counts = [[rng.randint(1, max_count) for _ in years] for _ in range(n)]
    return make_table(field_names(n), years, counts)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                cid = rep.nodeid.rsplit("[", 1)[-1].rstrip("]")
                lines.append((cid, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for cid, status in sorted(lines):
            terminalreporter.write_line(f"{cid}: {status}")
