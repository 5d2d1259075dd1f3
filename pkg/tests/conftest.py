from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from renner_order import OrbitContext, affine_A1, type_A, type_B

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def A2():
    return type_A(2)


@pytest.fixture(scope="session")
def A3():
    return type_A(3)


@pytest.fixture(scope="session")
def B2():
    return type_B(2)


@pytest.fixture(scope="session")
def aff():
    return affine_A1()


@pytest.fixture(scope="session")
def ctx_a3():
    """A3 with N = {0, 2}, C = {2}; its slice at cap 6 is all of W(N, C)."""
    return OrbitContext(type_A(3), {0, 2}, {2})


@pytest.fixture(scope="session")
def slice_a3(ctx_a3):
    return ctx_a3.elements(6)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


# -- permutation model of type A, independent of the word machinery ----------

def perm_of_word(word, n):
    """Product s_{w1} ... s_{wk} acting on positions, as a tuple (one-line notation)."""
    p = list(range(n + 1))
    for i in word:
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def perm_length(p):
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def perm_bruhat_leq(p, q):
    """Tableau criterion: sorted prefixes of p are pointwise <= those of q."""
    for k in range(1, len(p)):
        if any(x > y for x, y in zip(sorted(p[:k]), sorted(q[:k]))):
            return False
    return True


# -- acceptance report -------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
