import itertools

import pytest

from mposet.perm_core import Permutation


def brute_standardize(seq):
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def brute_contains(word, pattern):
    """First occurrence by scanning every index subsequence."""
    k = len(pattern)
    for idx in itertools.combinations(range(len(word)), k):
        if brute_standardize([word[i] for i in idx]) == tuple(pattern):
            return tuple(i + 1 for i in idx)
    return None


def perms(n):
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


@pytest.fixture(scope="session")
def s4():
    return perms(4)


@pytest.fixture(scope="session")
def s5():
    return perms(5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
