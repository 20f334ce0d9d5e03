import functools
import itertools

import pytest

from treecat import Category, brute_force_morphisms, enumerate_planar_trees, parse_brackets


@functools.lru_cache(maxsize=None)
def trees_of_size(n):
    return tuple(enumerate_planar_trees(n))


def trees_up_to(n, start=1):
    return [t for k in range(start, n + 1) for t in trees_of_size(k)]


@functools.lru_cache(maxsize=None)
def oracle_homset(domain, codomain, category):
    return tuple(brute_force_morphisms(domain, codomain, category))


def all_balanced_by_filter(pairs):
    """Every string over {(,)} of length 2*pairs, kept when balanced."""
    out = []
    for chars in itertools.product("()", repeat=2 * pairs):
        level = 0
        for ch in chars:
            level += 1 if ch == "(" else -1
            if level < 0:
                break
        if level == 0:
            out.append("".join(chars))
    return out


@pytest.fixture
def T():
    return parse_brackets


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
