"""Shared helpers: naive definitional checks and cached exhaustive corpora."""

from __future__ import annotations

import functools
import itertools

from hypothesis import strategies as st

from smartorient import oracle
from smartorient.generators import random_pseudo_transitive
from smartorient.ograph import Ght, OGraph


def naive_pt(g: OGraph) -> bool:
    """Pseudo-transitivity by scanning every ordered triple."""
    for a, b, c in itertools.permutations(range(g.n), 3):
        if g.arrow(a, b) and g.arrow(b, c) and not g.comparable(a, c):
            return False
    return True


def naive_transitive(order: OGraph) -> bool:
    for a, b, c in itertools.permutations(range(order.n), 3):
        if order.arrow(a, b) and order.arrow(b, c) and not order.arrow(a, c):
            return False
    return True


def naive_reorientation(g: OGraph, order: OGraph) -> bool:
    return g.n == order.n and all(
        g.comparable(u, v) == order.comparable(u, v) for u, v in itertools.combinations(range(g.n), 2)
    )


def restrict_pairs(order: OGraph, k: int) -> set[tuple[int, int]]:
    return {(u, v) for u, v in order.arrows() if u < k and v < k}


@functools.lru_cache(maxsize=None)
def pt_graphs(max_n: int) -> tuple[OGraph, ...]:
    return tuple(g for n in range(max_n + 1) for g in oracle.exhaustive_pseudo_transitive(n))


@functools.lru_cache(maxsize=None)
def ghts(max_n: int) -> tuple[Ght, ...]:
    return tuple(oracle.all_ghts(max_n))


@st.composite
def random_graphs(draw, max_n: int = 9):
    n = draw(st.integers(0, max_n))
    density = draw(st.sampled_from([0.0, 0.2, 0.4, 0.6, 0.9]))
    flips = draw(st.sampled_from([0.0, 0.3, 0.6, 1.0]))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_pseudo_transitive(n, density, flips, seed)


# acceptance verdicts, filled in by test_acceptance and echoed at session end
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
