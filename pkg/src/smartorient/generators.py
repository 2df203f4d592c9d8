"""Named fixtures, seeded random pseudo-transitive ographs, relabeling."""

from __future__ import annotations

import random
from collections.abc import Sequence

from ._bits import bits
from .ograph import Ght, OGraph

# vertex ids: a, b, c, d, e = 0, 1, 2, 3, 4
_FIXTURES = {
    "C3": (3, [(0, 1), (1, 2), (2, 0)], None),
    # transitive triangles, order a < c < b
    "TT-L": (3, [(0, 1), (1, 2), (0, 2)], [(0, 2), (2, 1), (0, 1)]),
    "TT-R": (3, [(0, 1), (2, 1), (2, 0)], [(0, 2), (2, 1), (0, 1)]),
    # 2+2, order a < c and d < b
    "G22-L": (4, [(0, 2), (1, 3)], [(0, 2), (3, 1)]),
    "G22-R": (4, [(0, 2), (1, 3)], [(0, 2), (3, 1)]),
    "THETA5": (5, [(0, 2), (1, 3), (3, 4), (4, 1)], [(0, 2), (3, 1), (3, 4), (4, 1)]),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> tuple[OGraph, OGraph | None]:
    """The named fixture graph and, where one is attached, its order."""
    try:
        n, arrows, order = _FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}") from None
    g = OGraph(n, arrows)
    return g, (None if order is None else OGraph(n, order))


def fixture_ght(name: str) -> Ght:
    g, order = fixture(name)
    if order is None:
        raise ValueError(f"fixture {name!r} has no attached order")
    return Ght(g, order)


def _random_order(n: int, density: float, rng: random.Random) -> list[int]:
    """Successor masks of the transitive closure of a random DAG over a shuffled ranking."""
    rank = list(range(n))
    rng.shuffle(rank)
    direct = [0] * n
    for i in range(n):
        u = rank[i]
        for j in range(i + 1, n):
            if rng.random() < density:
                direct[u] |= 1 << rank[j]
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        u = rank[i]
        acc = direct[u]
        for s in bits(direct[u]):
            acc |= reach[s]
        reach[u] = acc
    return reach


def random_pseudo_transitive(n: int, density: float, flips: float, seed: int) -> OGraph:
    """Random pseudo-transitive ograph with a transitive reorientation.

    Starts from a random strict partial order (closure of a DAG where each
    forward pair is drawn with probability ``density``), then tries to
    reverse ``round(flips * |E|)`` arrows in seeded random order, keeping
    a reversal only when no new pseudo-transitivity violation appears.  Uses
    :class:`random.Random` (Mersenne Twister) seeded with ``seed``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not (0.0 <= density <= 1.0 and 0.0 <= flips <= 1.0):
        raise ValueError("density and flips must lie in [0, 1]")
    rng = random.Random(seed)
    out = _random_order(n, density, rng)
    inn = [0] * n
    for u in range(n):
        for v in bits(out[u]):
            inn[v] |= 1 << u
    edges = [(u, v) for u in range(n) for v in bits(out[u])]
    rng.shuffle(edges)
    for u, v in edges[: round(flips * len(edges))]:
        ub, vb = 1 << u, 1 << v
        out[u] ^= vb
        inn[v] ^= ub
        out[v] |= ub
        inn[u] |= vb
        # only triples through the new arrow v -> u can break
        bad = (inn[v] & ~(out[u] | inn[u]) & ~ub) or (out[u] & ~(out[v] | inn[v]) & ~vb)
        if bad:
            out[v] ^= ub
            inn[u] ^= vb
            out[u] |= vb
            inn[v] |= ub
    return OGraph.from_masks(out, inn)


def relabel(g: OGraph, perm: Sequence[int]) -> OGraph:
    """Copy of ``g`` with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return OGraph(g.n, [(perm[u], perm[v]) for u, v in g.arrows()])


def inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv
