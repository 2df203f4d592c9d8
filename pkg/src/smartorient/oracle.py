"""Brute-force ground truth for small instances.

Nothing here shares code with the engine beyond the graph container: the
routines enumerate and test definitions directly.  Each one has a hard size
guard and raises :class:`ResourceGuardError` above it instead of sampling.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import product

from ._bits import bits
from .errors import ResourceGuardError
from .ograph import ExtensionDelta, Ght, OGraph, Rel, pseudo_transitivity_witness, transitivity_witness

MAX_EDGES = 25
MAX_EXTENSION_BASE = 12
MAX_ENUMERATION = 5


def all_transitive_reorientations(g: OGraph) -> list[OGraph]:
    """Every transitive reorientation of ``g``.

    Arrows are taken in sorted order and each is first kept then reversed,
    so the output follows the lexicographic order of keep/flip vectors.
    Branches are cut as soon as an assigned pair of arrows forces a missing
    or reversed third pair.
    """
    edges = g.arrows()
    if len(edges) > MAX_EDGES:
        raise ResourceGuardError(f"{len(edges)} edges exceeds the guard of {MAX_EDGES}")
    n = g.n
    comp = [g.comp_mask(v) for v in range(n)]
    p_out = [0] * n
    p_in = [0] * n
    found: list[OGraph] = []

    def blocked(p, q):
        # would p < q close a bad chain with already assigned pairs?
        after, before = p_out[q], p_in[p]
        return bool(after & ~comp[p] or before & ~comp[q] or after & before)

    def place(p, q, k):
        if blocked(p, q):
            return
        p_out[p] |= 1 << q
        p_in[q] |= 1 << p
        walk(k + 1)
        p_out[p] ^= 1 << q
        p_in[q] ^= 1 << p

    def walk(k):
        if k == len(edges):
            order = OGraph.from_masks(list(p_out), list(p_in))
            if transitivity_witness(order) is None:
                found.append(order)
            return
        u, v = edges[k]
        place(u, v, k)
        place(v, u, k)

    walk(0)
    return found


def enumerate_extensions(g: OGraph) -> Iterator[ExtensionDelta]:
    """All one-vertex extensions of ``g`` that stay pseudo-transitive.

    Relations cycle through none, ``v -> x``, ``x -> v`` with vertex 0
    changing fastest.
    """
    if g.n > MAX_EXTENSION_BASE:
        raise ResourceGuardError(f"n={g.n} exceeds the extension guard of {MAX_EXTENSION_BASE}")
    x = g.n
    for rev in product((Rel.NONE, Rel.TO_X, Rel.FROM_X), repeat=x):
        d = ExtensionDelta(x, rev[::-1])
        h = g.apply_delta(d)
        if pseudo_transitivity_witness(h.out_masks, h.in_masks) is None:
            yield d


def extension_orders(t: Ght, d: ExtensionDelta) -> list[OGraph]:
    """Every transitive reorientation of ``t.g + d`` that restricts to ``t.order``.

    Only the placement of ``x`` against each neighbour is free, so this runs
    over the ``2^|N(x)|`` below/above splits of ``N(x)``.
    """
    p = t.order
    nbrs = sorted(d.neighborhood())
    x = d.x
    result = []
    for choice in product((False, True), repeat=len(nbrs)):
        lo = {v for v, up in zip(nbrs, choice) if not up}
        hi = {v for v, up in zip(nbrs, choice) if up}
        ok = (
            all(u in lo for v in lo for u in bits(p.in_mask(v)))  # u < v < x
            and all(w in hi for v in hi for w in bits(p.out_mask(v)))  # x < v < w
            and all(p.arrow(u, w) for u in lo for w in hi)  # u < x < w
        )
        if ok:
            pairs = p.arrows() + [(u, x) for u in lo] + [(x, w) for w in hi]
            result.append(OGraph(x + 1, pairs))
    return result


def admits_extension(t: Ght, d: ExtensionDelta) -> bool:
    return bool(extension_orders(t, d))


def is_extendible(t: Ght) -> tuple[bool, ExtensionDelta | None]:
    """``(True, None)`` or ``(False, first extension that cannot be followed)``."""
    for d in enumerate_extensions(t.g):
        if not admits_extension(t, d):
            return False, d
    return True, None


def exhaustive_pseudo_transitive(n: int) -> Iterator[OGraph]:
    """All labeled pseudo-transitive ographs on ``n`` vertices.

    Pairs ``i < j`` are visited lexicographically; each takes none, ``i -> j``
    or ``j -> i`` in that order.
    """
    if not 0 <= n <= MAX_ENUMERATION:
        raise ResourceGuardError(f"n={n} outside the enumeration guard 0..{MAX_ENUMERATION}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for states in product((0, 1, 2), repeat=len(pairs)):
        out = [0] * n
        inn = [0] * n
        for (i, j), s in zip(pairs, states):
            if s == 1:
                out[i] |= 1 << j
                inn[j] |= 1 << i
            elif s == 2:
                out[j] |= 1 << i
                inn[i] |= 1 << j
        if pseudo_transitivity_witness(out, inn) is None:
            yield OGraph.from_masks(out, inn)


def all_ghts(max_n: int) -> Iterator[Ght]:
    """Every pseudo-transitive ograph on at most ``max_n`` vertices with each of its transitive reorientations."""
    for n in range(max_n + 1):
        for g in exhaustive_pseudo_transitive(n):
            for order in all_transitive_reorientations(g):
                yield Ght(g, order)


def n_plus_minus(t: Ght, d: ExtensionDelta) -> tuple[set[int], set[int]]:
    """``N^+(x)``, ``N^-(x)`` evaluated straight from their definition."""
    nbrs = set(d.neighborhood())
    p = t.order
    plus = {a for a in nbrs if all(b in nbrs for b in range(t.n) if p.arrow(a, b))}
    minus = {a for a in nbrs if all(b in nbrs for b in range(t.n) if p.arrow(b, a))}
    return plus, minus


def neighborhood_covered(t: Ght, d: ExtensionDelta) -> bool:
    """Whether ``N(x) = N^+(x) | N^-(x)``."""
    plus, minus = n_plus_minus(t, d)
    return set(d.neighborhood()) == plus | minus


def minus_below_plus(t: Ght, d: ExtensionDelta) -> bool:
    """Whether ``N^-(x) \\ N^+(x)`` lies entirely below ``N^+(x) \\ N^-(x)``."""
    plus, minus = n_plus_minus(t, d)
    return all(t.order.arrow(a, b) for a in minus - plus for b in plus - minus)


def triangle_condition(t: Ght, d: ExtensionDelta) -> bool:
    """``a < c < b`` and ``x - c`` imply ``x - a`` or ``x - b``."""
    nbrs = set(d.neighborhood())
    p = t.order
    return all(
        a in nbrs or b in nbrs
        for c in nbrs
        for a in bits(p.in_mask(c))
        for b in bits(p.out_mask(c))
    )
