"""Oriented graphs, one-vertex extensions and reorientations.

Vertices are the dense ids ``0..n-1`` and the id order doubles as the arrival
order.  Adjacency is kept as one successor and one predecessor bitmask per
vertex, so every pair query is a bit test and neighbourhood algebra is plain
integer arithmetic.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field

from ._bits import below, bits, lowest
from .errors import Violation


class Orientation(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    INCOMPARABLE = "incomparable"


class Rel(enum.IntEnum):
    """Relation of an existing vertex ``v`` to the incoming vertex ``x``."""

    NONE = 0
    TO_X = 1  # v -> x
    FROM_X = 2  # x -> v


class OGraph:
    """An immutable oriented graph: irreflexive and asymmetric."""

    __slots__ = ("_n", "_out", "_in")

    def __init__(self, n: int, arrows: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [0] * n
        inn = [0] * n
        for u, v in arrows:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arrow ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if inn[u] >> v & 1:
                raise ValueError(f"both {u}->{v} and {v}->{u} given")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self._n = n
        self._out = tuple(out)
        self._in = tuple(inn)

    @classmethod
    def from_masks(cls, out: Iterable[int], inn: Iterable[int] | None = None) -> OGraph:
        out = tuple(out)
        n = len(out)
        if inn is None:
            acc = [0] * n
            for u, m in enumerate(out):
                for v in bits(m):
                    acc[v] |= 1 << u
            inn = acc
        g = cls.__new__(cls)
        g._n = n
        g._out = out
        g._in = tuple(inn)
        return g

    @classmethod
    def empty(cls, n: int = 0) -> OGraph:
        return cls(n)

    @property
    def n(self) -> int:
        return self._n

    def __len__(self):
        return self._n

    def _check(self, *vs: int):
        for v in vs:
            if not 0 <= v < self._n:
                raise ValueError(f"vertex {v} out of range for n={self._n}")

    # bitmask accessors, used by the hot paths
    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def comp_mask(self, v: int) -> int:
        return self._out[v] | self._in[v]

    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._out

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._in

    def arrow(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def comparable(self, u: int, v: int) -> bool:
        return bool((self._out[u] | self._in[u]) >> v & 1)

    def incomparable(self, u: int, v: int) -> bool:
        """``u | v``; distinct vertices only."""
        return u != v and not self.comparable(u, v)

    def orientation(self, u: int, v: int) -> Orientation:
        self._check(u, v)
        if u == v:
            raise ValueError("orientation needs two distinct vertices")
        if self._out[u] >> v & 1:
            return Orientation.FORWARD
        if self._in[u] >> v & 1:
            return Orientation.BACKWARD
        return Orientation.INCOMPARABLE

    def neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.comp_mask(v)))

    def successors(self, v: int) -> list[int]:
        return list(bits(self._out[v]))

    def predecessors(self, v: int) -> list[int]:
        return list(bits(self._in[v]))

    def arrows(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._out[u])]

    def num_arrows(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def reverse(self) -> OGraph:
        return OGraph.from_masks(self._in, self._out)

    def restrict(self, k: int) -> OGraph:
        """Induced subgraph on the first ``k`` vertices."""
        if not 0 <= k <= self._n:
            raise ValueError(f"cannot restrict n={self._n} to {k} vertices")
        keep = below(k)
        return OGraph.from_masks(
            [m & keep for m in self._out[:k]], [m & keep for m in self._in[:k]]
        )

    def delta_for(self, x: int) -> ExtensionDelta:
        """The delta that adds vertex ``x`` to ``self.restrict(x)``."""
        self._check(x)
        rel = []
        for v in range(x):
            if self._in[x] >> v & 1:
                rel.append(Rel.TO_X)
            elif self._out[x] >> v & 1:
                rel.append(Rel.FROM_X)
            else:
                rel.append(Rel.NONE)
        return ExtensionDelta(x, tuple(rel))

    def deltas(self) -> list[ExtensionDelta]:
        return [self.delta_for(x) for x in range(self._n)]

    def apply_delta(self, d: ExtensionDelta) -> OGraph:
        if d.x != self._n:
            raise ValueError(f"delta adds vertex {d.x} but graph has n={self._n}")
        x = d.x
        bit = 1 << x
        out = list(self._out)
        inn = list(self._in)
        for v in bits(d.to_x_mask):
            out[v] |= bit
        for v in bits(d.from_x_mask):
            inn[v] |= bit
        out.append(d.from_x_mask)
        inn.append(d.to_x_mask)
        return OGraph.from_masks(out, inn)

    def __eq__(self, other):
        if not isinstance(other, OGraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self):
        return hash((self._n, self._out))

    def __repr__(self):
        return f"OGraph({self._n}, {self.arrows()})"


@dataclass(frozen=True)
class ExtensionDelta:
    """The incoming vertex ``x`` and its relation to every earlier vertex."""

    x: int
    rel: tuple[Rel, ...]
    to_x_mask: int = field(init=False, repr=False, compare=False)
    from_x_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rel = tuple(Rel(r) for r in self.rel)
        if self.x < 0 or len(rel) != self.x:
            raise ValueError(f"delta for x={self.x} must relate exactly {self.x} vertices")
        object.__setattr__(self, "rel", rel)
        to_x = from_x = 0
        for v, r in enumerate(rel):
            if r is Rel.TO_X:
                to_x |= 1 << v
            elif r is Rel.FROM_X:
                from_x |= 1 << v
        object.__setattr__(self, "to_x_mask", to_x)
        object.__setattr__(self, "from_x_mask", from_x)

    @classmethod
    def from_arrows(cls, x: int, to_x: Iterable[int] = (), from_x: Iterable[int] = ()) -> ExtensionDelta:
        """Build a delta from the vertices with ``v -> x`` and with ``x -> v``."""
        rel = [Rel.NONE] * x
        for v in to_x:
            if not 0 <= v < x:
                raise ValueError(f"vertex {v} out of range for x={x}")
            rel[v] = Rel.TO_X
        for v in from_x:
            if not 0 <= v < x:
                raise ValueError(f"vertex {v} out of range for x={x}")
            if rel[v] is not Rel.NONE:
                raise ValueError(f"vertex {v} related to x in both directions")
            rel[v] = Rel.FROM_X
        return cls(x, tuple(rel))

    @property
    def neighbor_mask(self) -> int:
        return self.to_x_mask | self.from_x_mask

    def to_x(self) -> list[int]:
        return list(bits(self.to_x_mask))

    def from_x(self) -> list[int]:
        return list(bits(self.from_x_mask))

    def neighborhood(self) -> frozenset[int]:
        return frozenset(bits(self.neighbor_mask))

    def reverse(self) -> ExtensionDelta:
        flip = {Rel.NONE: Rel.NONE, Rel.TO_X: Rel.FROM_X, Rel.FROM_X: Rel.TO_X}
        return ExtensionDelta(self.x, tuple(flip[r] for r in self.rel))


@dataclass(frozen=True)
class Ght:
    """An ograph ``g`` paired with a candidate reorientation ``order`` (u < v as arrows)."""

    g: OGraph
    order: OGraph

    def __post_init__(self):
        if self.g.n != self.order.n:
            raise ValueError("graph and order disagree on the vertex count")

    @classmethod
    def empty(cls) -> Ght:
        return cls(OGraph(0), OGraph(0))

    @property
    def n(self) -> int:
        return self.g.n

    def precedes(self, u: int, v: int) -> bool:
        return self.order.arrow(u, v)

    def reverse(self) -> Ght:
        """Reverse every arrow of both the graph and the order."""
        return Ght(self.g.reverse(), self.order.reverse())

    def restrict(self, k: int) -> Ght:
        return Ght(self.g.restrict(k), self.order.restrict(k))


def orientation(g: OGraph, u: int, v: int) -> Orientation:
    return g.orientation(u, v)


def neighborhood(g: OGraph, v: int) -> frozenset[int]:
    return g.neighborhood(v)


def apply_delta(g: OGraph, d: ExtensionDelta) -> OGraph:
    return g.apply_delta(d)


def reverse(g: OGraph) -> OGraph:
    return g.reverse()


def pseudo_transitivity_witness(out: tuple[int, ...] | list[int], inn) -> tuple[int, int, int] | None:
    """Least ``(a, b, c)`` with ``a -> b -> c`` and ``a | c``."""
    for a, succ in enumerate(out):
        comp = succ | inn[a]
        for b in bits(succ):
            bad = out[b] & ~comp
            if bad:
                return (a, b, lowest(bad))
    return None


def is_pseudo_transitive(g: OGraph) -> Violation | None:
    """``None`` when ``g`` is pseudo-transitive, else the least offending triple."""
    w = pseudo_transitivity_witness(g.out_masks, g.in_masks)
    return None if w is None else Violation("pseudo_transitivity", w)


def delta_witness(out, inn, x: int, to_x: int, from_x: int) -> tuple[int, int, int] | None:
    """Least bad triple through the new vertex ``x``; ``out``/``inn`` describe ``0..x-1``.

    Only triples that mention ``x`` are inspected, so the old graph is assumed
    to be pseudo-transitive already.
    """
    nx = to_x | from_x
    best = None
    for u in bits(to_x):  # u -> x -> v needs u - v
        bad = from_x & ~(out[u] | inn[u])
        if bad:
            best = (u, x, lowest(bad))
            break
    for v in bits(to_x):  # u -> v -> x needs u - x
        bad = inn[v] & ~nx
        if bad:
            cand = (lowest(bad), v, x)
            if best is None or cand < best:
                best = cand
    if best is not None:
        return best
    for u in bits(from_x):  # x -> u -> v needs x - v
        bad = out[u] & ~nx
        if bad:
            return (x, u, lowest(bad))
    return None


def delta_is_pseudo_transitive(g: OGraph, d: ExtensionDelta) -> Violation | None:
    if d.x != g.n:
        raise ValueError(f"delta adds vertex {d.x} but graph has n={g.n}")
    w = delta_witness(g.out_masks, g.in_masks, d.x, d.to_x_mask, d.from_x_mask)
    return None if w is None else Violation("pseudo_transitivity", w)


def reorientation_witness(g: OGraph, order: OGraph) -> tuple[int, int] | None:
    """Least pair ``u < v`` that is comparable in exactly one of ``g`` and ``order``."""
    for u in range(g.n):
        bad = (g.comp_mask(u) ^ order.comp_mask(u)) & ~below(u + 1)
        if bad:
            return (u, lowest(bad))
    return None


def transitivity_witness(order: OGraph) -> tuple[int, int, int] | None:
    """Least ``(a, b, c)`` with ``a < b < c`` in ``order`` but not ``a < c``."""
    out = order.out_masks
    for a, succ in enumerate(out):
        for b in bits(succ):
            bad = out[b] & ~succ
            if bad:
                return (a, b, lowest(bad))
    return None


def check_ght(t: Ght) -> Violation | None:
    """``None`` iff ``t.order`` is a transitive reorientation of ``t.g``."""
    w = reorientation_witness(t.g, t.order)
    if w is not None:
        return Violation("reorientation", w)
    w = transitivity_witness(t.order)
    if w is not None:
        return Violation("transitivity", w)
    return None
