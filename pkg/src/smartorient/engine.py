"""On-line transitive reorientation of a growing pseudo-transitive ograph.

Each incoming vertex ``x`` is placed against the current order in one pass:

* non-neighbours stay incomparable to ``x``;
* neighbours are split into signed layers ``S_i^-`` / ``S_i^+`` grown from
  ``N^-(x) \\ N^+(x)`` and ``N^+(x) \\ N^-(x)`` along incomparability inside
  ``N(x)``; ``S^-`` goes below ``x`` and ``S^+`` above it;
* the remaining neighbours ``T(x)`` are swept in increasing id, each placed
  below ``x`` if some smaller already-placed vertex above it is below ``x``,
  above ``x`` in the mirrored situation, and along its arrow otherwise.

Everything runs on per-vertex bitmasks, so a step costs O(n) mask operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ._bits import below, bits, lowest
from .errors import InvariantError, PseudoTransitivityError, Violation
from .ograph import ExtensionDelta, Ght, OGraph, delta_witness


@dataclass(frozen=True)
class NPartition:
    n_plus: frozenset[int]
    n_minus: frozenset[int]


@dataclass(frozen=True)
class SPartition:
    layers: tuple[tuple[frozenset[int], frozenset[int]], ...]
    t: frozenset[int]
    np: NPartition

    @property
    def s_minus(self) -> frozenset[int]:
        return frozenset().union(*(m for m, _ in self.layers))

    @property
    def s_plus(self) -> frozenset[int]:
        return frozenset().union(*(p for _, p in self.layers))

    def layer_of(self, v: int) -> tuple[int, str] | None:
        for i, (m, p) in enumerate(self.layers):
            if v in m:
                return i, "-"
            if v in p:
                return i, "+"
        return None


@dataclass(frozen=True)
class StarSequence:
    sign: str
    seq: tuple[int, ...]


@dataclass(frozen=True)
class StepResult:
    """What one smart extension decided about the new vertex ``x``."""

    x: int
    below_mask: int  # u with u < x
    above_mask: int  # u with x < u
    s_minus_mask: int
    s_plus_mask: int
    t_mask: int
    # (v, clause, least witness or None) for every v in T(x), in sweep order
    t_decisions: tuple[tuple[int, str, int | None], ...]

    @property
    def below(self) -> list[int]:
        return list(bits(self.below_mask))

    @property
    def above(self) -> list[int]:
        return list(bits(self.above_mask))

    def pairs(self) -> list[tuple[int, int]]:
        """Newly decided order pairs ``(u, v)`` meaning ``u < v``, sorted."""
        x = self.x
        return sorted([(u, x) for u in bits(self.below_mask)] + [(x, v) for v in bits(self.above_mask)])


# -- mask-level kernels ------------------------------------------------------

def _n_masks(p_out, p_in, n: int, nx: int) -> tuple[int, int]:
    non = below(n) & ~nx
    plus = minus = 0
    for a in bits(nx):
        bit = 1 << a
        if not p_out[a] & non:
            plus |= bit
        if not p_in[a] & non:
            minus |= bit
    return plus, minus


def _layers(g_out, g_in, nx: int, plus: int, minus: int):
    """Signed incomparability layers inside ``nx``; returns (layers, t_mask)."""
    cur_m = minus & ~plus
    cur_p = plus & ~minus
    seen = cur_m | cur_p
    layers = []
    while cur_m or cur_p:
        layers.append((cur_m, cur_p))
        nxt_m = nxt_p = 0
        for s in bits(cur_m):
            nxt_m |= nx & ~(g_out[s] | g_in[s]) & ~seen
        for s in bits(cur_p):
            nxt_p |= nx & ~(g_out[s] | g_in[s]) & ~seen
        clash = nxt_m & nxt_p
        if clash:
            v = lowest(clash)
            inc = ~(g_out[v] | g_in[v])
            raise InvariantError(
                Violation("s_overlap", (v, lowest(cur_m & inc), lowest(cur_p & inc))),
                f"vertex {v} enters both S^- and S^+ at layer {len(layers)}",
            )
        seen |= nxt_m | nxt_p
        cur_m, cur_p = nxt_m, nxt_p
    return layers, nx & ~seen


def _sweep(p_out, p_in, t: int, to_x: int, s_minus: int, s_plus: int, x: int):
    """Place every vertex of T(x) in increasing id; returns (below, above, decisions)."""
    lo = s_minus
    hi = s_plus
    decisions = []
    for v in bits(t):
        bit = 1 << v
        earlier = bit - 1
        up = p_out[v] & lo & earlier  # v < u and u <' x
        down = p_in[v] & hi & earlier  # x <' u and u < v
        if up and down:
            raise InvariantError(
                Violation("internal", (v, lowest(up), lowest(down), x)),
                f"clauses 3a and 3b both apply to vertex {v}",
            )
        if up:
            lo |= bit
            decisions.append((v, "3a", lowest(up)))
        elif down:
            hi |= bit
            decisions.append((v, "3b", lowest(down)))
        elif to_x & bit:
            lo |= bit
            decisions.append((v, "3c", None))
        else:
            hi |= bit
            decisions.append((v, "3c", None))
    return lo, hi, tuple(decisions)


def _step(g_out, g_in, p_out, p_in, d: ExtensionDelta) -> StepResult:
    n = d.x
    w = delta_witness(g_out, g_in, n, d.to_x_mask, d.from_x_mask)
    if w is not None:
        raise PseudoTransitivityError(Violation("pseudo_transitivity", w))
    nx = d.neighbor_mask
    plus, minus = _n_masks(p_out, p_in, n, nx)
    layers, t = _layers(g_out, g_in, nx, plus, minus)
    s_minus = s_plus = 0
    for m, p in layers:
        s_minus |= m
        s_plus |= p
    lo, hi, decisions = _sweep(p_out, p_in, t, d.to_x_mask, s_minus, s_plus, n)
    return StepResult(n, lo, hi, s_minus, s_plus, t, decisions)


def _check_delta(t: Ght, d: ExtensionDelta):
    if d.x != t.n:
        raise ValueError(f"delta adds vertex {d.x} but the triple has n={t.n}")
    w = delta_witness(t.g.out_masks, t.g.in_masks, d.x, d.to_x_mask, d.from_x_mask)
    if w is not None:
        raise PseudoTransitivityError(Violation("pseudo_transitivity", w))


# -- public operations on triples ------------------------------------------

def classify_neighborhood(t: Ght, d: ExtensionDelta) -> NPartition:
    """``N^+(x)`` and ``N^-(x)``: neighbours whose whole up-set (down-set) lies in ``N(x)``."""
    _check_delta(t, d)
    plus, minus = _n_masks(t.order.out_masks, t.order.in_masks, t.n, d.neighbor_mask)
    return NPartition(frozenset(bits(plus)), frozenset(bits(minus)))


def s_partition(t: Ght, d: ExtensionDelta) -> SPartition:
    """Signed layers and residue ``T(x)``; raises :class:`InvariantError` on an ``s_overlap``."""
    _check_delta(t, d)
    nx = d.neighbor_mask
    plus, minus = _n_masks(t.order.out_masks, t.order.in_masks, t.n, nx)
    layers, rest = _layers(t.g.out_masks, t.g.in_masks, nx, plus, minus)
    return SPartition(
        tuple((frozenset(bits(m)), frozenset(bits(p))) for m, p in layers),
        frozenset(bits(rest)),
        NPartition(frozenset(bits(plus)), frozenset(bits(minus))),
    )


def star_sequence_to(p: SPartition, g: OGraph, s: int) -> StarSequence:
    """A sequence through consecutive same-signed layers ending at ``s``.

    Walking back from ``s`` picks, at each layer, the least vertex
    incomparable to the one above it.
    """
    where = p.layer_of(s)
    if where is None:
        raise ValueError(f"vertex {s} is not in any S layer")
    i, sign = where
    side = 0 if sign == "-" else 1
    seq = [s]
    for j in range(i - 1, -1, -1):
        cur = seq[-1]
        cands = [u for u in sorted(p.layers[j][side]) if g.incomparable(u, cur)]
        if not cands:
            raise InvariantError(Violation("internal", (cur,)), f"no layer-{j} predecessor for {cur}")
        seq.append(cands[0])
    return StarSequence(sign, tuple(reversed(seq)))


def smart_extend_step(t: Ght, d: ExtensionDelta) -> tuple[Ght, StepResult]:
    _check_delta(t, d)
    res = _step(t.g.out_masks, t.g.in_masks, t.order.out_masks, t.order.in_masks, d)
    order = _grow(list(t.order.out_masks), list(t.order.in_masks), res)
    return Ght(t.g.apply_delta(d), OGraph.from_masks(*order)), res


def smart_extend(t: Ght, d: ExtensionDelta) -> Ght:
    """Extend ``t.order`` to the new vertex of ``d`` by the smart rules.

    The triple must already satisfy the witness properties Phi, Psi and
    Theta (always true for orders built by this module); that is not
    re-checked here.
    """
    return smart_extend_step(t, d)[0]


def _grow(p_out: list[int], p_in: list[int], res: StepResult):
    bit = 1 << res.x
    for u in bits(res.below_mask):
        p_out[u] |= bit
    for u in bits(res.above_mask):
        p_in[u] |= bit
    p_out.append(res.above_mask)
    p_in.append(res.below_mask)
    return p_out, p_in


class SmartReorienter:
    """Owns the growing graph and its smart reorientation.

    Feed vertices with :meth:`extend`; a rejected delta leaves the state
    untouched.  With ``paranoid=True`` the witness properties and laziness are
    re-verified after every step (polynomial but slow).
    """

    def __init__(self, paranoid: bool = False):
        self.paranoid = paranoid
        self._g_out: list[int] = []
        self._g_in: list[int] = []
        self._p_out: list[int] = []
        self._p_in: list[int] = []

    @property
    def n(self) -> int:
        return len(self._g_out)

    def extend(self, d: ExtensionDelta) -> StepResult:
        if d.x != self.n:
            raise ValueError(f"expected vertex {self.n}, got {d.x}")
        res = _step(self._g_out, self._g_in, self._p_out, self._p_in, d)
        bit = 1 << d.x
        for v in bits(d.to_x_mask):
            self._g_out[v] |= bit
        for v in bits(d.from_x_mask):
            self._g_in[v] |= bit
        self._g_out.append(d.from_x_mask)
        self._g_in.append(d.to_x_mask)
        _grow(self._p_out, self._p_in, res)
        if self.paranoid:
            self._audit()
        return res

    def extend_arrows(self, to_x: Iterable[int] = (), from_x: Iterable[int] = ()) -> StepResult:
        return self.extend(ExtensionDelta.from_arrows(self.n, to_x, from_x))

    def graph(self) -> OGraph:
        return OGraph.from_masks(self._g_out, self._g_in)

    def order(self) -> OGraph:
        return OGraph.from_masks(self._p_out, self._p_in)

    def ght(self) -> Ght:
        return Ght(self.graph(), self.order())

    def precedes(self, u: int, v: int) -> bool:
        return bool(self._p_out[u] >> v & 1)

    def _audit(self):
        from . import predicates
        from .ograph import check_ght

        t = self.ght()
        for check in (check_ght, predicates.is_lazy, predicates.check_phi,
                      predicates.check_psi, predicates.check_theta):
            v = check(t)
            if v is not None:
                raise InvariantError(v, f"paranoid check failed after vertex {self.n - 1}: {v}")


def smart_reorient_stream(deltas: Iterable[ExtensionDelta]) -> Iterator[Ght]:
    """Yield the triple after every delta; each order extends the previous one."""
    eng = SmartReorienter()
    for d in deltas:
        eng.extend(d)
        yield eng.ght()


def smart_reorient(g: OGraph) -> OGraph:
    """Smart reorientation of ``g`` with vertices arriving in id order."""
    eng = SmartReorienter()
    for d in g.deltas():
        eng.extend(d)
    return eng.order()


__all__ = [
    "NPartition", "SPartition", "StarSequence", "StepResult", "SmartReorienter",
    "classify_neighborhood", "s_partition", "star_sequence_to", "smart_extend",
    "smart_extend_step", "smart_reorient_stream", "smart_reorient",
]
