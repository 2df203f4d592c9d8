"""Witness-chain deciders and the global obstruction properties.

``phi``/``psi`` chains certify that a reoriented transitive triangle cannot be
split by a new vertex; ``theta``/``sigma`` chains do the same for a 2+2
pattern.  Each search is a breadth-first walk over vertices: the clause that
links ``e_i`` to ``e_{i+1}`` depends only on ``e_i``, so one visit per vertex
suffices.  Every checker returns ``None`` or the lexicographically least
counterexample.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from ._bits import below, bits
from .errors import Violation
from .ograph import ExtensionDelta, Ght, OGraph


@dataclass(frozen=True)
class WitnessChain:
    kind: str
    anchor: tuple[int, ...]
    chain: tuple[int, ...]


def _bfs(starts: int, step: Callable[[int], int], accept: Callable[[int], bool]) -> tuple[int, ...] | None:
    parent: dict[int, int | None] = {}
    queue = deque()
    for s in bits(starts):
        parent[s] = None
        queue.append(s)
    seen = starts
    while queue:
        e = queue.popleft()
        if accept(e):
            chain = [e]
            while parent[chain[-1]] is not None:
                chain.append(parent[chain[-1]])
            return tuple(reversed(chain))
        nxt = step(e) & ~seen
        seen |= nxt
        for f in bits(nxt):
            parent[f] = e
            queue.append(f)
    return None


def _check_range(g: OGraph, *vs: int):
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")


def _triangle_chain(g: OGraph, a: int, b: int, starts: int):
    out, inn = g.out_masks, g.in_masks

    def step(e):
        if out[a] >> e & 1 and out[b] >> e & 1:
            return out[e]
        if out[e] >> b & 1 and out[e] >> a & 1:
            return inn[e]
        return 0

    def accept(e):
        return bool((out[a] >> e & 1 and out[e] >> b & 1) or (out[b] >> e & 1 and out[e] >> a & 1))

    return _bfs(starts, step, accept)


def phi_witness(g: OGraph, a: int, b: int, c: int) -> WitnessChain | None:
    _check_range(g, a, b, c)
    chain = _triangle_chain(g, a, b, g.out_mask(c))
    return None if chain is None else WitnessChain("phi", (a, b, c), chain)


def psi_witness(g: OGraph, a: int, b: int, c: int) -> WitnessChain | None:
    _check_range(g, a, b, c)
    chain = _triangle_chain(g, a, b, g.in_mask(c))
    return None if chain is None else WitnessChain("psi", (a, b, c), chain)


def theta_witness(g: OGraph, a: int, b: int, c: int, d: int) -> WitnessChain | None:
    _check_range(g, a, b, c, d)
    out, inn = g.out_masks, g.in_masks

    def step(e):
        return inn[e] if out[e] >> d & 1 else 0

    def accept(e):
        return bool(out[d] >> e & 1) and e != a and not g.comparable(e, a)

    chain = _bfs(inn[b], step, accept)
    return None if chain is None else WitnessChain("theta", (a, b, c, d), chain)


def sigma_witness(g: OGraph, a: int, b: int, c: int, d: int) -> WitnessChain | None:
    _check_range(g, a, b, c, d)
    out = g.out_masks

    def step(e):
        return out[e] if out[b] >> e & 1 else 0

    def accept(e):
        return bool(out[e] >> b & 1) and e != c and not g.comparable(e, c)

    chain = _bfs(out[d], step, accept)
    return None if chain is None else WitnessChain("sigma", (a, b, c, d), chain)


def verify_chain(g: OGraph, kind: str, anchor: Sequence[int], chain: Sequence[int]) -> bool:
    """Re-check a chain clause by clause, without any search."""
    if not chain:
        return False
    arr = g.arrow
    e = list(chain)
    n = len(e) - 1
    if kind in ("phi", "psi"):
        a, b, c = anchor
        first = arr(c, e[0]) if kind == "phi" else arr(e[0], c)
        links = all(
            (arr(a, e[i]) and arr(b, e[i]) and arr(e[i], e[i + 1]))
            or (arr(e[i + 1], e[i]) and arr(e[i], b) and arr(e[i], a))
            for i in range(n)
        )
        last = (arr(a, e[n]) and arr(e[n], b)) or (arr(b, e[n]) and arr(e[n], a))
        return first and links and last
    if kind == "theta":
        a, b, c, d = anchor
        return (
            arr(e[0], b)
            and all(arr(e[i + 1], e[i]) and arr(e[i], d) for i in range(n))
            and arr(d, e[n])
            and g.incomparable(e[n], a)
        )
    if kind == "sigma":
        a, b, c, d = anchor
        return (
            arr(d, e[0])
            and all(arr(b, e[i]) and arr(e[i], e[i + 1]) for i in range(n))
            and arr(e[n], b)
            and g.incomparable(e[n], c)
        )
    raise ValueError(f"unknown chain kind {kind!r}")


def check_phi(t: Ght) -> Violation | None:
    """Every ``a -> c <- b`` with ``a < c < b`` must carry a phi chain."""
    g, p = t.g, t.order
    for a in range(t.n):
        for b in range(t.n):
            for c in bits(g.out_mask(a) & g.out_mask(b) & p.out_mask(a) & p.in_mask(b)):
                if phi_witness(g, a, b, c) is None:
                    return Violation("phi", (a, b, c))
    return None


def check_psi(t: Ght) -> Violation | None:
    """Every ``a <- c -> b`` with ``a < c < b`` must carry a psi chain."""
    g, p = t.g, t.order
    for a in range(t.n):
        for b in range(t.n):
            for c in bits(g.in_mask(a) & g.in_mask(b) & p.out_mask(a) & p.in_mask(b)):
                if psi_witness(g, a, b, c) is None:
                    return Violation("psi", (a, b, c))
    return None


def two_plus_two(t: Ght):
    """Yield every ``(a, b, c, d)`` with ``a -> c``, ``b -> d``, ``a | b``, ``c | d``, ``a < c``, ``d < b``."""
    g, p = t.g, t.order
    n = t.n
    full = below(n)
    for a in range(n):
        for b in bits(full & ~g.comp_mask(a) & ~(1 << a)):
            for c in bits(g.out_mask(a) & p.out_mask(a)):
                for d in bits(g.out_mask(b) & p.in_mask(b) & ~g.comp_mask(c) & ~(1 << c)):
                    yield a, b, c, d


def check_theta(t: Ght) -> Violation | None:
    g = t.g
    for a, b, c, d in two_plus_two(t):
        if theta_witness(g, a, b, c, d) is None and theta_witness(g, b, a, d, c) is None:
            return Violation("theta", (a, b, c, d))
    return None


def check_sigma(t: Ght) -> Violation | None:
    g = t.g
    for a, b, c, d in two_plus_two(t):
        if sigma_witness(g, a, b, c, d) is None and sigma_witness(g, b, a, d, c) is None:
            return Violation("sigma", (a, b, c, d))
    return None


def is_lazy(t: Ght) -> Violation | None:
    """Every reversed arc ``a -> b``, ``b < a`` needs a smaller ``c`` with ``b -> c -> a`` and ``b < c < a``.

    Only needs ``t.order`` to be a reorientation, not a transitive one.
    """
    g, p = t.g, t.order
    for a in range(t.n):
        for b in bits(g.out_mask(a) & p.in_mask(a)):
            lower = below(min(a, b))
            if not g.out_mask(b) & g.in_mask(a) & p.out_mask(b) & p.in_mask(a) & lower:
                return Violation("lazy", (a, b))
    return None


def check_lambda(t: Ght, d: ExtensionDelta) -> Violation | None:
    """No 2+2 ``a < c``, ``d < b`` whose bottom-left and top-right both see ``x`` while the others do not."""
    if d.x != t.n:
        raise ValueError(f"delta adds vertex {d.x} but the triple has n={t.n}")
    g, p = t.g, t.order
    nx = d.neighbor_mask
    for a in bits(nx):
        for b in bits(nx & ~g.comp_mask(a) & ~(1 << a)):
            for c in bits(p.out_mask(a) & ~nx):
                for dd in bits(p.in_mask(b) & ~nx & ~g.comp_mask(c) & ~(1 << c)):
                    return Violation("lambda", (a, b, c, dd))
    return None


CHECKS = {
    "phi": check_phi,
    "psi": check_psi,
    "theta": check_theta,
    "sigma": check_sigma,
    "lazy": is_lazy,
}
