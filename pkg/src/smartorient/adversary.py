"""Refuters: one-vertex extensions that no transitive reorientation can follow.

Each breaker seeds the new vertex ``x`` with one or two arrows and then
closes under a staged rule: a vertex ``u`` reachable from ``x`` through one
old arrow (``x -> v -> u`` or ``u -> v -> x``) gets an arrow to or from
``x`` when it sits in the right position relative to the anchor vertices.
All additions of a round are computed against the relation at the start
of the round.
"""

from __future__ import annotations

from ._bits import bits, lowest
from .errors import InvariantError, Violation
from .generators import fixture_ght
from .ograph import ExtensionDelta, Ght, OGraph
from .predicates import check_phi, check_psi, phi_witness, psi_witness, sigma_witness, theta_witness


def gadget_transitive_triangle(side: str) -> tuple[Ght, ExtensionDelta]:
    """Transitive triangle with ``a < c < b`` and a pendant ``x`` on ``c`` only."""
    if side == "left":
        return fixture_ght("TT-L"), ExtensionDelta.from_arrows(3, from_x=[2])
    if side == "right":
        return fixture_ght("TT-R"), ExtensionDelta.from_arrows(3, to_x=[2])
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def gadget_two_plus_two(side: str) -> tuple[Ght, ExtensionDelta]:
    """2+2 with ``a < c``, ``d < b`` and ``x`` joined to one matched pair."""
    if side == "left":
        return fixture_ght("G22-L"), ExtensionDelta.from_arrows(4, to_x=[0, 1])
    if side == "right":
        return fixture_ght("G22-R"), ExtensionDelta.from_arrows(4, from_x=[2, 3])
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def _closure(g: OGraph, to_x: int, from_x: int, from_ok: int, to_ok: int) -> ExtensionDelta:
    out, inn = g.out_masks, g.in_masks
    for _ in range(g.n + 1):
        reach = 0
        for v in bits(from_x):
            reach |= out[v]
        for v in bits(to_x):
            reach |= inn[v]
        reach &= ~(to_x | from_x)
        add_from = reach & from_ok
        add_to = reach & to_ok
        if add_from & add_to:
            raise InvariantError(Violation("internal", (lowest(add_from & add_to),)),
                                 "closure wants both directions at one vertex")
        if not (add_from or add_to):
            rel = [0] * g.n
            for v in bits(to_x):
                rel[v] = 1
            for v in bits(from_x):
                rel[v] = 2
            return ExtensionDelta(g.n, tuple(rel))
        from_x |= add_from
        to_x |= add_to
    raise InvariantError(Violation("internal", ()), "closure did not stabilise")


def _require(cond: bool, what: str):
    if not cond:
        raise ValueError(f"precondition failed: {what}")


def _triangle_pre(t: Ght, a: int, b: int, c: int, down: bool):
    g, p = t.g, t.order
    for v in (a, b, c):
        _require(0 <= v < t.n, f"vertex {v} in range")
    if down:
        _require(g.arrow(a, c), "a -> c")
        _require(g.arrow(b, c), "b -> c")
    else:
        _require(g.arrow(c, a), "c -> a")
        _require(g.arrow(c, b), "c -> b")
    _require(p.arrow(a, c), "a < c")
    _require(p.arrow(c, b), "c < b")


def break_phi(t: Ght, a: int, b: int, c: int) -> ExtensionDelta:
    """Extension for ``a -> c <- b``, ``a < c < b`` without a phi chain; starts from ``x -> c``."""
    _triangle_pre(t, a, b, c, down=True)
    _require(phi_witness(t.g, a, b, c) is None, "no phi chain for (a, b, c)")
    g = t.g
    ok = g.out_mask(a) & g.out_mask(b), g.in_mask(a) & g.in_mask(b)
    return _closure(g, 0, 1 << c, *ok)


def break_psi(t: Ght, a: int, b: int, c: int) -> ExtensionDelta:
    """Mirror of :func:`break_phi` for ``a <- c -> b``; starts from ``c -> x``."""
    _triangle_pre(t, a, b, c, down=False)
    _require(psi_witness(t.g, a, b, c) is None, "no psi chain for (a, b, c)")
    g = t.g
    ok = g.out_mask(a) & g.out_mask(b), g.in_mask(a) & g.in_mask(b)
    return _closure(g, 1 << c, 0, *ok)


def _square_pre(t: Ght, a: int, b: int, c: int, d: int):
    g, p = t.g, t.order
    for v in (a, b, c, d):
        _require(0 <= v < t.n, f"vertex {v} in range")
    _require(g.arrow(a, c), "a -> c")
    _require(g.arrow(b, d), "b -> d")
    _require(g.incomparable(a, b), "a | b")
    _require(g.incomparable(c, d), "c | d")
    _require(p.arrow(a, c), "a < c")
    _require(p.arrow(d, b), "d < b")
    _require(check_phi(t) is None, "Phi holds")
    _require(check_psi(t) is None, "Psi holds")


def break_theta(t: Ght, a: int, b: int, c: int, d: int) -> ExtensionDelta:
    """Extension seeded with ``a -> x`` and ``b -> x`` for a 2+2 lacking a theta chain."""
    _square_pre(t, a, b, c, d)
    _require(theta_witness(t.g, a, b, c, d) is None, "no theta chain for (a, b, c, d)")
    g = t.g
    from_ok = g.out_mask(c) | g.out_mask(d)
    to_ok = g.in_mask(c) | g.in_mask(d)
    return _closure(g, (1 << a) | (1 << b), 0, from_ok, to_ok)


def break_sigma(t: Ght, a: int, b: int, c: int, d: int) -> ExtensionDelta:
    """Mirror of :func:`break_theta` seeded with ``x -> c`` and ``x -> d``."""
    _square_pre(t, a, b, c, d)
    _require(sigma_witness(t.g, a, b, c, d) is None, "no sigma chain for (a, b, c, d)")
    g = t.g
    from_ok = g.out_mask(a) | g.out_mask(b)
    to_ok = g.in_mask(a) | g.in_mask(b)
    return _closure(g, 0, (1 << c) | (1 << d), from_ok, to_ok)
