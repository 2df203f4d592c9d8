import itertools

import pytest

from conftest import ghts
from smartorient import oracle
from smartorient.adversary import (
    break_phi,
    break_psi,
    break_sigma,
    break_theta,
    gadget_transitive_triangle,
    gadget_two_plus_two,
)
from smartorient.generators import fixture_ght
from smartorient.ograph import ExtensionDelta, Ght, OGraph, delta_is_pseudo_transitive
from smartorient.predicates import check_phi, check_psi, phi_witness, psi_witness, sigma_witness, two_plus_two

A, B, C, D = range(4)


class TestGadgets:
    def test_triangle_left(self):
        t, d = gadget_transitive_triangle("left")
        assert t.g.arrows() == [(A, B), (A, C), (B, C)]
        assert t.order.arrows() == [(A, B), (A, C), (C, B)]
        assert d == ExtensionDelta.from_arrows(3, from_x=[C])

    def test_triangle_right(self):
        t, d = gadget_transitive_triangle("right")
        assert d == ExtensionDelta.from_arrows(3, to_x=[C])
        assert t.g.arrow(C, A) and t.g.arrow(C, B)

    def test_two_plus_two(self):
        t, d = gadget_two_plus_two("left")
        assert t.g.arrows() == [(A, C), (B, D)]
        assert t.order.arrows() == [(A, C), (D, B)]
        assert d == ExtensionDelta.from_arrows(4, to_x=[A, B])
        assert gadget_two_plus_two("right")[1] == ExtensionDelta.from_arrows(4, from_x=[C, D])

    @pytest.mark.parametrize("make", [gadget_transitive_triangle, gadget_two_plus_two])
    @pytest.mark.parametrize("side", ["left", "right"])
    def test_deltas_are_valid_and_unfollowable(self, make, side):
        t, d = make(side)
        assert delta_is_pseudo_transitive(t.g, d) is None
        assert not oracle.admits_extension(t, d)

    def test_left_two_plus_two_is_the_oracle_witness(self):
        t, d = gadget_two_plus_two("left")
        assert oracle.is_extendible(t) == (False, d)

    def test_bad_side(self):
        with pytest.raises(ValueError):
            gadget_transitive_triangle("middle")
        with pytest.raises(ValueError):
            gadget_two_plus_two("up")


def _with_triangle():
    """A 2+2 on 0..3 next to a transitive triangle on 4..6 that fails phi."""
    g = OGraph(7, [(0, 2), (1, 3), (4, 5), (4, 6), (5, 6)])
    order = OGraph(7, [(0, 2), (3, 1), (4, 5), (4, 6), (6, 5)])
    return Ght(g, order)


class TestBreakers:
    def test_phi_on_triangle(self):
        assert break_phi(fixture_ght("TT-L"), A, B, C) == gadget_transitive_triangle("left")[1]

    def test_psi_on_triangle(self):
        assert break_psi(fixture_ght("TT-R"), A, B, C) == gadget_transitive_triangle("right")[1]

    def test_theta_on_two_plus_two(self):
        assert break_theta(fixture_ght("G22-L"), A, B, C, D) == gadget_two_plus_two("left")[1]

    def test_sigma_on_two_plus_two(self):
        assert break_sigma(fixture_ght("G22-R"), A, B, C, D) == gadget_two_plus_two("right")[1]

    def test_preconditions(self):
        with pytest.raises(ValueError, match="theta chain"):
            break_theta(fixture_ght("THETA5"), 0, 1, 2, 3)
        with pytest.raises(ValueError, match="a -> c"):
            break_phi(fixture_ght("TT-R"), A, B, C)
        with pytest.raises(ValueError, match="c -> a"):
            break_psi(fixture_ght("TT-L"), A, B, C)
        with pytest.raises(ValueError, match="in range"):
            break_sigma(fixture_ght("G22-L"), A, B, C, 9)
        with pytest.raises(ValueError, match="Phi holds"):
            break_theta(_with_triangle(), 0, 1, 2, 3)

    def test_phi_chain_blocks_the_breaker(self):
        for t in ghts(4):
            g, p = t.g, t.order
            for a, b, c in itertools.permutations(range(t.n), 3):
                if g.arrow(a, c) and g.arrow(b, c) and p.arrow(a, c) and p.arrow(c, b) and phi_witness(g, a, b, c):
                    with pytest.raises(ValueError, match="phi chain"):
                        break_phi(t, a, b, c)
                    return
        pytest.fail("no triangle with a phi chain on four vertices")

    def test_psi_and_sigma_exhaustive(self):
        checked = 0
        for t in ghts(4):
            g, p = t.g, t.order
            for a, b, c in itertools.permutations(range(t.n), 3):
                if g.arrow(c, a) and g.arrow(c, b) and p.arrow(a, c) and p.arrow(c, b) and psi_witness(g, a, b, c) is None:
                    d = break_psi(t, a, b, c)
                    assert delta_is_pseudo_transitive(g, d) is None
                    assert not oracle.admits_extension(t, d)
                    assert not d.neighbor_mask & ((1 << a) | (1 << b))
                    checked += 1
            if check_phi(t) is None and check_psi(t) is None:
                for a, b, c, dd in two_plus_two(t):
                    if sigma_witness(g, a, b, c, dd) is None:
                        d = break_sigma(t, a, b, c, dd)
                        assert delta_is_pseudo_transitive(g, d) is None
                        assert not oracle.admits_extension(t, d)
                        assert not d.neighbor_mask & ((1 << a) | (1 << b))
                        checked += 1
        assert checked > 0
