import itertools

import pytest

from conftest import ghts, naive_pt, naive_transitive, pt_graphs
from smartorient import oracle
from smartorient.engine import smart_reorient
from smartorient.errors import ResourceGuardError
from smartorient.generators import fixture, fixture_ght
from smartorient.ograph import ExtensionDelta, Ght, OGraph, Rel
from smartorient.predicates import check_lambda, check_phi, check_psi, check_theta

A, B, C, D = range(4)


def naive_reorientations(g: OGraph) -> set[OGraph]:
    edges = g.arrows()
    found = set()
    for flips in itertools.product((False, True), repeat=len(edges)):
        order = OGraph(g.n, [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)])
        if naive_transitive(order):
            found.add(order)
    return found


class TestReorientations:
    def test_c3(self):
        assert len(oracle.all_transitive_reorientations(fixture("C3")[0])) == 6

    def test_single_edge(self):
        assert len(oracle.all_transitive_reorientations(OGraph(2, [(0, 1)]))) == 2

    def test_empty(self):
        assert oracle.all_transitive_reorientations(OGraph(3)) == [OGraph(3)]

    def test_matches_naive_enumeration(self):
        for g in pt_graphs(4):
            got = oracle.all_transitive_reorientations(g)
            assert len(got) == len(set(got))
            assert set(got) == naive_reorientations(g)

    def test_deterministic(self):
        g = fixture("THETA5")[0]
        assert oracle.all_transitive_reorientations(g) == oracle.all_transitive_reorientations(g)

    def test_guard(self):
        big = OGraph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
        with pytest.raises(ResourceGuardError):
            oracle.all_transitive_reorientations(big)


class TestExtensions:
    def test_single_vertex(self):
        assert len(list(oracle.enumerate_extensions(OGraph(1)))) == 3

    def test_g22_includes_gadget(self):
        assert ExtensionDelta.from_arrows(4, to_x=[A, B]) in set(oracle.enumerate_extensions(fixture("G22-L")[0]))

    def test_c3_count(self):
        # pinned from the first run of this enumeration
        assert len(list(oracle.enumerate_extensions(fixture("C3")[0]))) == 12

    def test_matches_naive_filter(self):
        for g in pt_graphs(3):
            got = set(oracle.enumerate_extensions(g))
            for rel in itertools.product(list(Rel), repeat=g.n):
                d = ExtensionDelta(g.n, rel)
                assert (d in got) == naive_pt(g.apply_delta(d))

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            next(oracle.enumerate_extensions(OGraph(13)))

    def test_extension_orders_match_full_enumeration(self):
        for t in ghts(3):
            old = set(t.order.arrows())
            for d in oracle.enumerate_extensions(t.g):
                h = t.g.apply_delta(d)
                full = {o for o in oracle.all_transitive_reorientations(h)
                        if {(u, v) for u, v in o.arrows() if u < t.n and v < t.n} == old}
                assert set(oracle.extension_orders(t, d)) == full


class TestExtendible:
    def test_transitive_triangle(self):
        ok, d = oracle.is_extendible(fixture_ght("TT-L"))
        assert not ok and d == ExtensionDelta.from_arrows(3, from_x=[C])

    def test_two_plus_two(self):
        ok, d = oracle.is_extendible(fixture_ght("G22-L"))
        assert not ok and d == ExtensionDelta.from_arrows(4, to_x=[A, B])

    def test_c3_smart(self):
        c3 = fixture("C3")[0]
        assert oracle.is_extendible(Ght(c3, smart_reorient(c3))) == (True, None)


class TestExhaustive:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 21), (4, 279), (5, 6105)])
    def test_counts(self, n, count):
        assert sum(1 for _ in oracle.exhaustive_pseudo_transitive(n)) == count

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            next(oracle.exhaustive_pseudo_transitive(6))
        with pytest.raises(ResourceGuardError):
            next(oracle.exhaustive_pseudo_transitive(-1))

    def test_canonical_order(self):
        assert [g.arrows() for g in oracle.exhaustive_pseudo_transitive(2)] == [[], [(0, 1)], [(1, 0)]]


class TestCharacterisations:
    def test_covering_is_the_triangle_condition(self):
        for t in ghts(4):
            for d in oracle.enumerate_extensions(t.g):
                assert oracle.neighborhood_covered(t, d) == oracle.triangle_condition(t, d)

    def test_lambda_brackets_the_split(self):
        for t in ghts(4):
            for d in oracle.enumerate_extensions(t.g):
                lam = check_lambda(t, d) is None
                split = oracle.minus_below_plus(t, d)
                if lam:
                    assert split
                if oracle.neighborhood_covered(t, d) and split:
                    assert lam

    def test_covering_and_split_iff_witness_properties(self):
        for t in ghts(4):
            good = all(oracle.neighborhood_covered(t, d) and oracle.minus_below_plus(t, d)
                       for d in oracle.enumerate_extensions(t.g))
            props = check_phi(t) is None and check_psi(t) is None and check_theta(t) is None
            assert good == props
