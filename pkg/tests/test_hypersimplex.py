import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersecant import (
    Monomial,
    MonomialIdeal,
    Polynomial,
    both_inner_orders,
    crosses,
    edge_var,
    in_secant_ideal,
    in_toric_ideal,
    initial_edge_ideal,
    master_polynomial,
    toric_gb,
)
from hypersecant.noncrossing import AdmissibleSequence

from conftest import edges_for, monomial_strategy

PENTAD_SEQ = AdmissibleSequence.from_arrays((1, 2, 3, 4, 5), (1, 2, 3, 4, 5))


def mono(*edges):
    return Monomial.from_edges(edges)


class TestCrosses:
    def test_interleaving_pair(self):
        assert crosses(6, (1, 3), (2, 4))

    def test_disjoint_arcs(self):
        assert not crosses(6, (1, 2), (3, 4))

    def test_shared_endpoint_counts_as_crossing(self):
        assert crosses(6, (1, 2), (2, 3))

    def test_symmetric(self):
        for e, f in itertools.combinations(edges_for(7), 2):
            assert crosses(7, e, f) == crosses(7, f, e)

    def test_rotation_invariant(self):
        n = 7
        rot = lambda v: v % n + 1
        for e, f in itertools.combinations(edges_for(n), 2):
            re = tuple(sorted((rot(e[0]), rot(e[1]))))
            rf = tuple(sorted((rot(f[0]), rot(f[1]))))
            assert crosses(n, e, f) == crosses(n, re, rf)

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            crosses(5, (1, 6), (2, 3))


class TestToricGb:
    def test_n3_empty(self):
        assert toric_gb(3) == []

    def test_n4_exact(self):
        gens = toric_gb(4)
        polys = {g.polynomial() for g in gens}
        assert polys == {
            Polynomial.from_edge_terms([(1, ((1, 2), (3, 4))), (-1, ((1, 3), (2, 4)))]),
            Polynomial.from_edge_terms([(1, ((1, 4), (2, 3))), (-1, ((1, 3), (2, 4)))]),
        }

    def test_n5_count(self):
        assert len(toric_gb(5)) == 2 * comb(5, 4) == 10

    def test_leads_are_leading_terms_under_both_orders(self):
        for n in range(4, 8):
            for order in both_inner_orders(n):
                for g in toric_gb(n):
                    m, c = order.leading_term(g.polynomial())
                    assert m == g.lead and c == 1

    def test_reduced_basis_property(self):
        # No term of any generator is divisible by another generator's lead.
        for n in (5, 6):
            gens = toric_gb(n)
            for gi, g in enumerate(gens):
                for m in (g.lead, g.trail):
                    for hj, h in enumerate(gens):
                        if hj != gi:
                            assert not h.lead.divides(m)

    def test_members_of_kernel(self):
        for g in toric_gb(7):
            assert in_toric_ideal(7, g.polynomial())


class TestInitialEdgeIdeal:
    def test_n4_exact(self):
        assert set(initial_edge_ideal(4).generators) == {
            mono((1, 2), (3, 4)),
            mono((1, 4), (2, 3)),
        }

    def test_n5_count_by_enumeration(self):
        # Oracle: count noncrossing unordered pairs directly.
        expected = sum(
            1 for e, f in itertools.combinations(edges_for(5), 2) if not crosses(5, e, f)
        )
        assert len(initial_edge_ideal(5)) == expected == 10

    def test_n3_empty(self):
        assert initial_edge_ideal(3).is_empty

    def test_matches_toric_leads(self):
        for n in range(3, 10):
            leads = MonomialIdeal(g.lead for g in toric_gb(n))
            assert leads == initial_edge_ideal(n)


class TestMembershipOracles:
    def test_toric_generator(self):
        p = Polynomial.from_edge_terms([(1, ((1, 2), (3, 4))), (-1, ((1, 3), (2, 4)))])
        assert in_toric_ideal(4, p)

    def test_single_variable_not_member(self):
        assert not in_toric_ideal(4, Polynomial.variable(edge_var(1, 2)))

    def test_pentad_in_secant(self):
        assert in_secant_ideal(5, master_polynomial(PENTAD_SEQ))

    def test_two_by_two_minor_not_in_secant(self):
        p = Polynomial.from_edge_terms([(1, ((1, 2), (3, 4))), (-1, ((1, 3), (2, 4)))])
        assert not in_secant_ideal(4, p)

    def test_zero_in_secant(self):
        assert in_secant_ideal(5, Polynomial.zero())

    def test_secant_oracle_rejects_inhomogeneous(self):
        p = Polynomial.variable(edge_var(1, 2)) + Polynomial.constant(1)
        with pytest.raises(ValueError):
            in_secant_ideal(4, p)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            in_toric_ideal(4, Polynomial.variable(edge_var(1, 5)))


class TestMonomialIdeal:
    def test_minimalization(self):
        big = mono((1, 2), (3, 4), (1, 3))
        small = mono((1, 2), (3, 4))
        ideal = MonomialIdeal([big, small])
        assert ideal.generators == (small,)

    def test_membership(self):
        ideal = initial_edge_ideal(5)
        assert mono((1, 2), (3, 4)) in ideal
        assert mono((1, 2), (3, 4), (2, 4)) in ideal
        assert mono((1, 3), (2, 4)) not in ideal
        assert Monomial.one() not in ideal

    def test_empty(self):
        ideal = MonomialIdeal([])
        assert ideal.is_empty
        assert mono((1, 2)) not in ideal

    @given(st.lists(monomial_strategy(max_factors=3), max_size=6))
    @settings(max_examples=200)
    def test_minimalization_idempotent(self, gens):
        ideal = MonomialIdeal(gens)
        again = MonomialIdeal(ideal.generators)
        assert again == ideal
        # No generator divides another.
        for a, b in itertools.permutations(ideal.generators, 2):
            assert not a.divides(b)

    @given(st.lists(monomial_strategy(max_factors=2), max_size=5))
    @settings(max_examples=200)
    def test_membership_agrees_with_divisibility(self, gens):
        ideal = MonomialIdeal(gens)
        probe = mono((1, 2), (3, 4))
        assert ideal.contains(probe) == any(g.divides(probe) for g in ideal.generators)
