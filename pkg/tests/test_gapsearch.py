"""Achievability sweeps, the postage-stamp closure, and gap certification."""

import pytest

from invsp.affinefamily import build_coefficient_family
from invsp.construct import basic_poly_closed
from invsp.gapsearch import (
    GAMMA7_CATALOG,
    achievable_set,
    catalog_h,
    closure_frontier,
    combine_witness,
    frobenius_closure,
    search_targets,
    verify_fixtures,
    verify_gap_theorem,
)
from invsp.groups import GroupSpec
from invsp.polycore import Polynomial
from invsp.rat import rat
from invsp.sweep import run_l0_sweep
from invsp.transform import tensor_step, validate_special

G7 = GroupSpec.gamma7()
F7 = basic_poly_closed(G7)


class TestSweeps:
    def test_degree10_complete_set(self):
        rep = achievable_set(G7, 10, "signed")
        assert rep.exhaustive
        assert sorted(rep.achievable) == [17, 29, 30]
        for value, H in rep.achievable.items():
            G = tensor_step(F7, H)
            assert validate_special(G7, G).is_special
            assert G.term_count() == value

    def test_degree9_only_basic(self):
        rep = achievable_set(G7, 9, "signed")
        assert rep.exhaustive and sorted(rep.achievable) == [17]

    def test_degree11_top_degree_floor(self):
        rep = achievable_set(
            G7, 11, "signed", targets=range(1, 31), h_degree_exact=4
        )
        assert rep.exhaustive and not rep.achievable

    def test_degree12_top_degree_floor(self):
        rep = achievable_set(
            G7, 12, "signed", targets=range(1, 33), h_degree_exact=5
        )
        assert rep.exhaustive and not rep.achievable

    def test_degree13_floor(self):
        sought = sorted(set(range(1, 29)) | {31, 35, 36})
        rep = achievable_set(G7, 13, "signed", targets=sought)
        assert rep.exhaustive
        assert sorted(rep.achievable) == [17]
        assert rep.achievable[17].is_zero()
        assert set(rep.proven_gaps) == set(sought) - {17}

    def test_monotone_in_degree(self):
        g = GroupSpec.weighted(7, 2)
        small = achievable_set(g, 9, "signed", value_cap=25)
        large = achievable_set(g, 13, "signed", value_cap=25)
        assert small.exhaustive and large.exhaustive
        assert set(small.achievable) <= set(large.achievable)

    def test_weighted_low_range(self):
        g = GroupSpec.weighted(11, 2)
        rep = achievable_set(
            g, 21, "signed", targets=range(1, 13), skip_all_zero=True
        )
        assert rep.exhaustive and not rep.achievable
        rep2 = achievable_set(g, 21, "signed", targets=[13, 14])
        assert rep2.exhaustive and sorted(rep2.achievable) == [13, 14]

    def test_jobs_do_not_change_results(self):
        sought = list(range(1, 31))
        seq = achievable_set(G7, 11, "signed", targets=sought, h_degree_exact=4, jobs=1)
        par = achievable_set(G7, 11, "signed", targets=sought, h_degree_exact=4, jobs=2)
        assert seq.proven_gaps == par.proven_gaps
        assert sorted(seq.achievable) == sorted(par.achievable)
        assert seq.exhaustive == par.exhaustive

    def test_budget_exhaustion_reported(self):
        rep = achievable_set(G7, 17, "signed", targets=[31, 35, 36], budget=2000)
        assert not rep.exhaustive
        assert rep.proven_gaps == []


class TestClosure:
    def test_single_base_17(self):
        closed = frobenius_closure({17: F7}, 200)
        values = set(closed)
        assert {17, 33, 34, 49, 50, 51}.issubset(values)
        assert {18, 31, 32, 35, 36, 48}.isdisjoint(values)
        for value in (33, 34, 49, 51):
            G = closed[value]
            assert validate_special(G7, G).is_special
            assert G.term_count() == value

    def test_catalog_base_covers_everything_from_37(self):
        base = {}
        for name, h_terms, expected in GAMMA7_CATALOG:
            base.setdefault(expected, tensor_step(F7, catalog_h(h_terms, 3)))
        closed = frobenius_closure(base, 200)
        assert all(v in closed for v in range(37, 201))
        assert closure_frontier(closed, 17) == 37
        assert {31, 35, 36}.isdisjoint(closed)

    def test_idempotent_and_monotone(self):
        base = {17: F7}
        once = frobenius_closure(base, 120)
        twice = frobenius_closure(once, 120)
        assert set(once) == set(twice)
        bigger = frobenius_closure({17: F7, 29: tensor_step(F7, Polynomial(3, {(1, 1, 1): 14}))}, 120)
        assert set(once) <= set(bigger)

    def test_combine_counts(self):
        f = basic_poly_closed(GroupSpec.weighted(5, 2))
        assert combine_witness(f, f, full=False).term_count() == 8
        assert combine_witness(f, f, full=True).term_count() == 7

    def test_empty_base_rejected(self):
        with pytest.raises(ValueError):
            frobenius_closure({}, 10)


class TestFixtures:
    def test_gamma7_catalog_names_and_values(self):
        names = [name for name, _, _ in GAMMA7_CATALOG]
        assert len(names) == 27
        values = sorted(n for _, _, n in GAMMA7_CATALOG)
        assert values == [17, 29, 30, 32, 33, 34] + list(range(37, 58))

    def test_all_fixtures_pass(self):
        for g in (G7, GroupSpec.weighted(11, 2), GroupSpec.scalar(2, 2)):
            for result in verify_fixtures(g):
                assert result.passed, (result.name, result.detail)

    def test_cancellation_detail(self):
        H = catalog_h([(False, 14, (1, 1, 1)), (False, 203, (2, 2, 2))], 3)
        G = tensor_step(F7, H)
        assert G.coefficient((2, 2, 2)) == 0
        assert G.term_count() == 41


class TestGapTheorems:
    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_weighted(self, r):
        rep = verify_gap_theorem(GroupSpec.weighted(2 * r + 1, 2))
        assert rep.all_passed and rep.exhaustive
        assert rep.frontier == 2 * r + 3
        assert rep.gaps == [v for v in range(1, 2 * r + 3) if v != r + 2]
        assert set(range(2 * r + 3, 10 * (r + 2) + 1)).issubset(rep.achievable)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_scalar_dimension_two(self, m):
        rep = verify_gap_theorem(GroupSpec.scalar(m, 2))
        assert rep.all_passed and rep.exhaustive
        assert rep.frontier == 2 * m + 1
        assert rep.gaps == [v for v in range(1, 2 * m + 1) if v != m + 1]

    def test_scalar_dimension_one(self):
        rep = verify_gap_theorem(GroupSpec.scalar(4, 1), n1_limit=25)
        assert rep.all_passed
        assert sorted(rep.achievable) == list(range(1, 26))

    def test_gamma7(self):
        rep = verify_gap_theorem(G7)
        assert rep.all_passed and rep.exhaustive
        assert rep.undecided == [31, 35, 36]
        assert rep.frontier == 37
        assert rep.gaps == [v for v in range(1, 29) if v != 17]
        below = {v for v in rep.achievable if v < 37}
        assert below == {17, 29, 30, 32, 33, 34}


class TestSearchTargets:
    def test_find_29_at_degree_10(self):
        rep = search_targets(G7, [29], 10)
        assert rep.exhaustive and 29 in rep.found
        H = rep.found[29]
        assert H == Polynomial(3, {(1, 1, 1): 14})

    def test_undecided_triple_scoped(self):
        rep = search_targets(G7, [31, 35, 36], 13)
        assert rep.exhaustive and not rep.found
        assert not rep.unconditional  # degree 17 would be needed for a final answer

    def test_budgeted_open_problem_is_inconclusive(self):
        rep = search_targets(G7, [31, 35, 36], 17, budget=2000)
        assert not rep.exhaustive and not rep.unconditional

    def test_signed_hunt_runs_honestly(self):
        rep = search_targets(GroupSpec.scalar(4, 2), [8], 8, budget=20000)
        for value, H in rep.found.items():
            G = tensor_step(basic_poly_closed(GroupSpec.scalar(4, 2)), H)
            assert validate_special(GroupSpec.scalar(4, 2), G).is_special
            assert G.term_count() == value


class TestSweepEngineEdges:
    def test_family_without_params(self):
        fam = build_coefficient_family(G7, 0, "signed")
        rep = run_l0_sweep(fam)
        assert rep.exhaustive and sorted(rep.achievable) == [17]

    def test_skip_all_zero(self):
        fam = build_coefficient_family(G7, 3, "signed")
        rep = run_l0_sweep(fam, skip_all_zero=True)
        assert sorted(rep.achievable) == [29, 30]


class TestUnconditionalScope:
    def test_low_target_is_settled_outright(self):
        # a count of 18 could only occur in degree up to 8, so a degree-13
        # sweep settles it for good
        rep = search_targets(G7, [18], 13)
        assert rep.exhaustive and not rep.found and rep.unconditional

    def test_high_target_stays_scoped(self):
        rep = search_targets(G7, [36], 13)
        assert rep.exhaustive and not rep.found and not rep.unconditional
