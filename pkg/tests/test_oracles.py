from dataclasses import replace

import pytest

from arforest import (EdgeColoring, Graph, LinearForest, SearchBudget,
                      SearchReport, ar_linear_forest, brute_force_ar,
                      brute_force_ex, build_forest_coloring, erdos_gallai_bound,
                      verify_witness)
from reference import naive_ar, naive_ex

LF = LinearForest.parse

FAST = SearchBudget(max_nodes=5_000_000, max_millis=120_000)


class TestBruteForceAr:
    @pytest.mark.parametrize("n,spec,expected", [
        # K_4's three monochromatic perfect matchings block rainbow 2K_2,
        # so (4, "2,2") is 3 rather than 1
        (4, "3", 1), (4, "4", 3), (4, "2,2", 3),
        (5, "2,2", 1), (5, "3,2", 2), (5, "4", 2),
        (6, "2,2", 1), (6, "3,2", 2),
    ])
    def test_pinned_values(self, n, spec, expected):
        report = brute_force_ar(n, LF(spec), FAST)
        assert report.exhausted
        assert report.value == expected
        assert verify_witness(report, LF(spec))

    @pytest.mark.parametrize("n,spec", [(4, "3"), (4, "2,2"), (5, "2,2")])
    def test_agrees_with_naive(self, n, spec):
        assert brute_force_ar(n, LF(spec), FAST).value == naive_ar(n, LF(spec))

    def test_forest_too_large_rejected(self):
        with pytest.raises(ValueError):
            brute_force_ar(4, LF("3,2"), FAST)

    def test_leaf_enumeration_is_canonical(self):
        # the search walks each partition of the edge set exactly once,
        # in restricted-growth form
        leaves: list = []
        brute_force_ar(4, LF("4"), FAST, collect_leaves=leaves)
        assert len(leaves) == len(set(leaves))
        for assign in leaves:
            seen_max = -1
            for c in assign:
                assert c <= seen_max + 1
                seen_max = max(seen_max, c)

    def test_at_least_construction(self):
        # lower bound from the explicit extremal coloring must be attained
        forest = LF("2,2")
        coloring = build_forest_coloring(6, forest)
        report = brute_force_ar(6, forest, FAST)
        assert report.exhausted
        assert report.value >= coloring.m
        assert report.value == ar_linear_forest(6, forest).value

    def test_budget_exhaustion_returns_lower_bound(self):
        report = brute_force_ar(6, LF("3,2"), SearchBudget(max_nodes=50))
        assert not report.exhausted
        full = brute_force_ar(6, LF("3,2"), FAST)
        assert report.value <= full.value

    def test_parallel_matches_sequential(self):
        seq = brute_force_ar(5, LF("3,2"), FAST)
        par = brute_force_ar(
            5, LF("3,2"), SearchBudget(max_nodes=5_000_000,
                                       max_millis=120_000, parallelism=2))
        assert par.exhausted and par.value == seq.value
        assert verify_witness(par, LF("3,2"))


class TestBruteForceEx:
    @pytest.mark.parametrize("n,spec,expected", [
        (4, "3", 2), (4, "2,2", 3), (5, "2,2", 4),
        (5, "4", 4), (5, "3,2", 6), (6, "3,3", 10),
        (7, "4,2", 11),
    ])
    def test_pinned_values(self, n, spec, expected):
        report = brute_force_ex(n, LF(spec), FAST)
        assert report.exhausted
        assert report.value == expected
        assert verify_witness(report, LF(spec))

    @pytest.mark.parametrize("n,spec", [
        (4, "3"), (4, "2,2"), (5, "2,2"), (5, "4"),
    ])
    def test_agrees_with_naive(self, n, spec):
        assert brute_force_ex(n, LF(spec), FAST).value == naive_ex(n, LF(spec))

    def test_two_disjoint_edges_on_five_vertices(self):
        # the star K_{1,4} has four edges and no two disjoint ones, so the
        # answer is 4, not 3
        report = brute_force_ex(5, LF("2,2"), FAST)
        assert report.value == 4 == naive_ex(5, LF("2,2"))

    def test_single_path_respects_average_degree_bound(self):
        for n in range(3, 8):
            for k in range(3, n + 1):
                report = brute_force_ex(n, LF(str(k)), FAST)
                assert report.exhausted
                assert report.value <= erdos_gallai_bound(n, k)

    def test_parallel_matches_sequential(self):
        seq = brute_force_ex(7, LF("3,2"), FAST)
        par = brute_force_ex(
            7, LF("3,2"), SearchBudget(max_nodes=5_000_000,
                                       max_millis=120_000, parallelism=2))
        assert par.exhausted and par.value == seq.value

    def test_budget_exhaustion(self):
        report = brute_force_ex(8, LF("4,3"), SearchBudget(max_nodes=10))
        assert not report.exhausted
        assert report.witness is not None  # seeded incumbent survives


class TestVerifyWitness:
    def test_accepts_genuine_reports(self):
        forest = LF("3,2")
        assert verify_witness(brute_force_ar(5, forest, FAST), forest)
        assert verify_witness(brute_force_ex(6, forest, FAST), forest)

    def test_rejects_missing_witness(self):
        report = SearchReport(value=3, witness=None, exhausted=True)
        assert not verify_witness(report, LF("2,2"))

    def test_rejects_tampered_value(self):
        forest = LF("2,2")
        report = brute_force_ar(5, forest, FAST)
        assert not verify_witness(replace(report, value=report.value + 1),
                                  forest)

    def test_rejects_recolored_witness(self):
        forest = LF("2,2")
        # the all-rainbow coloring certainly contains a rainbow copy
        fake = SearchReport(value=10, witness=EdgeColoring.all_rainbow(5),
                            exhausted=True)
        assert not verify_witness(fake, forest)

    def test_rejects_graph_with_copy(self):
        from arforest import complete_graph
        fake = SearchReport(value=10, witness=complete_graph(5),
                            exhausted=True)
        assert not verify_witness(fake, LF("2,2"))


class TestReportShape:
    def test_json_dict_fields(self):
        report = brute_force_ar(4, LF("2,2"), FAST)
        d = report.to_json_dict()
        assert d["value"] == 3 and d["exhausted"] is True
        assert set(d["stats"]) == {"nodes", "pruned_by_rainbow",
                                   "pruned_by_bound", "elapsed_ms"}

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            SearchBudget(max_nodes=0)
        with pytest.raises(ValueError):
            SearchBudget(parallelism=0)
