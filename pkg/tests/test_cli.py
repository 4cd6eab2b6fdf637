import json

import pytest

from arforest import EdgeColoring, LinearForest, build_forest_coloring
from arforest.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestFormulaCommand:
    def test_ar_main(self, capsys):
        code, out = run(capsys, "formula", "--name", "ar-main",
                        "--n", "20", "--forest", "5,4")
        assert code == 0
        assert out["value"] == 39
        assert out["epsilon"] == 1
        assert out["inputs"] == {"n": 20, "forest": "5,4"}

    def test_eg_bound_fraction_as_string(self, capsys):
        code, out = run(capsys, "formula", "--name", "eg-bound",
                        "--n", "7", "--k", "5")
        assert code == 0
        assert out["value"] == "21/2"

    def test_eg_bound_integer_stays_integer(self, capsys):
        code, out = run(capsys, "formula", "--name", "eg-bound",
                        "--n", "10", "--k", "5")
        assert code == 0 and out["value"] == 15

    def test_asymptotic(self, capsys):
        code, out = run(capsys, "formula", "--name", "ar-asymptotic",
                        "--forest", "5,4")
        assert code == 0 and out["value"] == 2

    def test_out_of_range_is_usage_error(self, capsys):
        code, out = run(capsys, "formula", "--name", "ar-matching",
                        "--n", "6", "--t", "3")
        assert code == 2
        assert "error" in out and out["error"]["message"]

    def test_missing_arg_is_usage_error(self, capsys):
        code, out = run(capsys, "formula", "--name", "ar-path", "--n", "20")
        assert code == 2 and "error" in out


class TestConstructCommand:
    def test_turan_graph6_file(self, capsys, tmp_path):
        out_path = tmp_path / "g.g6"
        code, out = run(capsys, "construct", "--family", "turan",
                        "--n", "20", "--forest", "5,4",
                        "--out", str(out_path))
        assert code == 0
        assert out["edges"] == 54 and out["verified"] is True
        from arforest import graph6_decode
        g = graph6_decode(out_path.read_text().strip())
        assert g.n == 20 and g.edge_count == 54
        sidecar = json.loads((tmp_path / "g.g6.json").read_text())
        assert sidecar == out

    def test_forest_coloring_roundtrips_through_verify(self, capsys, tmp_path):
        out_path = tmp_path / "c.txt"
        code, out = run(capsys, "construct", "--family", "forest",
                        "--n", "12", "--forest", "4,2", "--out", str(out_path))
        assert code == 0
        assert out["colors"] == 12 and out["verified"] is True
        code, out = run(capsys, "verify", "--coloring", str(out_path),
                        "--forest", "4,2")
        assert code == 0 and out["rainbow"] is False

    def test_path_family(self, capsys):
        code, out = run(capsys, "construct", "--family", "path",
                        "--n", "10", "--k", "5")
        assert code == 0 and out["colors"] == 10

    def test_too_small_host_is_usage_error(self, capsys):
        code, out = run(capsys, "construct", "--family", "forest",
                        "--n", "6", "--forest", "4,2")
        assert code == 2 and "error" in out


class TestVerifyCommand:
    def test_rainbow_found_exits_one(self, capsys, tmp_path):
        path = tmp_path / "rainbow.txt"
        path.write_text(EdgeColoring.all_rainbow(6).to_text())
        code, out = run(capsys, "verify", "--coloring", str(path),
                        "--forest", "3,2")
        assert code == 1
        assert out["rainbow"] is True
        assert out["witness"]["paths"]

    def test_monochromatic_exits_zero(self, capsys, tmp_path):
        path = tmp_path / "mono.txt"
        path.write_text(EdgeColoring.monochromatic(6).to_text())
        code, out = run(capsys, "verify", "--coloring", str(path),
                        "--forest", "2,2")
        assert code == 0 and out["rainbow"] is False

    def test_missing_file_is_usage_error(self, capsys):
        code, out = run(capsys, "verify", "--coloring", "/nonexistent",
                        "--forest", "2,2")
        assert code == 2 and "error" in out


class TestSearchCommands:
    def test_search_ar_exact(self, capsys):
        code, out = run(capsys, "search-ar", "--n", "5", "--forest", "3,2")
        assert code == 0
        assert out["value"] == 2 and out["exhausted"] is True
        assert set(out["stats"]) == {"nodes", "pruned_by_rainbow",
                                     "pruned_by_bound", "elapsed_ms"}

    def test_search_ex_witness_file(self, capsys, tmp_path):
        wpath = tmp_path / "w.g6"
        code, out = run(capsys, "search-ex", "--n", "5", "--forest", "2,2",
                        "--witness-out", str(wpath))
        assert code == 0 and out["value"] == 4
        from arforest import contains_subgraph, graph6_decode
        g = graph6_decode(wpath.read_text().strip())
        assert g.edge_count == 4
        assert contains_subgraph(g, LinearForest.parse("2,2")) is None

    def test_budget_exhaustion_exits_three(self, capsys):
        code, out = run(capsys, "search-ar", "--n", "6", "--forest", "3,2",
                        "--max-nodes", "40")
        assert code == 3 and out["exhausted"] is False

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("ARFOREST_MAX_NODES", "40")
        code, out = run(capsys, "search-ar", "--n", "6", "--forest", "3,2")
        assert code == 3

    def test_bad_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("ARFOREST_MAX_NODES", "lots")
        code, out = run(capsys, "search-ar", "--n", "5", "--forest", "2,2")
        assert code == 2 and "error" in out

    def test_golden_stability_outside_stats(self, capsys):
        code1, out1 = run(capsys, "search-ar", "--n", "5", "--forest", "2,2")
        code2, out2 = run(capsys, "search-ar", "--n", "5", "--forest", "2,2")
        out1.pop("stats"), out2.pop("stats")
        assert code1 == code2 == 0 and out1 == out2


class TestRepresentingCommand:
    def _coloring_file(self, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text(
            EdgeColoring.from_assignment(4, [0, 0, 1, 1, 2, 2]).to_text())
        return path

    def test_enumeration(self, capsys, tmp_path):
        path = self._coloring_file(tmp_path)
        code, out = run(capsys, "representing", "--coloring", str(path),
                        "--cap", "100")
        assert code == 0
        assert out["total_count"] == "8"
        assert len(out["graphs"]) == 8 and out["truncated"] is False

    def test_cap(self, capsys, tmp_path):
        path = self._coloring_file(tmp_path)
        code, out = run(capsys, "representing", "--coloring", str(path),
                        "--cap", "3")
        assert code == 0
        assert len(out["graphs"]) == 3 and out["truncated"] is True

    def test_sampling_deterministic(self, capsys, tmp_path):
        path = self._coloring_file(tmp_path)
        _, out1 = run(capsys, "representing", "--coloring", str(path),
                      "--sample-seed", "7")
        _, out2 = run(capsys, "representing", "--coloring", str(path),
                      "--sample-seed", "7")
        assert out1 == out2 and len(out1["graphs"]) == 1


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_console_entry_point_exists(self):
        import importlib.metadata as md
        eps = md.entry_points(group="console_scripts")
        assert any(ep.name == "arforest" for ep in eps)
