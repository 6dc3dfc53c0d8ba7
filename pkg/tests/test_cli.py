import json
import subprocess
import sys

import pytest

from scm_lab.cli import GraphReport, main, report_from_json
from scm_lab.graphs import Graph

EX1 = "1 2\\n1 4\\n2 3\\n3 4\\n1 5"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze_json(capsys, *argv):
    code, out, _ = run(capsys, "analyze", "--output", "json", *argv)
    assert code == 0
    return json.loads(out)


class TestAnalyze:
    def test_example_graph(self, capsys):
        rep = analyze_json(capsys, "--inline", EX1)
        assert rep["is_scm"] is True and rep["kind"] == "graph"

    def test_c4(self, capsys):
        rep = analyze_json(capsys, "--inline", Graph.cycle(4).to_graph6(), "--format", "graph6")
        assert rep["is_scm"] is False and rep["is_unmixed"] is True

    def test_single_edge(self, capsys):
        rep = analyze_json(capsys, "--inline", "1 2")
        assert (rep["reg"], rep["depth"], rep["a"]) == (1, 1, 1)

    def test_ideal_input(self, capsys):
        rep = analyze_json(capsys, "--inline", "x1*x3\\nx2*x4")
        assert rep["ass"] == [[1, 2], [1, 4], [2, 3], [3, 4]]
        assert rep["depth"] == 2

    def test_json_round_trip(self, capsys):
        rep = analyze_json(capsys, "--inline", EX1)
        back = report_from_json(json.loads(json.dumps(rep)))
        assert isinstance(back, GraphReport)
        assert back.to_json() == rep

    def test_text_notation(self, capsys):
        code, out, _ = run(capsys, "analyze", "--inline", EX1)
        assert code == 0
        assert "reg(R/I) = 1" in out and "a(G) = 1" in out and "x5" in out

    def test_file_and_stdin(self, capsys, tmp_path, monkeypatch):
        p = tmp_path / "c5.g6"
        p.write_text(Graph.cycle(5).to_graph6() + "\n")
        assert analyze_json(capsys, str(p))["basic_5_cycles"] == [[1, 2, 3, 4, 5]]
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO('{"n": 3, "edges": [[1, 2], [2, 3]]}'))
        assert analyze_json(capsys, "-")["is_unmixed"] is False

    def test_dump_matrices(self, capsys):
        code, out, _ = run(capsys, "analyze", "--inline", "1 2", "--dump-matrices")
        assert code == 0 and "d_0: 1 x 2" in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "analyze", "--inline", "1 2\\n2 q", "--format", "edges")
        assert code == 2 and "line 2" in err

    def test_too_many_vertices(self, capsys):
        code, _, err = run(capsys, "analyze", "--inline", "1 65", "--format", "edges")
        assert code == 2

    def test_unit_ideal(self, capsys):
        code, _, _ = run(capsys, "analyze", "--inline", "1", "--format", "ideal")
        assert code == 2

    def test_bad_field(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--inline", "1 2", "--field", "4"])
        assert exc.value.code == 2


class TestOtherCommands:
    def test_betti(self, capsys):
        code, out, _ = run(capsys, "betti", "--inline", "x1*x2\\nx2*x3", "--output", "json")
        assert code == 0
        assert json.loads(out) == {"n": 3, "entries": [[0, 0, 1], [1, 2, 2], [2, 3, 1]]}

    def test_betti_text(self, capsys):
        code, out, _ = run(capsys, "betti", "--inline", "x1*x2\\nx2*x3")
        assert "pd(R/I) = 2" in out and "depth(R/I) = 1" in out

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "4", "--connected")
        assert code == 0 and len(out.split()) == 6

    def test_enumerate_refuses(self, capsys):
        code, _, err = run(capsys, "enumerate", "8")
        assert code == 2 and "graph6" in err

    def test_examples_exit_code_reflects_result(self, capsys):
        code, out, _ = run(capsys, "examples", "--output", "json")
        rep = json.loads(out)["reports"][0]
        assert code == (0 if rep["passed"] else 1)
        assert [f["object"] for f in rep["failures"]] == ["EX3"]


class TestVerify:
    def test_t1(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "T1", "--max-n", "6", "--workers", "1")
        assert code == 0 and out.startswith("PASS T1")

    def test_failure_exit(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "P2", "--graph6", Graph.path(4).to_graph6(), "--workers", "1")
        assert code == 1 and "reproduce: scm-lab verify --theorem P2" in out

    def test_unknown_theorem(self, capsys):
        code, _, _ = run(capsys, "verify", "--theorem", "Q7")
        assert code == 2

    def test_ideal_json(self, capsys):
        ideal = json.dumps({"n": 3, "gens": [[1, 1, 0], [0, 1, 1]]})
        code, out, _ = run(capsys, "verify", "--theorem", "L1", "--ideal-json", ideal, "--output", "json", "--workers", "1")
        rep = json.loads(out)["reports"][0]
        assert code == 0 and rep["instances_checked"] == 1

    def test_seed_env_overrides(self, capsys, monkeypatch):
        monkeypatch.setenv("SCMLAB_SEED", "41")
        code, out, _ = run(capsys, "verify", "--theorem", "P0", "--max-n", "3", "--random-ideals", "5",
                           "--seed", "2", "--output", "json", "--workers", "1")
        assert code == 0 and json.loads(out)["reports"][0]["seed"] == 41

    def test_bad_seed_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SCMLAB_SEED", "x")
        code, _, _ = run(capsys, "examples")
        assert code == 2

    def test_audit(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "C2i", "--max-n", "4", "--audit", "--workers", "1")
        assert code == 0
        assert "[QQ]" in out and "[GF(2)]" in out and "field discrepancies: 0" in out

    def test_fields_do_not_share_results(self, capsys):
        outs = []
        for k in ("q", "2"):
            code, out, _ = run(capsys, "analyze", "--inline", "1 2", "--field", k, "--output", "json")
            outs.append(json.loads(out)["field"])
        assert outs == ["QQ", "GF(2)"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "scm_lab", "enumerate", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and len(proc.stdout.split()) == 4
