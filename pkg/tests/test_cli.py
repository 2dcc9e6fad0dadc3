import json

import pytest

from cozero.cli import main


def run_cli(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse exits
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_z2_cubed(self, capsys):
        code, out, _ = run_cli(["analyze", "Z2xZ2xZ2"], capsys)
        assert code == 0
        assert "omega=3 chi=3 perfect=true" in out
        assert "formula C(3,1)=3: match" in out

    def test_z4_null(self, capsys):
        code, out, _ = run_cli(["analyze", "Z4"], capsys)
        assert code == 0
        assert "null graph" in out
        assert "omega=1 chi=1" in out

    def test_crt_isomorphic_presentations(self, capsys):
        code, out, _ = run_cli(["analyze", "--format", "json",
                                "Z2xZ3", "Z6"], capsys)
        assert code == 0
        a, b = json.loads(out)
        for key in ["cardinality", "units", "vertices", "edges",
                    "omega", "chi", "perfect"]:
            assert a[key] == b[key]

    def test_rings_flag(self, capsys):
        code, out, _ = run_cli(["analyze", "--rings", "Z2xZ2,Z3xZ3"], capsys)
        assert code == 0
        assert "Z2xZ2:" in out and "Z3xZ3:" in out

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(["analyze", "Zbogus"], capsys)
        assert code == 2

    def test_no_specs_exit_2(self, capsys):
        code, _, _ = run_cli(["analyze"], capsys)
        assert code == 2

    def test_cap_violation_exit_1(self, capsys):
        code, out, _ = run_cli(["analyze", "Z2xZ2", "--max-cardinality", "3"],
                               capsys)
        assert code == 1
        assert "error" in out


class TestVerify:
    def test_named_suite(self, capsys):
        code, out, _ = run_cli(["verify", "--suite", "clique-formula",
                                "--rings", "Z2xZ2,Z2xZ2xZ2"], capsys)
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 2
        assert all(r["pass"] for r in reports)

    def test_unknown_claim_exit_2(self, capsys):
        code, _, err = run_cli(["verify", "--suite", "bogus"], capsys)
        assert code == 2

    def test_multiple_claims(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--suite", "null-graph,quotient-reduction",
             "--rings", "Z8,Z3xZ3"], capsys)
        assert code == 0
        assert len(json.loads(out)) == 4

    def test_deterministic_output(self, capsys):
        argv = ["verify", "--suite", "graph-invariants",
                "--rings", "Z6,Z2xZ4,Z3xZ3"]
        _, out1, _ = run_cli(argv, capsys)
        _, out2, _ = run_cli(argv, capsys)
        assert out1 == out2


class TestExport:
    def test_dot_z2_cubed(self, capsys):
        code, out, _ = run_cli(["export", "Z2xZ2xZ2", "--format", "dot"],
                               capsys)
        assert code == 0
        assert out.count(" -- ") == 9
        assert out.count("label=") == 6

    def test_json_single_vertex(self, capsys):
        code, out, _ = run_cli(["export", "Z4", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["labels"] == [[2]] and data["edges"] == []

    def test_quotient_dot(self, capsys):
        code, out, _ = run_cli(["export", "Z3xZ3", "--quotient",
                                "--format", "dot"], capsys)
        assert code == 0
        assert out.count("label=") == 2
        assert out.count(" -- ") == 1

    def test_complement(self, capsys):
        code, out, _ = run_cli(["export", "Z2xZ2xZ2", "--complement",
                                "--format", "json"], capsys)
        assert code == 0
        assert len(json.loads(out)["edges"]) == 15 - 9

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "g.dot"
        code, out, _ = run_cli(["export", "Z2xZ2", "--out", str(path)], capsys)
        assert code == 0 and out == ""
        assert path.read_text().count(" -- ") == 1

    def test_two_specs_exit_2(self, capsys):
        code, _, _ = run_cli(["export", "Z4", "Z8"], capsys)
        assert code == 2

    def test_both_variant_flags_exit_2(self, capsys):
        code, _, _ = run_cli(["export", "Z4", "--quotient", "--complement"],
                             capsys)
        assert code == 2


class TestEnvCap:
    def test_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("COZERO_MAX_CARDINALITY", "3")
        code, out, _ = run_cli(["analyze", "Z2xZ2"], capsys)
        assert code == 1

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("COZERO_MAX_CARDINALITY", "3")
        code, _, _ = run_cli(["analyze", "Z2xZ2",
                              "--max-cardinality", "100"], capsys)
        assert code == 0
