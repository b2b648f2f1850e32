import json

import pytest

from qcomplex import read_facets, tented
from qcomplex.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestGen:
    def test_gen_writes_facets(self, tmp_path):
        out = tmp_path / "t.facets"
        assert run_cli("gen", "tented", "--n", "6", "--r", "2",
                       "-o", str(out)) == 0
        K = read_facets(out)
        assert K == tented(6, 2)

    def test_gen_to_stdout(self, capsys):
        assert run_cli("gen", "delta_sphere", "--r", "2") == 0
        out = capsys.readouterr().out
        assert out.startswith("n 4\n")
        assert "0 1 2" in out

    def test_gen_added_faces(self, tmp_path):
        out = tmp_path / "a.facets"
        assert run_cli("gen", "tent_plus_faces", "--n", "7",
                       "--add", "1,2,3;4,5,6", "-o", str(out)) == 0
        K = read_facets(out)
        assert (4, 5, 6) in K.facets

    def test_gen_bad_params_is_usage_error(self):
        assert run_cli("gen", "tented", "--n", "2") == 2

    def test_gen_random_deterministic(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        run_cli("gen", "random_pure2", "--n", "6", "--seed", "9", "-o", str(a))
        run_cli("gen", "random_pure2", "--n", "6", "--seed", "9", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestBettiAndSpectra:
    def test_betti_line(self, tmp_path, capsys):
        f = tmp_path / "d.facets"
        run_cli("gen", "delta_sphere", "--r", "2", "-o", str(f))
        assert run_cli("betti", str(f)) == 0
        assert capsys.readouterr().out == "1 0 1  chi=2\n"

    def test_spectra_value(self, tmp_path, capsys):
        f = tmp_path / "t.facets"
        run_cli("gen", "tented", "--n", "6", "--r", "2", "-o", str(f))
        assert run_cli("spectra", str(f), "--dim", "1") == 0
        out = capsys.readouterr().out
        assert out.startswith("value=9 ")
        assert "iterations=" in out

    def test_spectra_perron_lines(self, tmp_path, capsys):
        f = tmp_path / "tri.facets"
        f.write_text("n 3\n0 1 2\n")
        assert run_cli("spectra", str(f), "--dim", "1", "--perron") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("value=3")
        assert len(lines) == 4  # header + 3 edges
        face_token, value_token = lines[1].split()
        assert face_token == "0,1"
        assert float(value_token) == pytest.approx(1 / 3 ** 0.5, abs=1e-9)

    def test_round_trip_gen_betti_never_errors(self, tmp_path):
        cases = [
            ("tented", "--n", "8"),
            ("rhombic", "--r", "3"),
            ("tent_plus_common_edge", "--n", "7", "--t", "2"),
            ("simplex_skeleton", "--n", "5", "--r", "2"),
        ]
        for k, case in enumerate(cases):
            f = tmp_path / f"{k}.facets"
            assert run_cli("gen", *case, "-o", str(f)) == 0
            assert run_cli("betti", str(f)) == 0


class TestCheck:
    def test_check_passes_on_sphere(self, tmp_path, capsys):
        f = tmp_path / "d.facets"
        run_cli("gen", "delta_sphere", "--r", "2", "-o", str(f))
        assert run_cli("check", str(f)) == 0
        out = capsys.readouterr().out
        assert "euler_identity: pass" in out
        assert "basic_hole_properties: pass" in out

    def test_check_tent(self, tmp_path, capsys):
        f = tmp_path / "t.facets"
        run_cli("gen", "tented", "--n", "7", "-o", str(f))
        assert run_cli("check", str(f)) == 0
        assert "basic_hole: no" in capsys.readouterr().out


class TestSearch:
    def test_facets_report(self, tmp_path):
        out = tmp_path / "rep.json"
        code = run_cli("search", "--mode", "facets", "--n", "5", "--t", "1",
                       "--full-skeleton", "--workers", "1", "-o", str(out))
        assert code == 0
        rep = json.loads(out.read_text())
        assert rep["schema"] == 1
        assert rep["max_facets"] == 7
        assert rep["tent_attains_max"] is True
        assert rep["bound_violations"] == []

    def test_spectral_report_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert run_cli("search", "--mode", "spectral", "--n", "5",
                           "--t", "0", "--workers", "1", "-o", str(path)) == 0
        assert a.read_bytes() == b.read_bytes()
        rep = json.loads(a.read_text())
        assert rep["max_q1"] == pytest.approx(7.0, abs=1e-9)

    def test_usage_error_on_bad_t(self):
        assert run_cli("search", "--mode", "facets", "--n", "5", "--t", "9") == 2


class TestInspectAndAsymptotic:
    def test_inspect_csv(self, tmp_path, capsys):
        f = tmp_path / "t.facets"
        run_cli("gen", "tent_plus_common_edge", "--n", "21", "--t", "1",
                "-o", str(f))
        assert run_cli("inspect", str(f)) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("peak_face,betti_top,apex,")
        row = lines[1].split(",")
        assert row[0] == "0 1 2"

    def test_inspect_json(self, tmp_path, capsys):
        f = tmp_path / "t.facets"
        run_cli("gen", "tent_plus_common_edge", "--n", "21", "--t", "2",
                "-o", str(f))
        assert run_cli("inspect", str(f), "--format", "json") == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["n_apex_missing"] == 2
        assert rep["verdicts"]["apex_missing_bound"] is True
        assert rep["caveat"].startswith("hypothesis")

    def test_asymptotic_csv(self, capsys):
        assert run_cli("asymptotic", "--t", "1", "--n", "30,60") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,q1,excess,g,error_bound"
        assert len(lines) == 3
        n, q1, excess, g, err = lines[2].split(",")
        assert n == "60"
        assert float(q1) == pytest.approx(117.0, abs=1e-3)
        assert 0.7 <= float(g) <= 1.3
