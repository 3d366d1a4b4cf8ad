import csv
import json
import math
import re

import pytest

import tworelay.cli as cli
from tworelay.scaling import GapCertificate
from tworelay.model import ScenarioCase


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, out


def parse_csv(text):
    rows = list(csv.reader(text.splitlines()))
    header, body = rows[0], rows[1:]
    return header, [dict(zip(header, row)) for row in body]


class TestBounds:
    def test_case_a_csv(self, capsys):
        code, out = run_cli(
            ["bounds", "--case", "a", "--px", "15", "--pj", "15", "--c2", "1"], capsys
        )
        assert code == 0
        header, rows = parse_csv(out)
        assert header[-1] == "schema"
        assert all(r["schema"] == "bounds.v1" for r in rows)
        by_label = {(r["row_type"], r["label"]): r for r in rows}
        cut = float(by_label[("bound", "cutset_min")]["rate_bits"])
        ach = float(by_label[("achievable", "case_a_eq")]["rate_bits"])
        assert cut == pytest.approx(1.4770981551934377, rel=1e-12)
        assert ach == pytest.approx(0.9125371587496606, rel=1e-12)

    def test_case_c_includes_modulo_and_variants(self, capsys):
        code, out = run_cli(
            ["bounds", "--case", "c", "--px", "15", "--pj", "15",
             "--c1", "1", "--c2", "1"], capsys
        )
        assert code == 0
        _, rows = parse_csv(out)
        labels = {(r["row_type"], r["label"]) for r in rows}
        assert ("bound", "modulo") in labels
        assert ("achievable", "case_c_prop") in labels
        assert ("achievable", "case_c_derived") in labels
        assert ("achievable", "local_decode") in labels
        modulo = next(r for r in rows if r["label"] == "modulo")
        assert float(modulo["rate_bits"]) == pytest.approx(2.7735477925903207, rel=1e-12)

    def test_invalid_parameters_exit_2(self, capsys):
        code, _ = run_cli(
            ["bounds", "--case", "a", "--px", "-1", "--pj", "15", "--c2", "1"], capsys
        )
        assert code == 2

    def test_json_embeds_manifest(self, capsys):
        code, out = run_cli(
            ["bounds", "--case", "b", "--px", "1e2", "--pj", "1", "--c1", "2",
             "--c2", "1", "--format", "json"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["manifest"]["command"] == "bounds"
        assert doc["manifest"]["version"]
        assert doc["best"]["rate"] > 0
        assert doc["bounds"]["modulo_bound"] is None

    def test_scientific_notation_accepted(self, capsys):
        code, out = run_cli(
            ["bounds", "--case", "a", "--px", "1e8", "--pj", "1E4", "--c2", "2.5e0"],
            capsys,
        )
        assert code == 0


class TestSweep:
    def test_empty_range_keeps_header(self, capsys):
        code, out = run_cli(
            ["sweep", "--case", "b", "--px", "10", "--pj", "1", "--sum-range", ""],
            capsys,
        )
        assert code == 0
        assert out.splitlines()[0].startswith("sum_capacity,")
        assert len(out.splitlines()) == 1

    def test_case_c_columns(self, capsys):
        code, out = run_cli(
            ["sweep", "--case", "c", "--px", "1e6", "--pj", "1e2",
             "--sum-range", "0:4:2", "--split-samples", "41"], capsys
        )
        assert code == 0
        _, rows = parse_csv(out)
        assert len(rows) == 3
        for row in rows:
            assert float(row["best_rate"]) <= float(row["modulo"]) + 1e-9


class TestRegion:
    def test_quadrant_for_zero_rate(self, capsys):
        code, out = run_cli(["region", "--rate", "0", "--px", "10", "--pj", "5"], capsys)
        assert code == 0
        _, rows = parse_csv(out)
        vertices = [r for r in rows if r["row_type"] == "vertex"]
        assert len(vertices) == 1
        assert float(vertices[0]["c1"]) == 0.0 and float(vertices[0]["c2"]) == 0.0

    def test_svg_matches_csv_vertices(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TWORELAY_OUTDIR", str(tmp_path))
        assert cli.main(["region", "--rate", "2", "--px", "15", "--pj", "15",
                         "--out", "region.csv"]) == 0
        assert cli.main(["region", "--rate", "2", "--px", "15", "--pj", "15",
                         "--format", "svg", "--out", "region.svg"]) == 0
        _, rows = parse_csv((tmp_path / "region.csv").read_text())
        csv_vertices = [
            (float(r["c1"]), float(r["c2"])) for r in rows if r["row_type"] == "vertex"
        ]
        svg = (tmp_path / "region.svg").read_text()
        boundary = re.search(r'stroke="crimson" points="([^"]+)"', svg).group(1)
        svg_points = [tuple(map(float, p.split(","))) for p in boundary.split()]
        for vertex in csv_vertices:
            assert any(
                math.isclose(vertex[0], px) and math.isclose(vertex[1], py)
                for px, py in svg_points
            )

    def test_manifest_sidecar(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TWORELAY_OUTDIR", str(tmp_path))
        assert cli.main(["region", "--rate", "1", "--px", "4", "--pj", "2",
                         "--out", "r.csv"]) == 0
        manifest = json.loads((tmp_path / "r.csv.manifest.json").read_text())
        assert manifest["command"] == "region"
        assert manifest["outputs"] == [str(tmp_path / "r.csv")]


class TestGaps:
    def test_small_grid_passes(self, capsys):
        code, out = run_cli(["gaps", "--case", "b", "--grid", "1:3:1"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert all(cert["satisfied"] for cert in doc["certificates"])

    def test_violation_exits_3(self, capsys, monkeypatch):
        bogus = GapCertificate(
            case=ScenarioCase.CASE_B, regime="standard", grid=((10.0, 10.0),),
            max_gap=2.0, bound_used="cut-set", claimed_bound=1.29,
        )
        monkeypatch.setattr(cli, "certify_gaps", lambda *a, **k: (bogus,))
        code, out = run_cli(["gaps", "--case", "b"], capsys)
        assert code == 3
        assert not json.loads(out)["certificates"][0]["satisfied"]


class TestScaling:
    def test_case_a_prelog_near_half(self, capsys):
        code, out = run_cli(
            ["scaling", "--case", "a", "--coupling", "pj=px", "--exponents", "10:40"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["prelog"] == pytest.approx(0.5, abs=0.02)
        assert len(doc["rate_samples"]) == 31

    def test_reduced_capacity_drops_prelog(self, capsys):
        code, out = run_cli(
            ["scaling", "--case", "c", "--exponents", "10:40",
             "--capacity-scale", "0.8"], capsys
        )
        assert code == 0
        assert json.loads(out)["prelog"] < 0.45


class TestSimulateAndCover:
    def test_simulate_seeded(self, capsys):
        args = ["simulate", "--case", "b", "--px", "15", "--pj", "15", "--c1", "2",
                "--c2", "1", "--samples", "100000", "--seed", "7"]
        code, out = run_cli(args, capsys)
        assert code == 0
        doc = json.loads(out)
        ratio = doc["stats"]["empirical_var_neq"] / doc["stats"]["analytic_var_neq"]
        assert 0.98 <= ratio <= 1.02
        assert doc["manifest"]["seed"] == 7

    def test_simulate_generates_and_records_seed(self, capsys):
        args = ["simulate", "--case", "b", "--px", "15", "--pj", "15", "--c1", "2",
                "--c2", "1", "--samples", "1000"]
        code, out = run_cli(args, capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["manifest"]["seed"] is not None
        assert doc["stats"]["seed"] == doc["manifest"]["seed"]

    def test_cover_runs(self, capsys):
        code, out = run_cli(
            ["cover", "--rate", "0.5", "--trials", "40", "--seed", "3"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["trials"] == 40
        assert 0.0 <= doc["result"]["coverage"] <= 1.0


class TestReproducibility:
    def test_deterministic_commands_are_byte_identical(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TWORELAY_OUTDIR", str(tmp_path))
        args = ["bounds", "--case", "c", "--px", "1e8", "--pj", "1e4",
                "--c1", "3", "--c2", "2"]
        assert cli.main(args + ["--out", "one.csv"]) == 0
        assert cli.main(args + ["--out", "two.csv"]) == 0
        assert (tmp_path / "one.csv").read_bytes() == (tmp_path / "two.csv").read_bytes()

    def test_seeded_simulation_is_byte_identical(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TWORELAY_OUTDIR", str(tmp_path))
        args = ["simulate", "--case", "c", "--px", "15", "--pj", "15", "--c1", "2",
                "--c2", "1", "--samples", "20000", "--seed", "11",
                "--out", "run.json"]
        assert cli.main(args) == 0
        first = (tmp_path / "run.json").read_bytes()
        assert cli.main(args) == 0
        assert (tmp_path / "run.json").read_bytes() == first

    def test_csv_uses_crlf(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TWORELAY_OUTDIR", str(tmp_path))
        assert cli.main(["region", "--rate", "1", "--px", "4", "--pj", "2",
                         "--out", "r.csv"]) == 0
        assert b"\r\n" in (tmp_path / "r.csv").read_bytes()
