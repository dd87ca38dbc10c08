import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from zetaforge import cli
from zetaforge.counting import CountSeries

ROOT = Path(__file__).resolve().parent.parent
SPECS = ROOT / "specs"
GOLDEN = Path(__file__).resolve().parent / "golden"

GOLDEN_CASES = {
    "count_elliptic_f5.json": ["count", "elliptic_f5.json", "--ext-max", "4"],
    "zeta_elliptic_f5.json": ["zeta", "elliptic_f5.json"],
    "zeta_p2_f3.json": ["zeta", "p2_f3.json", "--num-deg", "0", "--den-deg", "3"],
    "verify_fermat_cubic_f7.json": [
        "verify", "fermat_cubic_f7.json", "--method", "charsum", "--expected-betti", "1,2,1",
    ],
    "verify_genus2_f7.json": ["verify", "genus2_f7.json", "--ext-max", "4"],
    "verify_conic_f3.json": ["verify", "conic_f3.json"],
    "lseries_congruent.json": ["lseries", "--a", "-1", "--b", "0", "--pmax", "30", "--nmax", "30"],
}


def argv_for(args):
    out = [args[0]]
    for a in args[1:]:
        out.append(str(SPECS / a) if a.endswith(".json") else a)
    return out + ["--no-timing"]


def run(args, capsys):
    code = cli.main(args)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name, capsys):
    code, out, _ = run(argv_for(GOLDEN_CASES[name]), capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_is_repeatable(name, capsys):
    a = run(argv_for(GOLDEN_CASES[name]), capsys)
    b = run(argv_for(GOLDEN_CASES[name]), capsys)
    assert a == b


def test_threads_do_not_change_output(capsys, monkeypatch):
    import zetaforge.counting as counting

    monkeypatch.setattr(counting, "CHUNK", 64)
    base = ["zeta", str(SPECS / "fermat_cubic_f7.json"), "--method", "enumerate", "--genus", "1", "--ext-max", "3", "--no-timing"]
    outs = {run(base + ["--threads", t], capsys) for t in ("1", "2", "4")}
    assert len(outs) == 1 and next(iter(outs))[0] == 0


def test_subprocess_entry_point():
    cmd = [sys.executable, "-m", "zetaforge"] + argv_for(GOLDEN_CASES["zeta_elliptic_f5.json"])
    res = subprocess.run(cmd, capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / "zeta_elliptic_f5.json").read_text()


def test_reports_validate_against_schema():
    schema = cli.load_schema("report")
    for path in GOLDEN.glob("*.json"):
        doc = json.loads(path.read_text())
        jsonschema.validate(doc, schema)
        assert cli.dumps(doc) == path.read_text()


def test_timing_block_present_by_default(capsys):
    code, out, _ = run(["zeta", str(SPECS / "elliptic_f5.json")], capsys)
    assert code == 0 and json.loads(out)["timing"]["seconds"] >= 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(argv_for(GOLDEN_CASES["zeta_elliptic_f5.json"]) + ["--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "zeta_elliptic_f5.json").read_text()


def test_zeta_document_roundtrip(tmp_path, capsys):
    report = json.loads((GOLDEN / "zeta_elliptic_f5.json").read_text())
    doc = {"q": report["q"], "dim": 1, "zeta": {"num": report["zeta"]["num"], "den": report["zeta"]["den"]}}
    path = tmp_path / "z.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path), "--no-timing"], capsys)
    assert code == 0 and json.loads(out)["failed"] == []


def test_tampered_numerator_exits_5(tmp_path, capsys):
    doc = {"q": 5, "dim": 1, "zeta": {"num": [1, 6, 5], "den": [1, -6, 5]}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path), "--no-timing"], capsys)
    assert code == 5
    assert "w4_rh" in json.loads(out)["failed"]


@pytest.mark.parametrize(
    "content",
    ["{not json", json.dumps({"field": {"p": 5}}), json.dumps({"field": {"p": 6}, "ambient": {"type": "affine", "vars": 1}})],
)
def test_bad_input_exits_2(tmp_path, capsys, content):
    path = tmp_path / "s.json"
    path.write_text(content)
    code, _, err = run(["count", str(path)], capsys)
    assert code == 2 and "invalid input" in err


def test_missing_file_exits_2(tmp_path, capsys):
    assert run(["zeta", str(tmp_path / "nope.json")], capsys)[0] == 2


def test_budget_exits_3(capsys):
    code, _, err = run(["count", str(SPECS / "fermat_cubic_f7.json"), "--method", "enumerate", "--budget", "10"], capsys)
    assert code == 3


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("ZETAFORGE_BUDGET", "10")
    assert run(["count", str(SPECS / "fermat_cubic_f7.json"), "--method", "enumerate"], capsys)[0] == 3


def test_no_fit_exits_4(capsys):
    code, _, err = run(["zeta", str(SPECS / "p2_f3.json")], capsys)
    assert code == 4 and "no rational function" in err


def test_factorial_counts_exit_4(capsys, monkeypatch):
    from math import factorial

    def fake(spec, k, **kw):
        return CountSeries(spec.q, tuple(factorial(n + 2) for n in range(1, k + 1)))

    monkeypatch.setattr(cli, "count_series", fake)
    code, _, _ = run(["zeta", str(SPECS / "p2_f3.json"), "--num-deg", "2", "--den-deg", "2"], capsys)
    assert code == 4


def test_singular_curve_exits_6(capsys):
    assert run(["lseries", "--a", "0", "--b", "0"], capsys)[0] == 6


def test_lseries_csv(tmp_path, capsys):
    csv_path, roots = tmp_path / "a.csv", tmp_path / "r.csv"
    code, _, _ = run(
        ["lseries", "--a", "-1", "--b", "0", "--nmax", "25", "--pmax", "13",
         "--csv", str(csv_path), "--roots-csv", str(roots), "--no-timing"],
        capsys,
    )
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "n,a_n" and lines[5] == "5,-2" and lines[25] == "25,-1" and len(lines) == 26
    rlines = roots.read_text().splitlines()
    assert rlines[0] == "p,a_p,angle"
    assert [r.split(",")[0] for r in rlines[1:]] == ["5", "7", "11", "13"]
    assert rlines[2] == "7,0,1.570796326795"
