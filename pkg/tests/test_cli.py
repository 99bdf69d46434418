import json
import subprocess
import sys
from pathlib import Path


from radsq.cli import main, render_report

ROOT = Path(__file__).resolve().parents[1]
QV = ROOT / "quivers"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", QV / "a3.qv")
    assert code == 0 and out.strip() == "FINITE"
    code, out, _ = run(capsys, "classify", QV / "loop.qv", "--explain")
    assert "DISCRETE" in out and "epsilon = 1" in out


def test_epsilon_with_certificate(capsys):
    code, out, _ = run(capsys, "epsilon", QV / "cycle2.qv", "--brute", 6, "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["epsilon"] == 2 and d["bruteforce"]["epsilon"] == 2
    assert d["certificate"] == "x y"


def test_box_and_components(capsys):
    code, out, _ = run(capsys, "box", QV / "a3.qv", "--window", "0..1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and len(d["vertices"]) == 6 and len(d["arrows"]) == 2
    code, out, _ = run(capsys, "components", QV / "cycle2.qv", "--window=-1..4", "--format", "json")
    d = json.loads(out)
    assert set(d["labels"].values()) == {0, 1}


def test_derived_loop(capsys):
    code, out, _ = run(capsys, "derived", QV / "loop.qv", "--window", "0..3")
    assert code == 0
    assert out.startswith("10 complexes, 3 beta objects")
    assert "β(F(I[a@0 a@1]))" in out and "window-limited" in out


def test_indec_kronecker_bands(capsys):
    code, out, _ = run(capsys, "indec", QV / "kronecker.qv", "--window", "0..0", "--max-dim", 6,
                       "--max-band", 2, "--lambda", "1,2")
    assert code == 0
    assert "band family P•(1, t), samples t = 1,2" in out
    assert "band family P•(2, t), samples t = 1,2" in out


def test_indec_reports_truncation(capsys):
    code, out, _ = run(capsys, "indec", QV / "a3.qv", "--window", "0..0", "--max-dim", 1)
    assert code == 0 and out.startswith("3 objects (max_total_dim=1")
    assert "missing: A3: 3 roots of total dimension > 1 skipped" in out


def test_render_empty_report():
    text = render_report({"count": 0, "text": "0 objects (max_total_dim=12)"}, "text")
    assert text == "0 objects (max_total_dim=12)\n"
    assert json.loads(render_report({"count": 0, "text": "x"}, "json")) == {"count": 0}


def test_wild_input_exit_1(capsys):
    code, _, err = run(capsys, "derived", QV / "triple.qv", "--window", "0..1")
    assert code == 1
    assert "WILD" in err and "cycle" in err


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.qv"
    bad.write_text("vertex a\narrow x: a -> b\n")
    assert run(capsys, "classify", bad)[0] == 1
    assert run(capsys, "classify", tmp_path / "missing.qv")[0] == 1
    assert run(capsys, "classify", QV / "a3.qv", "--bogus")[0] == 1
    assert run(capsys, "box", QV / "a3.qv", "--window", "3..1")[0] == 1
    assert run(capsys, "epsilon", QV / "a3.qv", "--field", "6")[0] == 1
    cx = tmp_path / "c.json"
    cx.write_text("{not json")
    assert run(capsys, "oracle", "homology", cx)[0] == 1


def _write_complexes(capsys, tmp_path):
    code, out, _ = run(capsys, "derived", QV / "kronecker.qv", "--window", "0..0", "--max-dim", 2,
                       "--max-band", 1, "--lambda", "1,2", "--format", "json")
    d = json.loads(out)
    paths = []
    for i, c in enumerate(d["complexes"]):
        p = tmp_path / f"c{i}.json"
        p.write_text(json.dumps(c["complex"]))
        paths.append((c["name"], p))
    return paths


def test_oracle_and_beta_subcommands(capsys, tmp_path):
    paths = dict(_write_complexes(capsys, tmp_path))
    band1, band2 = paths["P•(1,1)"], paths["P•(1,2)"]
    code, out, _ = run(capsys, "oracle", "iso", band1, band2, "--format", "json")
    assert code == 0 and json.loads(out)["iso"] is False
    code, out, _ = run(capsys, "oracle", "hom", band1, band1, "--format", "json")
    assert json.loads(out)["dim"] == 1
    code, out, _ = run(capsys, "oracle", "indec", band1)
    assert out.strip() == "indecomposable: True"
    code, out, _ = run(capsys, "oracle", "end", band1, "--format", "json")
    assert json.loads(out)["semisimple_dim"] == 1
    code, out, _ = run(capsys, "oracle", "homology", band1, "--format", "json")
    assert code == 0 and "homology" in json.loads(out)
    code, out, _ = run(capsys, "beta", band1, "--format", "json")
    assert code == 0 and json.loads(out)["in_X"] is False
    assert run(capsys, "oracle", "hom", band1)[0] == 1


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["count"] >= 20


def test_structured_output_is_deterministic():
    argv = [sys.executable, "-m", "radsq", "derived", str(QV / "cycle2.qv"), "--window", "0..2",
            "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_window_budget_exit_2(capsys, monkeypatch):
    from radsq import cli
    from radsq.box import WindowError

    def boom(*a, **k):
        raise WindowError("interval leaves the window")
    monkeypatch.setattr(cli, "enumerate_indecomposables", boom)
    assert run(capsys, "indec", QV / "a3.qv", "--window", "0..0")[0] == 2
