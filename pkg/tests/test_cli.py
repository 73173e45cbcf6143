from __future__ import annotations

import json

import pytest

from planext.cli import main
from planext.constructions import basic
from planext.graph6 import read_graph6, write_graph6


@pytest.fixture
def build(tmp_path):
    def _build(family, *extra):
        out = tmp_path / f"{family}.json"
        assert main(["construct", family, *extra, "--out", str(out)]) == 0
        return str(out)

    return _build


def test_construct_icosidodecahedron(tmp_path, capsys):
    out = tmp_path / "ico.json"
    assert main(["construct", "icosidodecahedron", "--out", str(out)]) == 0
    assert "n=30 e=60" in capsys.readouterr().out
    data = json.loads(out.read_text())
    assert data["n"] == 30 and data["schema_version"] == 1


def test_construct_c5_family(capsys):
    assert main(["construct", "c5-family", "--k", "6", "--format", "g6"]) == 0
    cap = capsys.readouterr()
    assert "n=99 e=231" in cap.err
    assert read_graph6(cap.out.strip()).edge_count == 231


def test_construct_inadmissible(capsys):
    assert main(["construct", "triangulation-t", "--k", "7"]) == 2
    assert "6, 15, 27" in capsys.readouterr().err


def test_construct_missing_parameter(capsys):
    assert main(["construct", "double-wheel"]) == 2
    assert "--n" in capsys.readouterr().err


def test_construct_dot(capsys):
    assert main(["construct", "diamond", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph G {") and out.count("--") == 5


def test_check_figure5(build, capsys):
    path = build("figure5")
    capsys.readouterr()
    assert main(["check", "--input", path, "--free", "c5"]) == 0
    assert main(["check", "--input", path, "--free", "c4", "--embedding"]) == 1
    out = capsys.readouterr().out
    assert "euler: ok" in out and "c4: found, witness" in out


def test_check_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["check", "--input", str(bad), "--free", "c4"]) == 2
    assert main(["check", "--input", str(tmp_path / "missing.json"), "--free", "c4"]) == 2
    assert main(["check", "--input", str(bad), "--free", "q7"]) == 2


def test_check_graph6_and_dot_input(tmp_path):
    g6 = tmp_path / "k4.g6"
    g6.write_text(write_graph6(basic.tetrahedron().underlying) + "\n")
    assert main(["check", "--input", str(g6), "--free", "k4"]) == 1
    assert main(["check", "--input", str(g6), "--free", "c5"]) == 0
    dot = tmp_path / "k4.dot"
    dot.write_text("graph G {}")
    assert main(["check", "--input", str(dot), "--free", "c4"]) == 2
    # --embedding needs rotation data, which graph6 lacks
    assert main(["check", "--input", str(g6), "--free", "c5", "--embedding"]) == 2


def test_check_genus_one_embedding(tmp_path, capsys):
    from test_embedding import genus_one_k4

    f = tmp_path / "torus.json"
    f.write_text(json.dumps(genus_one_k4().to_json()))
    assert main(["check", "--input", str(f), "--free", "c5", "--embedding"]) == 1
    assert "euler: FAILED" in capsys.readouterr().out


def test_audit(build, capsys):
    assert main(["audit", "--input", build("icosidodecahedron"), "--forbid", "c4"]) == 0
    assert capsys.readouterr().out.count("tight") == 4


def test_audit_json(build, capsys):
    path = build("c5-family", "--k", "6")
    capsys.readouterr()
    assert main(["audit", "--input", path, "--forbid", "c5", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["pattern"] == "c5"


def test_audit_pattern_present(build, capsys):
    assert main(["audit", "--input", build("tetrahedron"), "--forbid", "c4"]) == 2
    assert "assumes C4-freeness" in capsys.readouterr().err


def test_reduce(build, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["reduce", "--input", build("figure8"), "--mode", "prime", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "before: n=10 e=17" in text and "after:  n=9 e=12" in text
    assert "12 <= 14 holds" in text
    assert json.loads(out.read_text())["n"] == 9


def test_reduce_diamond_and_unchanged(build, capsys):
    assert main(["reduce", "--input", build("diamond"), "--mode", "prime"]) == 0
    assert "after:  n=4 e=4" in capsys.readouterr().out
    assert main(["reduce", "--input", build("complete-bipartite-2", "--n", "6"), "--mode", "prime"]) == 0
    assert "unchanged" in capsys.readouterr().out
    assert main(["reduce", "--input", build("figure5"), "--mode", "k4centers"]) == 0
    assert "after:  n=5 e=6" in capsys.readouterr().out


def test_search_human(capsys):
    assert main(["search", "--n", "7", "--forbid", "c5"]) == 0
    out = capsys.readouterr().out
    assert "ex=12" in out and "FJaNw" in out
    assert main(["search", "--n", "3", "--forbid", "c4"]) == 0
    assert "ex=3" in capsys.readouterr().out


def test_search_json_deterministic(capsys):
    outs = []
    for w in ("1", "4"):
        assert main(["search", "--n", "8", "--forbid", "c5", "--workers", w, "--json", "--deterministic"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["max_edges"] == 13 and data["elapsed_seconds"] == 0.0


def test_search_budget(capsys):
    assert main(["search", "--n", "12", "--forbid", "c5", "--budget", "0.05", "--json"]) == 3
    data = json.loads(capsys.readouterr().out)
    assert data["complete"] is False


def test_search_config_precedence(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "planext.conf"
    cfg.write_text("# defaults\nworkers = 2\nbudget = 0.05\n")
    monkeypatch.setenv("PLANEXT_WORKERS", "9")
    # config budget applies when no flag is given
    assert main(["search", "--n", "12", "--forbid", "c5", "--config", str(cfg)]) == 3
    # a flag beats the config
    assert main(["search", "--n", "6", "--forbid", "c5", "--config", str(cfg), "--budget", "60"]) == 0
    cfg.write_text("pattern = c4\n")
    assert main(["search", "--n", "6", "--forbid", "c5", "--config", str(cfg)]) == 2
    capsys.readouterr()


def test_bounds(capsys):
    assert main(["bounds", "--n", "30", "--forbid", "c4"]) == 0
    assert "60/1 (floor 60)" in capsys.readouterr().out
    assert main(["bounds", "--n", "11", "--forbid", "c5"]) == 0
    out = capsys.readouterr().out
    assert "99/5 (floor 19)" in out and "tightest: (12n-33)/5" in out
    assert main(["bounds", "--n", "10", "--forbid", "c5"]) == 0
    out = capsys.readouterr().out
    assert "96/5 (floor 19)" in out and "not yet applicable" in out
    assert main(["bounds", "--n", "3", "--forbid", "c4"]) == 2
    assert "n >= 4" in capsys.readouterr().err


def test_usage_errors():
    assert main([]) == 2
    assert main(["construct", "nonsense"]) == 2
    assert main(["search", "--n", "0", "--forbid", "c4"]) == 2
