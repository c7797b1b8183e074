import json
import subprocess
import sys

import pytest

from linkdiag.cli import main
from linkdiag.diagram import parse_diagram
from linkdiag.embedding import faces

from conftest import TREFOIL_PD

FIG8_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"trefoil": TREFOIL_PD + "\n", "unknot": "circle:\n", "fig8": FIG8_PD,
                       "t3": "2: 1 1 1\n", "t2": "2: 1 1\n",
                       "kinked": "4: 1 1 1 -2 3 3 3\n"}.items():
        p = tmp_path / f"{name}.pd"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- analyze / bound

def test_analyze_text(files, capsys):
    code, out, _ = run(["analyze", files["trefoil"]], capsys)
    assert code == 0
    assert "star: -1" in out
    assert out.count("eulerS") == 1


def test_analyze_json_unknot_degenerate(files, capsys):
    code, out, _ = run(["analyze", "--json", files["unknot"]], capsys)
    assert code == 0
    assert json.loads(out)["bounds"]["degenerate"] is True


def test_analyze_embedding_dump(files, capsys):
    code, out, _ = run(["analyze", "--embedding", files["t3"]], capsys)
    emb = json.loads(out)["embedding"]
    assert code == 0
    assert len(emb["faces"]) == 5
    assert sorted(emb["depth"].values()) == [0, 1]


def test_analyze_outer_option(files, capsys):
    code, out, _ = run(["analyze", "--json", "--outer", "1,-1", files["t3"]], capsys)
    assert code == 0 and json.loads(out)["embedding"]["outerSide"] == [1, -1]
    code, _, err = run(["analyze", "--outer", "1,5", files["t3"]], capsys)
    assert code == 2 and "side" in err


def test_missing_file(capsys, tmp_path):
    code, out, err = run(["analyze", str(tmp_path / "nope.pd")], capsys)
    assert code == 2 and out == "" and "cannot read" in err


def test_parse_error_exit(tmp_path, capsys):
    p = tmp_path / "bad.pd"
    p.write_text("X(1,2,3)\n")
    code, _, err = run(["analyze", str(p)], capsys)
    assert code == 2 and "line 1" in err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_bound_json(files, capsys):
    code, out, _ = run(["bound", files["t3"]], capsys)
    assert code == 0
    doc = json.loads(out)
    assert (doc["star"], doc["chiSExactIfPositive"], doc["uLowerBound"]) == (-1, -1, "1")


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("2: 1 1 1 1 1\n"))
    code, out, _ = run(["bound", "-"], capsys)
    assert code == 0 and json.loads(out)["star"] == -3


# ---------------------------------------------------------------- certify / verify

def test_certify_torus(files, capsys, tmp_path):
    out_path = tmp_path / "c.json"
    code, _, _ = run(["certify", files["t3"], "-o", str(out_path)], capsys)
    assert code == 0
    root = json.loads(out_path.read_text())["root"]
    assert "TorusFiber" in json.dumps(root)
    code, out, _ = run(["verify-cert", str(out_path), files["t3"]], capsys)
    assert code == 0 and json.loads(out)["ok"] is True


def test_certify_expand_has_only_hopf_and_disk(files, capsys):
    code, out, _ = run(["certify", "--expand", files["t3"]], capsys)
    assert code == 0
    kinds = set()

    def walk(node):
        kinds.add(node["kind"])
        for v in node.values():
            if isinstance(v, dict) and "kind" in v:
                walk(v)
            if isinstance(v, list):
                for x in v:
                    if isinstance(x, dict) and "kind" in x:
                        walk(x)
    walk(json.loads(out)["root"])
    assert kinds <= {"DiskLeaf", "HopfLeaf", "PlumbNode", "EmbedNode", "SplitNode"}
    assert "HopfLeaf" in kinds


def test_certify_negative_crossing(files, capsys):
    code, out, err = run(["certify", files["fig8"]], capsys)
    assert code == 1 and out == ""
    assert "negative crossing at id" in err


def test_verify_rejects_tampering(files, capsys, tmp_path):
    c = tmp_path / "c.json"
    run(["certify", files["t3"], "-o", str(c)], capsys)
    doc = json.loads(c.read_text())
    doc["root"]["center"]["k"] = 4
    c.write_text(json.dumps(doc))
    code, out, _ = run(["verify-cert", str(c), files["t3"]], capsys)
    assert code == 1 and json.loads(out)["ok"] is False


def test_verify_against_other_diagram(files, capsys, tmp_path):
    c = tmp_path / "c.json"
    run(["certify", files["t3"], "-o", str(c)], capsys)
    code, out, _ = run(["verify-cert", str(c), files["trefoil"]], capsys)
    # same knot, different diagram: the header hash does not match
    assert code == 1
    assert "hash" in json.loads(out)["errors"][0]


def test_verify_malformed(files, capsys, tmp_path):
    c = tmp_path / "c.json"
    c.write_text("{}")
    code, _, _ = run(["verify-cert", str(c), files["t3"]], capsys)
    assert code == 2


def test_certify_crossing_limit(files, capsys):
    code, _, _ = run(["certify", "--max-crossings", "2", files["t3"]], capsys)
    assert code == 2


# ---------------------------------------------------------------- invariants and friends

def test_invariants(files, capsys):
    code, out, _ = run(["invariants", "--json", files["trefoil"]], capsys)
    doc = json.loads(out)
    assert code == 0
    assert (doc["signature"], doc["determinant"]) == (-2, 3)
    assert doc["alexander"] == "t - 1 + t^-1"


def test_invariants_limit_env(files, capsys, monkeypatch):
    monkeypatch.setenv("LINKDIAG_MAX_CROSSINGS", "2")
    code, out, _ = run(["invariants", "--json", files["trefoil"]], capsys)
    assert code == 0 and json.loads(out)["jones"] is None


def test_almost_positive(files, capsys):
    code, out, _ = run(["almost-positive", files["kinked"]], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["case"] == "ConnectedSumBound"
    assert doc["detail"]["starSum"] <= -1
    code, _, err = run(["almost-positive", files["fig8"]], capsys)
    assert code == 1 and "negative crossing" in err


def test_mirror_and_connect(files, capsys, tmp_path):
    m = tmp_path / "m.pd"
    assert run(["mirror", files["t3"], "-o", str(m)], capsys)[0] == 0
    assert parse_diagram(m.read_text()).signs == (-1, -1, -1)
    code, out, _ = run(["connect", files["t3"], files["t3"]], capsys)
    assert code == 0
    d = parse_diagram(out)
    assert d.n_crossings == 6 and len(d.components) == 1
    code, _, _ = run(["connect", files["t3"], files["t3"], "--edges", "99", "1"], capsys)
    assert code == 1


# ---------------------------------------------------------------- generate

def test_generate_torus_hopf(capsys):
    code, out, _ = run(["generate", "torus2k", "2"], capsys)
    d = parse_diagram(out)
    assert code == 0 and d.signs == (1, 1) and len(d.components) == 2


def test_generate_deterministic(capsys):
    a = run(["generate", "positiveBraid", "4", "10", "--seed", "7"], capsys)[1]
    b = run(["generate", "positiveBraid", "4", "10", "--seed", "7"], capsys)[1]
    c = run(["generate", "positiveBraid", "4", "10", "--seed", "8"], capsys)[1]
    assert a == b != c


def test_generate_pretzel(capsys):
    code, out, _ = run(["generate", "pretzel", "1", "3", "3"], capsys)
    d = parse_diagram(out)
    assert code == 0 and d.n_crossings == 7
    assert d.n_crossings - len(d.edges) + len(faces(d)) == 2


def test_generate_count(tmp_path, capsys):
    out = tmp_path / "corpus"
    code, _, _ = run(["generate", "randomBraid", "3", "6", "--seed", "5", "--count", "4",
                      "-o", str(out)], capsys)
    assert code == 0 and len(list(out.iterdir())) == 4


def test_generate_bad_params(capsys):
    assert run(["generate", "torus2k", "x"], capsys)[0] == 2
    assert run(["generate", "nosuch"], capsys)[0] == 2
    assert run(["generate", "torus2k", "0"], capsys)[0] == 2


# ---------------------------------------------------------------- batch

def test_batch_files_with_require_positive(files, capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, _, _ = run(["batch", files["t3"], files["fig8"], "--require-positive", "-o", str(out)],
                     capsys)
    rows = out.read_text().splitlines()
    assert code == 0
    assert rows[0].startswith("name,crossings")
    assert rows[1].endswith(",pass,") and rows[2].endswith(",skip,not positive")


def test_batch_default_corpus_deterministic(tmp_path, capsys):
    for k in (1, 2):
        code, _, _ = run(["batch", "--seed", "3", "--artifacts", str(tmp_path / f"a{k}"),
                          "-o", str(tmp_path / f"r{k}.csv")], capsys)
        assert code == 0
    assert (tmp_path / "r1.csv").read_bytes() == (tmp_path / "r2.csv").read_bytes()
    names = sorted(p.name for p in (tmp_path / "a1").iterdir())
    assert names == sorted(p.name for p in (tmp_path / "a2").iterdir())
    for n in names:
        assert (tmp_path / "a1" / n).read_bytes() == (tmp_path / "a2" / n).read_bytes()


def test_batch_tampered_certificate(files, tmp_path, capsys):
    art = tmp_path / "art"
    assert run(["batch", files["t3"], files["t2"], "--artifacts", str(art),
                "-o", str(tmp_path / "r.csv")], capsys)[0] == 0
    assert run(["batch", files["t3"], files["t2"], "--verify-artifacts", str(art),
                "-o", str(tmp_path / "r.csv")], capsys)[0] == 0
    cert = art / "0000.cert.json"
    doc = json.loads(cert.read_text())
    doc["root"]["left"] = {"kind": "HopfLeaf"}
    cert.write_text(json.dumps(doc))
    code, _, _ = run(["batch", files["t3"], files["t2"], "--verify-artifacts", str(art),
                      "-o", str(tmp_path / "r.csv")], capsys)
    assert code == 1
    assert "rejected" in (tmp_path / "r.csv").read_text()


def test_module_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "linkdiag", "bound", files["t3"]],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["star"] == -1
