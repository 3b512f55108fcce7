from __future__ import annotations

import json

import pytest

from specfloor.cli import main
from specfloor.io import decode, encode
from specfloor.named import named


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_usp_inline_edges(capsys):
    code, out, _ = run(capsys, "usp", "--edges", "0 1\\n0 1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert (obj["n"], obj["e"], obj["usp"], obj["uspc"]) == (2, 2, 1, 1)
    assert decode(obj["encoding"]).mult[0][1] == 2


def test_floor_json_round_trip(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text(f"{encode(named('C4'))}\n{encode(named('3-sun'))}\n")
    code, out, _ = run(capsys, "floor", str(f), "--json", "--bruteforce")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["uspcf"] for r in rows] == [2, 2]
    assert all(r["uspcf"] == r["uspcf_bruteforce"] for r in rows)
    for r in rows:
        w = decode(r["witnesses"]["floor_supergraph"])
        assert decode(r["encoding"]).is_subgraph_of(w)


def test_minimal_reports_witness_minor(capsys):
    code, out, _ = run(capsys, "minimal", "--graph", encode(named("K1,4")), "--json")
    obj = json.loads(out)
    assert code == 0 and obj["minimal"] is True and obj["uspcf"] == 2
    code, out, _ = run(capsys, "minimal", "--edges", "0 1;1 2;2 3;3 4", "--json")
    obj = json.loads(out)
    assert obj["minimal"] is False and "witness_minor" in obj


def test_catalog_and_query(capsys, tmp_path):
    store = tmp_path / "c.tsv"
    assert run(capsys, "catalog", "--max-n", "5", "--out", str(store))[0] == 0
    code, out, _ = run(capsys, "query", str(store), "--uspcf", "2", "--minimal", "true", "--json")
    names = sorted(json.loads(line)["name"] for line in out.splitlines())
    assert code == 0 and names == ["C4", "K1,4"]
    code, out, _ = run(capsys, "query", str(store), "--key-of", "Cr")
    assert out.count("\n") == 1 and out.endswith("C4\n")


def test_extremal_round_trip(capsys):
    code, out, _ = run(capsys, "extremal", "build", "3,1,[1,0]")
    enc = out.split("\t")[0]
    assert code == 0
    code, out, _ = run(capsys, "extremal", "check", "--graph", enc, "--m", "1")
    assert "crowded 3,1,[0,1]" in out
    code, out, _ = run(capsys, "extremal", "verify", "--graph", enc, "--m", "1", "--json")
    assert json.loads(out)["maximal"] is True


def test_verify_lists_passes(capsys):
    code, out, _ = run(capsys, "verify-lists", "--k", "1", "--mode", "multi", "--max-n", "4")
    assert code == 0 and out.startswith("PASS")


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "catalog", "--max-n", "12")
    assert code == 1 and "catalog-max-n" in err
    assert run(capsys, "usp", str(tmp_path / "missing.g6"))[0] == 2
    assert run(capsys, "usp", "--edges", "0 x")[0] == 2
    code, _, err = run(capsys, "floor", "--graph", "GFzvvW")  # eight vertices
    assert code == 0
    code, _, err = run(capsys, "floor", "--graph", "GFzvvW", "--bruteforce")
    assert code == 1 and "bruteforce-n" in err


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "4", "--samples", "20")
    assert code == 0 and "PASS" in out


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "specfloor", "usp", "--graph", "Cr"], capture_output=True, text=True)
    assert r.returncode == 0 and "usp=2" in r.stdout
