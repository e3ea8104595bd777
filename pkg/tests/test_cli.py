from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ooc2d.cli import main
from ooc2d.files import load_design
from ooc2d.packing import verify_packing


def test_bound_human(capsys):
    assert main(["bound", "12", "2", "4", "2"]) == 0
    out = capsys.readouterr().out
    assert "jstar=248" in out
    assert "CASE_A" in out


def test_bound_json(capsys):
    assert main(["bound", "2", "7", "4", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["jstar"] == 13
    assert doc["perfect"] == "CLASS3"


def test_verify_catalog_pass(capsys):
    assert main(["verify", "catalog:small-(7,2)", "--check", "packing",
                 "--strict"]) == 0
    assert main(["verify", "catalog:rosqs8", "--check", "rosqs"]) == 0


def test_verify_duplicate_coverage_fails(tmp_path, capsys):
    doc = {"schema_version": 1, "kind": "packing",
           "parameters": {"u": 2, "v": 3, "k": 4, "t": 3},
           "base_blocks": [[[0, 0], [0, 1], [1, 0], [1, 1]],
                           [[0, 0], [0, 1], [1, 0], [1, 2]]]}
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    assert main(["verify", str(path), "--check", "packing"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_unknown_catalog_id(capsys):
    assert main(["verify", "catalog:nope", "--check", "packing"]) == 2


def test_verify_kind_mismatch(capsys):
    assert main(["verify", "catalog:rosqs8", "--check", "fan"]) == 2


def test_construct_hartman_roundtrip(tmp_path, capsys):
    out = tmp_path / "h13.json"
    assert main(["construct", "hartman", "catalog:rosqs8",
                 "--out", str(out)]) == 0
    p = load_design(str(out))
    assert p.num_base_blocks == 13
    assert verify_packing(p).valid
    assert main(["verify", str(out), "--check", "perfect"]) == 0


def test_construct_pipeline_json(capsys):
    assert main(["construct", "pipeline", "2x12", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["count"] == 41
    assert doc["result"]["parameters"]["v"] == 12


def test_construct_filling_recipe(tmp_path, capsys):
    assert main(["construct", "filling1", "catalog:fg-6^2-s3c",
                 "2=catalog:small-(2,3)"]) == 0
    assert "17 blocks" in capsys.readouterr().out


def test_construct_unknown_recipe(capsys):
    assert main(["construct", "alchemy", "catalog:rosqs8"]) == 2


def test_construct_wrong_kind(capsys):
    assert main(["construct", "hartman", "catalog:small-(2,3)"]) == 2


def test_search_json(capsys):
    assert main(["search", "2", "4", "4", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["max"] == 3
    assert doc["proved"]


def test_search_witness_file(tmp_path, capsys):
    out = tmp_path / "w.json"
    assert main(["search", "3", "3", "4", "3", "--out", str(out)]) == 0
    p = load_design(str(out))
    assert p.num_base_blocks == 6
    assert verify_packing(p).valid


def test_convert_roundtrip(tmp_path, capsys):
    m = tmp_path / "m.json"
    b = tmp_path / "b.json"
    assert main(["convert", "catalog:small-(3,2)", "--to", "matrix",
                 "--out", str(m)]) == 0
    assert main(["convert", str(m), "--to", "blocks", "--out", str(b)]) == 0
    from ooc2d.catalog import catalog_get

    assert load_design(str(b)) == catalog_get("small-(3,2)").payload


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "rosqs8" in out
    assert "small-(7,2)" in out


def test_catalog_emit(tmp_path, capsys):
    out = tmp_path / "r8.json"
    assert main(["catalog", "emit", "rosqs8", "--out", str(out)]) == 0
    d = load_design(str(out))
    assert d.n == 8


def test_weighting_chain_via_files(tmp_path, capsys):
    """builds the 68-block 8x2 packing entirely through the cli"""
    semi = tmp_path / "semi.json"
    h44 = tmp_path / "h44.json"
    master = tmp_path / "master.json"
    fan68 = tmp_path / "fan68.json"
    triv = tmp_path / "triv.json"
    final = tmp_path / "final.json"
    assert main(["construct", "remap", "hsemicyclic", "catalog:h-4-2-4-3",
                 "--out", str(semi)]) == 0
    assert main(["construct", "weighting3", "catalog:h-4-2-4-3",
                 "4=%s" % semi, "--out", str(h44)]) == 0
    assert main(["construct", "pairfan", "4", "--out", str(master)]) == 0
    assert main(["construct", "weighting1", str(master),
                 "fan:2=catalog:fg-4^2-s2c", "h:4=%s" % h44,
                 "--out", str(fan68)]) == 0
    assert main(["search", "2", "2", "4", "3", "--out", str(triv)]) == 0
    assert main(["construct", "filling1", str(fan68), "2=%s" % triv,
                 "--out", str(final)]) == 0
    capsys.readouterr()
    assert main(["verify", str(final), "--check", "ooc"]) == 0
    assert "ok:" in capsys.readouterr().out
    p = load_design(str(final))
    assert (p.u, p.v, p.num_base_blocks) == (8, 2, 68)


def test_no_arguments_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "ooc2d.cli", "bound",
                           "8", "2", "4", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "jstar=68" in proc.stdout
