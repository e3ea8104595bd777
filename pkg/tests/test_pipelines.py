from __future__ import annotations

import pytest

from ooc2d.bounds import jstar
from ooc2d.constructs import semicyclic_to_vcyclic
from ooc2d.core import Code, CyclicPacking
from ooc2d.correlation import packing_to_code, verify_ooc
from ooc2d.designs import verify_fan, verify_h_cyclic
from ooc2d.files import load_design
from ooc2d.packing import verify_packing
from ooc2d.pipelines import pipeline_names, run_pipeline

GRID_PIPELINES = ["2x4", "2x7", "2x8", "2x12", "2x15", "3x10",
                  "4x2", "4x3", "8x2", "8x4", "12x2", "14x1"]


def test_registry_contents():
    names = pipeline_names()
    for name in GRID_PIPELINES + ["h44-plain", "h44-2cyc"]:
        assert name in names


def test_unknown_pipeline():
    with pytest.raises(KeyError):
        run_pipeline("9x9")


def test_grid_pipelines_reach_the_bound():
    """every grid pipeline must land exactly on the sharpened bound."""
    for name in GRID_PIPELINES:
        obj, trace = run_pipeline(name)
        u, v = map(int, name.split("x"))
        if isinstance(obj, CyclicPacking):
            assert (obj.u, obj.v) == (u, v), name
            count = obj.num_base_blocks
            report = verify_packing(obj)
            assert report.valid and report.strictly_cyclic, name
            assert verify_ooc(packing_to_code(obj)).ok, name
        else:
            assert isinstance(obj, Code)
            assert (obj.u, obj.v) == (u, v), name
            count = obj.size
            assert verify_ooc(obj).ok, name
        assert count == jstar(u, v)[0], name
        assert sum(delta for _, delta in trace.steps) == count, name


def test_h_pipelines():
    plain, _ = run_pipeline("h44-plain")
    assert len(plain.base_blocks) == 64
    two_cyc, _ = run_pipeline("h44-2cyc")
    assert len(two_cyc.base_blocks) == 32


def test_results_cached():
    assert run_pipeline("4x2") is run_pipeline("4x2")


def test_semicyclic_fixture_converts(tmp_path):
    import os

    fixture = os.path.join(os.path.dirname(__file__), "data", "semicyclic-6x2.json")
    out, trace = semicyclic_to_vcyclic(load_design(fixture))
    assert tuple(out.g_list) == (2, 2)
    assert out.h == 3
    assert len(out.terminal) == 15
    assert verify_fan(out).ok
    assert verify_h_cyclic(out, strict=True).ok
    assert sum(delta for _, delta in trace.steps) == 15
