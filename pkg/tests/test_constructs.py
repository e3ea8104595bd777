from __future__ import annotations

import pytest

from ooc2d.catalog import catalog_get
from ooc2d.constructs import (add_cross_pairs_layer, as_semicyclic,
                              complete_pair_fan, filling_1, filling_2, fold,
                              hartman, hartman_part_sizes,
                              perfect_to_regular_1fg, regular_to_h1cyclic,
                              trivial_packing, weighting_1, weighting_3)
from ooc2d.core import Point, as_block, canonicalize
from ooc2d.correlation import packing_to_code, verify_ooc
from ooc2d.designs import CYCLIC, RoSQSDesign, verify_fan, verify_h_cyclic
from ooc2d.packing import is_perfect, verify_packing


def _cat(entry_id):
    return catalog_get(entry_id).payload


def test_hartman_counts_and_perfection():
    p, trace = hartman(_cat("rosqs8"))
    assert (p.u, p.v) == (2, 7)
    assert p.num_base_blocks == 13
    assert is_perfect(p)
    assert sum(delta for _, delta in trace.steps) == 13


def test_hartman_part_sizes():
    assert hartman_part_sizes(_cat("rosqs8")) == (2, 2, 9)
    assert sum(hartman_part_sizes(_cat("rosqs8"))) == 13


def test_hartman_rejects_broken_system():
    with pytest.raises(ValueError):
        hartman(RoSQSDesign(n=8, base_blocks=()))


def test_filling_1_counts():
    p, trace = filling_1(_cat("fg-4^2-s2c"), {2: trivial_packing(2, 2)})
    assert (p.u, p.v, p.num_base_blocks) == (4, 2, 6)
    assert dict(trace.steps)["master blocks"] == 6

    p, _ = filling_1(_cat("fg-6^2-s3c"), {2: _cat("small-(2,3)")})
    assert (p.u, p.v, p.num_base_blocks) == (4, 3, 17)


def test_filling_1_missing_filler():
    with pytest.raises(ValueError):
        filling_1(_cat("fg-6^2-s3c"), {})


def test_filling_1_wrong_filler_grid():
    with pytest.raises(ValueError):
        filling_1(_cat("fg-6^2-s3c"), {2: _cat("small-(3,2)")})


def test_filling_2_counts():
    p, _ = filling_2(_cat("fg-(2,2)reg-4^2"), trivial_packing(2, 2))
    assert (p.u, p.v, p.num_base_blocks) == (2, 4, 3)
    q, _ = filling_2(_cat("fg-(2,4)reg-8^2"), p)
    assert (q.u, q.v, q.num_base_blocks) == (2, 8, 17)


def test_weighting_glue_on_pairs():
    fan, _ = weighting_1(complete_pair_fan(4), {2: _cat("fg-4^2-s2c")},
                         {4: _h44_2cyc()})
    assert fan.shape == CYCLIC
    assert tuple(fan.g_list) == (2, 2, 2, 2)
    assert fan.h == 2
    assert len(fan.terminal) == 68
    assert verify_fan(fan).ok
    assert verify_h_cyclic(fan, strict=True).ok


def _h44_2cyc():
    seed = _cat("h-4-2-4-3")
    semi, _ = as_semicyclic(seed)
    h, _ = weighting_3(seed, {4: semi})
    return h


def test_weighting_3_bootstraps():
    seed = _cat("h-4-2-4-3")
    plain, _ = weighting_3(seed, {4: seed})
    assert (plain.n, plain.l, plain.h) == (4, 4, 1)
    assert len(plain.base_blocks) == 64
    two_cyc = _h44_2cyc()
    assert (two_cyc.n, two_cyc.l, two_cyc.h) == (4, 2, 2)
    assert len(two_cyc.base_blocks) == 32


def test_as_semicyclic():
    semi, _ = as_semicyclic(_cat("h-4-2-4-3"))
    assert (semi.n, semi.l, semi.h) == (4, 1, 2)
    assert len(semi.base_blocks) == 4
    with pytest.raises(ValueError):
        as_semicyclic(semi)


def test_add_cross_pairs_layer_matches_pinned_orbits():
    layered, _ = add_cross_pairs_layer(_cat("fg-(2,2)reg-4^2"))
    assert layered.s == 1
    got = set(layered.layers[0])
    pinned = {
        tuple(sorted([Point(0, 0), Point(0, 1)])),
        tuple(sorted([Point(0, 0), Point(1, 1)])),
        tuple(sorted([Point(1, 0), Point(1, 1)])),
        tuple(sorted([Point(0, 0), Point(1, 3)])),
    }
    canon = {min(tuple(sorted(Point(p.row, (p.col + d) % 4) for p in b))
                 for d in range(4)) for b in got}
    canon_pinned = {min(tuple(sorted(Point(p.row, (p.col + d) % 4) for p in b))
                        for d in range(4)) for b in pinned}
    assert canon == canon_pinned


def test_fold_to_single_column():
    p, _ = hartman(_cat("rosqs8"))
    code, trace = fold(packing_to_code(p), 7)
    assert (code.u, code.v) == (14, 1)
    assert code.size == 91
    assert verify_ooc(code).ok
    assert dict(trace.steps)["translated copies"] == 91


def test_fold_by_one_keeps_code():
    p = _cat("small-(2,3)")
    code, _ = fold(packing_to_code(p), 1)
    assert (code.u, code.v, code.size) == (2, 3, 1)


def test_fold_rejects_bad_divisor():
    p = _cat("small-(2,3)")
    with pytest.raises(ValueError):
        fold(packing_to_code(p), 2)


def test_regular_to_h1cyclic():
    out, _ = regular_to_h1cyclic(_cat("fg-(2,4)reg-8^2"), 2)
    assert out.shape == CYCLIC
    assert tuple(out.g_list) == (4, 4)
    assert out.h == 2
    assert len(out.terminal) == 56
    assert verify_fan(out).ok
    assert verify_h_cyclic(out, strict=True).ok


def test_perfect_to_regular_1fg():
    p, _ = hartman(_cat("rosqs8"))
    fan, _ = perfect_to_regular_1fg(p)
    assert fan.s == 1
    assert len(fan.layers[0]) == 12
    assert len(fan.terminal) == 13
    assert verify_fan(fan).ok


def test_complete_pair_fan():
    fan = complete_pair_fan(4)
    assert fan.s == 1
    assert len(fan.layers[0]) == 6
    assert len(fan.terminal) == 1
    assert verify_fan(fan).ok


def test_trivial_packing_is_empty():
    p = trivial_packing(2, 2)
    assert p.num_base_blocks == 0
    assert verify_packing(p).valid
