from __future__ import annotations

from math import comb

import pytest

from ooc2d.catalog import catalog_get
from ooc2d.core import as_block, make_packing
from ooc2d.packing import develop, is_perfect, leave, verify_packing


def test_develop_count_strict():
    p = catalog_get("small-(7,2)").payload
    blocks = develop(p)
    assert len(blocks) == p.num_base_blocks * p.v
    assert len(set(blocks)) == len(blocks)


def test_develop_collapses_short_orbits():
    # full-column blocks are fixed by every shift
    b = as_block([(r, c) for r in range(2) for c in range(2)])
    p = make_packing(2, 2, 4, 3, [b])
    assert len(develop(p)) == 1


def test_verify_packing_catalog_entries():
    for entry_id in ["small-(2,3)", "small-(3,4)", "small-(6,2)"]:
        p = catalog_get(entry_id).payload
        report = verify_packing(p)
        assert report.valid
        assert report.strictly_cyclic
        assert sorted(report.orbit_lengths) == [p.v] * p.num_base_blocks


def test_verify_packing_reports_violation():
    a = as_block([(0, 0), (0, 1), (1, 0), (1, 1)])
    b = as_block([(0, 0), (0, 1), (1, 0), (1, 2)])
    p = make_packing(2, 3, 4, 3, [a, b])
    report = verify_packing(p)
    assert not report.valid
    triple, count = report.violation
    assert count >= 2
    assert len(triple) == 3


def test_leave_size_identity():
    p = catalog_get("small-(3,2)").payload
    report = verify_packing(p)
    rest = leave(p)
    assert len(rest) == report.leave_size
    n = p.u * p.v
    assert len(rest) == comb(n, 3) - len(develop(p)) * comb(4, 3)


def test_leave_rejects_invalid():
    a = as_block([(0, 0), (0, 1), (1, 0), (1, 1)])
    b = as_block([(0, 0), (0, 1), (1, 0), (1, 2)])
    p = make_packing(2, 3, 4, 3, [a, b])
    with pytest.raises(ValueError):
        leave(p)


def test_is_perfect():
    from ooc2d.constructs import hartman

    p, _ = hartman(catalog_get("rosqs8").payload)
    assert is_perfect(p)
    assert verify_packing(p).leave_size == 0
    assert not is_perfect(catalog_get("small-(2,3)").payload)
