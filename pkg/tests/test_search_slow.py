from __future__ import annotations

import pytest

from ooc2d.bounds import jstar
from ooc2d.packing import verify_packing
from ooc2d.search import max_packing

pytestmark = pytest.mark.slow

SWEEP = [(2, 3, 1), (3, 2, 1), (2, 4, 3), (4, 2, 6), (3, 3, 6),
         (2, 6, 8), (3, 4, 12), (4, 3, 17), (6, 2, 25), (2, 2, 0), (6, 1, 3)]


def test_exhaustive_sweep_without_heuristic():
    """the tree search alone, with no heuristic incumbent, still
    proves every settled value; the two largest grids take a few
    minutes each."""
    for u, v, best in SWEEP:
        result = max_packing(u, v, 4, 3, heuristic_iterations=0,
                             node_budget=50_000_000)
        assert result.max_blocks == best, (u, v)
        assert result.proved_optimal, (u, v)
        assert not result.budget_exhausted, (u, v)
        report = verify_packing(result.witness)
        assert report.valid and report.strictly_cyclic, (u, v)


def test_row_filter_agreement_without_heuristic():
    for u, v in [(2, 6), (4, 3)]:
        plain = max_packing(u, v, 4, 3, heuristic_iterations=0)
        filtered = max_packing(u, v, 4, 3, heuristic_iterations=0,
                               row_filter=True)
        assert plain.max_blocks == filtered.max_blocks == jstar(u, v)[0]
