from __future__ import annotations

import random

import pytest

from ooc2d.catalog import catalog_get
from ooc2d.core import Code, CodewordMatrix, as_block, make_packing
from ooc2d.correlation import (block_to_matrix, code_to_packing, correlation,
                               matrix_to_block, packing_to_code, verify_ooc)


def random_matrix(rng, u, v, w):
    cells = rng.sample([(r, c) for r in range(u) for c in range(v)], w)
    bits = [[0] * v for _ in range(u)]
    for r, c in cells:
        bits[r][c] = 1
    return CodewordMatrix(u=u, v=v, bits=tuple(tuple(row) for row in bits))


def test_block_matrix_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        u, v = rng.randint(1, 4), rng.randint(1, 8)
        m = random_matrix(rng, u, v, min(4, u * v))
        assert block_to_matrix(matrix_to_block(m), u, v) == m


def test_correlation_symmetry():
    """shifting the other matrix by the negated offset gives the same sum."""
    rng = random.Random(4)
    for _ in range(60):
        u, v = rng.randint(1, 3), rng.randint(2, 7)
        a = random_matrix(rng, u, v, 4) if u * v >= 4 else random_matrix(rng, u, v, u * v)
        b = random_matrix(rng, u, v, a.weight)
        for r in range(v):
            assert correlation(a, b, r) == correlation(b, a, (-r) % v)


def test_autocorrelation_at_zero_is_weight():
    m = random_matrix(random.Random(5), 2, 5, 4)
    assert correlation(m, m, 0) == 4


def test_verify_ooc_agrees_with_direct_correlation():
    code = packing_to_code(catalog_get("small-(2,6)").payload)
    report = verify_ooc(code)
    assert report.ok
    worst = 0
    for i, a in enumerate(code.codewords):
        for j, b in enumerate(code.codewords[i:], start=i):
            for r in range(code.v):
                if i == j and r == 0:
                    continue
                worst = max(worst, correlation(a, b, r))
    assert worst == report.worst_value
    assert worst <= code.lam


def test_verify_ooc_flags_violation():
    # two codewords sharing three cells in a common row pattern
    a = block_to_matrix(as_block([(0, 0), (0, 1), (0, 2), (1, 0)]), 2, 7)
    b = block_to_matrix(as_block([(0, 0), (0, 1), (0, 2), (1, 3)]), 2, 7)
    code = Code(u=2, v=7, k=4, lam=2, codewords=(a, b))
    report = verify_ooc(code)
    assert not report.ok
    assert report.worst_value >= 3
    (ia, ib), r = report.witness
    assert correlation(code.codewords[ia], code.codewords[ib], r) > code.lam


def test_packing_code_roundtrip():
    p = catalog_get("small-(3,3)").payload
    assert code_to_packing(packing_to_code(p)) == p


def test_packing_to_code_needs_pairs():
    p = make_packing(2, 3, 2, 1, [as_block([(0, 0), (1, 1)])])
    with pytest.raises(ValueError):
        packing_to_code(p)
