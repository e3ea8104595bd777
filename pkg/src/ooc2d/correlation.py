"""Correlation checks for constant-weight codes on a u x v grid.

correlation(a, b, r) counts positions where a overlaps b after b's
columns are rotated left by r.  A code is acceptable when every such
count stays at or below lambda, excluding the trivial case of a
codeword against itself at zero shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Block, Code, CodewordMatrix, CyclicPacking, Point, as_block, make_packing


@dataclass(frozen=True)
class CorrelationReport:
    ok: bool
    worst_value: int
    # ((index_a, index_b), r) of the first violation in scan order,
    # or None when the code is clean
    witness: tuple | None


def correlation(a: CodewordMatrix, b: CodewordMatrix, r: int) -> int:
    """Sum over all cells of a[i][j] * b[i][(j + r) mod v]."""
    if (a.u, a.v) != (b.u, b.v):
        raise ValueError("matrices have different shapes")
    v = a.v
    total = 0
    for i in range(a.u):
        ra, rb = a.bits[i], b.bits[i]
        for j in range(v):
            total += ra[j] * rb[(j + r) % v]
    return total


def block_to_matrix(block: Block, u: int, v: int) -> CodewordMatrix:
    grid = [[0] * v for _ in range(u)]
    for p in block:
        if not (0 <= p.row < u and 0 <= p.col < v):
            raise ValueError("point %r outside %dx%d grid" % (p, u, v))
        if grid[p.row][p.col]:
            raise ValueError("duplicate point %r" % (p,))
        grid[p.row][p.col] = 1
    return CodewordMatrix(u=u, v=v, bits=tuple(tuple(row) for row in grid))


def matrix_to_block(m: CodewordMatrix) -> Block:
    return tuple(Point(i, j) for i in range(m.u) for j in range(m.v) if m.bits[i][j])


def _pair_profile(a: Block, b: Block, v: int) -> dict:
    """correlation values of the pair at every rotation, as a sparse map.

    correlation(A, B, r) counts same-row point pairs (p, q) with
    q.col = p.col + r mod v, so one pass over the point pairs gives
    all v values at once.
    """
    counts: dict = {}
    for p in a:
        for q in b:
            if p.row == q.row:
                r = (q.col - p.col) % v
                counts[r] = counts.get(r, 0) + 1
    return counts


def verify_ooc(code: Code) -> CorrelationReport:
    """Check every codeword pair at every rotation.

    Only unordered pairs are scanned: correlation(A, B, r) equals
    correlation(B, A, v - r), so the ordered half is redundant.  The
    witness is the first violation in (index_a, index_b, r) order.
    """
    v = code.v
    lam = code.lam
    blocks = [matrix_to_block(m) for m in code.codewords]
    worst = 0
    witness = None
    for ia in range(len(blocks)):
        for ib in range(ia, len(blocks)):
            counts = _pair_profile(blocks[ia], blocks[ib], v)
            for r in range(v):
                if ia == ib and r == 0:
                    continue
                value = counts.get(r, 0)
                if value > worst:
                    worst = value
                if value > lam and witness is None:
                    witness = ((ia, ib), r)
    return CorrelationReport(ok=worst <= lam, worst_value=worst, witness=witness)


def packing_to_code(p: CyclicPacking) -> Code:
    """Read each base block as a codeword matrix.  Needs t >= 2 so the
    correlation bound t - 1 is a valid lambda."""
    if p.t < 2:
        raise ValueError("packing with t=%d has no code counterpart" % p.t)
    mats = tuple(block_to_matrix(b, p.u, p.v) for b in p.base_blocks)
    return Code(u=p.u, v=p.v, k=p.k, lam=p.t - 1, codewords=mats)


def code_to_packing(c: Code) -> CyclicPacking:
    blocks = [as_block(matrix_to_block(m)) for m in c.codewords]
    return make_packing(c.u, c.v, c.k, c.lam + 1, blocks)
