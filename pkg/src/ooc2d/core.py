"""Basic objects: grid points, base blocks, cyclic packings, codes.

Points live on a u x v grid.  The group Z_v acts on the grid by adding
1 to the column index modulo v, row indices never move.  A base block
is the chosen representative of its orbit under that action: the
lexicographically least among the v column shifts, with points sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Point(NamedTuple):
    row: int
    col: int


Block = tuple  # tuple[Point, ...], sorted ascending


def as_block(points: Iterable) -> Block:
    pts = tuple(sorted(Point(int(r), int(c)) for r, c in points))
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate point in block: %r" % (pts,))
    return pts


def check_block_range(block: Block, u: int, v: int) -> None:
    for p in block:
        if not (0 <= p.row < u and 0 <= p.col < v):
            raise ValueError("point %r outside %dx%d grid" % (p, u, v))


def shift(block: Block, delta: int, v: int) -> Block:
    """Add delta to every column index modulo v and re-sort."""
    if v <= 0:
        raise ValueError("period v must be positive")
    return tuple(sorted(Point(p.row, (p.col + delta) % v) for p in block))


def canonicalize(block: Block, v: int) -> Block:
    """Lexicographically least among the v column shifts of the block."""
    if not block:
        raise ValueError("cannot canonicalize an empty block")
    for p in block:
        if p.row < 0 or not (0 <= p.col < v):
            raise ValueError("point %r out of range for period %d" % (p, v))
    return min(shift(block, d, v) for d in range(v))


def stabilizer_order(block: Block, v: int) -> int:
    """Order of the subgroup of Z_v fixing the block setwise."""
    base = tuple(sorted(block))
    return sum(1 for d in range(v) if shift(base, d, v) == base)


def orbit(block: Block, v: int) -> list:
    """All distinct column shifts of the block, starting from the
    canonical representative."""
    rep = canonicalize(block, v)
    seen = []
    seen_set = set()
    for d in range(v):
        img = shift(rep, d, v)
        if img not in seen_set:
            seen_set.add(img)
            seen.append(img)
    return seen


@dataclass(frozen=True)
class CyclicPacking:
    """A set of base blocks on the u x v grid whose Z_v orbits form a
    t-wise packing candidate.  Construction only checks cheap shape
    invariants; run packing.verify_packing for the covering property.
    """

    u: int
    v: int
    k: int
    t: int
    base_blocks: tuple

    def __post_init__(self):
        if self.u < 1 or self.v < 1:
            raise ValueError("grid dimensions must be positive")
        if not (1 <= self.t <= self.k):
            raise ValueError("need 1 <= t <= k, got t=%d k=%d" % (self.t, self.k))
        seen = set()
        for b in self.base_blocks:
            if len(b) != self.k:
                raise ValueError("block %r has size %d, expected %d" % (b, len(b), self.k))
            check_block_range(b, self.u, self.v)
            rep = canonicalize(b, self.v)
            if b != rep:
                raise ValueError("block %r is not the canonical representative %r" % (b, rep))
            if rep in seen:
                raise ValueError("two base blocks share the orbit of %r" % (rep,))
            seen.add(rep)

    @property
    def num_base_blocks(self) -> int:
        return len(self.base_blocks)


def make_packing(u: int, v: int, k: int, t: int, blocks: Iterable) -> CyclicPacking:
    """Build a CyclicPacking from arbitrary orbit representatives.

    Blocks are canonicalized and sorted so equal packings compare equal
    regardless of which orbit representatives the caller picked.
    """
    reps = sorted(canonicalize(as_block(b), v) for b in blocks)
    return CyclicPacking(u=u, v=v, k=k, t=t, base_blocks=tuple(reps))


@dataclass(frozen=True)
class CodewordMatrix:
    """A u x v matrix over {0,1}."""

    u: int
    v: int
    bits: tuple  # u rows, each a tuple of v ints

    def __post_init__(self):
        if len(self.bits) != self.u:
            raise ValueError("expected %d rows, got %d" % (self.u, len(self.bits)))
        for row in self.bits:
            if len(row) != self.v:
                raise ValueError("expected %d columns, got %d" % (self.v, len(row)))
            for x in row:
                if x not in (0, 1):
                    raise ValueError("matrix entries must be 0 or 1, got %r" % (x,))

    @property
    def weight(self) -> int:
        return sum(sum(row) for row in self.bits)


@dataclass(frozen=True)
class Code:
    """A family of u x v codeword matrices of constant weight k."""

    u: int
    v: int
    k: int
    lam: int
    codewords: tuple  # tuple[CodewordMatrix, ...]

    def __post_init__(self):
        if self.lam < 1 or self.k <= self.lam:
            raise ValueError("need k > lambda >= 1")
        for m in self.codewords:
            if (m.u, m.v) != (self.u, self.v):
                raise ValueError("codeword has shape %dx%d, expected %dx%d"
                                 % (m.u, m.v, self.u, self.v))
            if m.weight != self.k:
                raise ValueError("codeword weight %d, expected %d" % (m.weight, self.k))

    @property
    def size(self) -> int:
        return len(self.codewords)
