"""Layered group divisible designs and their verifiers.

A fan design with s layers lives on a pointed set partitioned into
groups.  The terminal blocks together with every layer block of size
three or more cover each triple that meets two or more groups exactly
once and never cover a triple inside a single group.  Each layer on
its own covers every cross-group pair exactly once.  With s = 0 only
the triple condition remains.

Two universe shapes appear:

* cyclic: points (x, y, j) with x indexing the group, y inside the
  group fibre, j in Z_h; the action adds 1 to j.  Groups are fixed
  setwise by the action.
* regular: points (row, col) on a u x v grid; the action adds 1 to
  col modulo v.  Groups are the column classes modulo v // h, so the
  action permutes the groups cyclically.

H designs are the transversal relatives: on I_n x I_l x Z_h with
groups the x-fibres, every t-subset meeting t distinct groups is
covered exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd

from .core import Point

CYCLIC = "cyclic"
REGULAR = "regular"

INF = -1  # fixed point marker in rotational quadruple systems


@dataclass(frozen=True)
class GroupType:
    """Multiset of group sizes, stored as (size, count) pairs in
    descending size order."""

    parts: tuple

    def __post_init__(self):
        for size, count in self.parts:
            if size < 1 or count < 1:
                raise ValueError("bad group type part (%d, %d)" % (size, count))
        sizes = [size for size, _ in self.parts]
        if sizes != sorted(sizes, reverse=True) or len(set(sizes)) != len(sizes):
            raise ValueError("parts must be sorted descending with distinct sizes")

    @property
    def num_points(self) -> int:
        return sum(size * count for size, count in self.parts)

    @property
    def num_groups(self) -> int:
        return sum(count for _, count in self.parts)

    def __str__(self) -> str:
        return " ".join("%d^%d" % (size, count) for size, count in self.parts)


def group_type(sizes) -> GroupType:
    tally: dict = {}
    for s in sizes:
        tally[s] = tally.get(s, 0) + 1
    parts = tuple(sorted(tally.items(), reverse=True))
    return GroupType(parts=parts)


@dataclass(frozen=True)
class DesignReport:
    ok: bool
    detail: str | None = None


@dataclass(frozen=True)
class FanDesign:
    s: int
    shape: str
    h: int
    layers: tuple  # s families of blocks
    terminal: tuple
    g_list: tuple = ()  # cyclic shape only
    u: int = 0  # regular shape only
    v: int = 0
    developed: bool = False  # blocks listed in full, not one per orbit

    def __post_init__(self):
        if self.shape not in (CYCLIC, REGULAR):
            raise ValueError("unknown universe shape %r" % (self.shape,))
        if self.s != len(self.layers):
            raise ValueError("s=%d but %d layers given" % (self.s, len(self.layers)))
        if self.h < 1:
            raise ValueError("h must be positive")
        if self.shape == CYCLIC:
            if not self.g_list or any(g < 1 for g in self.g_list):
                raise ValueError("cyclic shape needs positive fibre sizes")
            if self.u or self.v:
                raise ValueError("u, v are for the regular shape")
        else:
            if self.u < 1 or self.v < 1:
                raise ValueError("regular shape needs positive u, v")
            if self.v % self.h:
                raise ValueError("h=%d must divide v=%d" % (self.h, self.v))
            if self.g_list:
                raise ValueError("g_list is for the cyclic shape")
        for fam in self.families():
            for b in fam:
                if len(b) < 2 or len(set(b)) != len(b):
                    raise ValueError("bad block %r" % (b,))
                if tuple(b) != tuple(sorted(b)):
                    raise ValueError("block %r is not sorted" % (b,))
                for p in b:
                    self._check_point(p)

    def _check_point(self, p) -> None:
        if self.shape == CYCLIC:
            x, y, j = p
            if not (0 <= x < len(self.g_list) and 0 <= y < self.g_list[x] and 0 <= j < self.h):
                raise ValueError("point %r out of range" % (p,))
        else:
            if not (0 <= p[0] < self.u and 0 <= p[1] < self.v):
                raise ValueError("point %r out of range" % (p,))

    def families(self) -> tuple:
        return self.layers + (self.terminal,)

    def points(self) -> list:
        if self.shape == CYCLIC:
            return [(x, y, j)
                    for x in range(len(self.g_list))
                    for y in range(self.g_list[x])
                    for j in range(self.h)]
        return [Point(i, j) for i in range(self.u) for j in range(self.v)]

    def group_of(self, p) -> int:
        if self.shape == CYCLIC:
            return p[0]
        return p[1] % (self.v // self.h)

    @property
    def period(self) -> int:
        """Order of the acting cyclic group."""
        return self.h if self.shape == CYCLIC else self.v

    def group_sizes(self) -> GroupType:
        if self.shape == CYCLIC:
            return group_type(g * self.h for g in self.g_list)
        return group_type([self.u * self.h] * (self.v // self.h))


def fan_shift(d: FanDesign, block, delta: int = 1):
    if d.shape == CYCLIC:
        return tuple(sorted((x, y, (j + delta) % d.h) for x, y, j in block))
    return tuple(sorted(Point(p[0], (p[1] + delta) % d.v) for p in block))


def block_stabilizer(d: FanDesign, block) -> int:
    base = tuple(sorted(block))
    return sum(1 for delta in range(d.period) if fan_shift(d, base, delta) == base)


def develop_family(d: FanDesign, blocks) -> tuple:
    """(developed blocks, stabilizer orders, collision detail or None).

    For base input each orbit is expanded with duplicates removed
    inside the orbit; a block reappearing from a different base block
    is a collision.  Developed input is returned as is after checking
    the family is closed under the action.
    """
    if d.developed:
        fam = [tuple(sorted(b)) for b in blocks]
        fam_set = set(fam)
        if len(fam_set) != len(fam):
            return fam, (), "duplicate block in developed family"
        for b in fam:
            if fan_shift(d, b, 1) not in fam_set:
                return fam, (), "family not closed under the action at %r" % (b,)
        stabs = tuple(block_stabilizer(d, b) for b in fam)
        return fam, stabs, None
    out = []
    seen: set = set()
    stabs = []
    for b in blocks:
        stabs.append(block_stabilizer(d, b))
        for delta in range(d.period):
            img = fan_shift(d, b, delta)
            if img in seen:
                if img in {fan_shift(d, b, e) for e in range(delta)}:
                    continue
                return out, tuple(stabs), "orbit collision at %r" % (img,)
            seen.add(img)
            out.append(img)
    return out, tuple(stabs), None


def verify_fan(d: FanDesign) -> DesignReport:
    """Check the covering conditions over the developed families."""
    developed = []
    for idx, fam in enumerate(d.families()):
        full, _, problem = develop_family(d, fam)
        if problem:
            return DesignReport(False, "family %d: %s" % (idx, problem))
        developed.append(full)
    *layer_full, terminal_full = developed

    pts = d.points()
    triple_counts: dict = {}
    # size-2 blocks contribute no triples, so no filtering is needed
    for fam in developed:
        for b in fam:
            for sub in combinations(b, 3):
                triple_counts[sub] = triple_counts.get(sub, 0) + 1
    for sub in combinations(sorted(pts), 3):
        groups = {d.group_of(p) for p in sub}
        want = 1 if len(groups) >= 2 else 0
        got = triple_counts.get(sub, 0)
        if got != want:
            return DesignReport(False, "triple %r covered %d times, expected %d"
                                % (sub, got, want))

    for idx, fam in enumerate(layer_full):
        pair_counts: dict = {}
        for b in fam:
            for sub in combinations(b, 2):
                pair_counts[sub] = pair_counts.get(sub, 0) + 1
        for sub in combinations(sorted(pts), 2):
            want = 1 if d.group_of(sub[0]) != d.group_of(sub[1]) else 0
            got = pair_counts.get(sub, 0)
            if got != want:
                return DesignReport(False, "layer %d: pair %r covered %d times, expected %d"
                                    % (idx, sub, got, want))
    return DesignReport(True)


def _verify_action(d: FanDesign, shape: str, strict: bool) -> DesignReport:
    if d.shape != shape:
        raise ValueError("expected %s shape, got %s" % (shape, d.shape))
    for idx, fam in enumerate(d.families()):
        full, stabs, problem = develop_family(d, fam)
        if problem:
            return DesignReport(False, "family %d: %s" % (idx, problem))
        if strict:
            for b, order in zip(fam if not d.developed else full, stabs):
                if order != 1:
                    return DesignReport(False, "family %d: block %r has stabilizer of order %d"
                                        % (idx, b, order))
    return DesignReport(True)


def verify_h_cyclic(d: FanDesign, strict: bool = True) -> DesignReport:
    """The +1 action on the last coordinate maps every family onto
    itself; with strict also demand trivial stabilizers."""
    return _verify_action(d, CYCLIC, strict)


def verify_regular(d: FanDesign, strict: bool = True) -> DesignReport:
    return _verify_action(d, REGULAR, strict)


@dataclass(frozen=True)
class HDesign:
    """Transversal t-design on I_n x I_l x Z_h with groups the
    x-fibres, presented by base blocks under the Z_h action."""

    n: int
    l: int
    h: int
    t: int
    base_blocks: tuple

    def __post_init__(self):
        if self.n < self.t or self.l < 1 or self.h < 1:
            raise ValueError("bad H design parameters")
        for b in self.base_blocks:
            if len(set(b)) != len(b) or tuple(b) != tuple(sorted(b)):
                raise ValueError("bad block %r" % (b,))
            for x, y, j in b:
                if not (0 <= x < self.n and 0 <= y < self.l and 0 <= j < self.h):
                    raise ValueError("point %r out of range" % ((x, y, j),))
            if len({x for x, _, _ in b}) != len(b):
                raise ValueError("block %r is not transversal" % (b,))

    @property
    def g(self) -> int:
        return self.l * self.h

    def block_sizes(self) -> tuple:
        return tuple(sorted({len(b) for b in self.base_blocks}))

    def points(self) -> list:
        return [(x, y, j) for x in range(self.n)
                for y in range(self.l) for j in range(self.h)]


def h_shift(d: HDesign, block, delta: int = 1):
    return tuple(sorted((x, y, (j + delta) % d.h) for x, y, j in block))


def verify_h_design(d: HDesign) -> DesignReport:
    """Exact cover of the transverse t-subsets by the developed blocks.

    A valid design here is automatically strict: a block with a
    nontrivial stabilizer would repeat one of its own t-subsets.
    """
    developed = []
    seen: set = set()
    for b in d.base_blocks:
        for delta in range(d.h):
            img = h_shift(d, b, delta)
            if img in seen:
                if img in {h_shift(d, b, e) for e in range(delta)}:
                    continue
                return DesignReport(False, "orbit collision at %r" % (img,))
            seen.add(img)
            developed.append(img)

    counts: dict = {}
    for b in developed:
        for sub in combinations(b, d.t):
            counts[sub] = counts.get(sub, 0) + 1
    for sub in combinations(sorted(d.points()), d.t):
        want = 1 if len({x for x, _, _ in sub}) == d.t else 0
        got = counts.get(sub, 0)
        if got != want:
            return DesignReport(False, "t-subset %r covered %d times, expected %d"
                                % (sub, got, want))
    for b in d.base_blocks:
        assert block_stabilizer_h(d, b) == 1, b
    return DesignReport(True)


def block_stabilizer_h(d: HDesign, block) -> int:
    base = tuple(sorted(block))
    return sum(1 for delta in range(d.h) if h_shift(d, base, delta) == base)


@dataclass(frozen=True)
class RoSQSDesign:
    """Quadruple system on Z_{n-1} plus a fixed point, invariant under
    +1 on the cyclic part.  The fixed point is written INF (-1)."""

    n: int
    base_blocks: tuple

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("need at least 4 points")
        for b in self.base_blocks:
            if len(b) != 4 or len(set(b)) != len(b) or tuple(b) != tuple(sorted(b)):
                raise ValueError("bad block %r" % (b,))
            for x in b:
                if x != INF and not (0 <= x < self.n - 1):
                    raise ValueError("element %r out of range" % (x,))

    def b1(self) -> tuple:
        """Base blocks through the fixed point."""
        return tuple(b for b in self.base_blocks if INF in b)

    def b2(self) -> tuple:
        return tuple(b for b in self.base_blocks if INF not in b)


def rosqs_shift(block, delta: int, m: int):
    return tuple(sorted(x if x == INF else (x + delta) % m for x in block))


def verify_rosqs(d: RoSQSDesign) -> DesignReport:
    if d.n % 6 not in (2, 4):
        return DesignReport(False, "no quadruple system on %d points" % d.n)
    m = d.n - 1
    developed = []
    seen: set = set()
    for b in d.base_blocks:
        for delta in range(m):
            img = rosqs_shift(b, delta, m)
            if img in seen:
                if img in {rosqs_shift(b, e, m) for e in range(delta)}:
                    continue
                return DesignReport(False, "orbit collision at %r" % (img,))
            seen.add(img)
            developed.append(img)
    counts: dict = {}
    for b in developed:
        for sub in combinations(b, 3):
            counts[sub] = counts.get(sub, 0) + 1
    pts = [INF] + list(range(m))
    for sub in combinations(sorted(pts), 3):
        got = counts.get(sub, 0)
        if got != 1:
            return DesignReport(False, "triple %r covered %d times" % (sub, got))
    return DesignReport(True)


def _gcd_over(values) -> int:
    return reduce(gcd, values)


def admissible_0fg(g: int, n: int, terminal_sizes=(4,)) -> bool:
    """Divisibility conditions necessary for a 0-layer fan design of
    type g^n whose terminal blocks have sizes in terminal_sizes."""
    if g < 1 or n < 3:
        raise ValueError("need g >= 1 and n >= 3")
    alpha = _gcd_over([k * (k - 1) * (k - 2) for k in terminal_sizes])
    beta = _gcd_over([(k - 1) * (k - 2) for k in terminal_sizes])
    gamma = _gcd_over([k - 2 for k in terminal_sizes])
    if g * g * n * (n - 1) * (g * n + g - 3) % alpha:
        return False
    if g * (n - 1) * (g * n + g - 3) % beta:
        return False
    if g == 1:
        return n % gamma == 2 % gamma
    return g % gamma == 2 % gamma and g * n % gamma == 2 % gamma


def exists_0fg_quad(g: int, n: int) -> bool:
    """Existence of a 0-layer fan design of type g^n with terminal
    block size 4: either g = 1 with n = 2 or 4 mod 6, or g even with
    3 | g(n-1)(n-2)."""
    if g < 1 or n < 3:
        raise ValueError("need g >= 1 and n >= 3")
    if g == 1:
        return n % 6 in (2, 4)
    return g % 2 == 0 and g * (n - 1) * (n - 2) % 3 == 0


def exists_h_design(n: int, g: int) -> bool:
    """Existence of an H design with n groups of size g, block size 4,
    t = 3.  Not defined for n = 3."""
    if n < 3 or g < 1:
        raise ValueError("need n >= 3 and g >= 1")
    if n == 3:
        raise ValueError("existence with 3 groups is not settled here")
    if n == 5:
        return g % 2 == 0 and g != 2 and g % 48 not in (10, 26)
    return g * n % 2 == 0 and g * (n - 1) * (n - 2) % 3 == 0
