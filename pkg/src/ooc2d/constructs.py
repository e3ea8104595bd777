"""Recursive constructions.

Every operation verifies its inputs, builds the output, verifies the
output, and returns (output, trace).  The trace records labelled block
count contributions that must sum to the output's base block count,
which is asserted centrally in _finish.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Code, CyclicPacking, Point, canonicalize, make_packing, shift
from .correlation import block_to_matrix, matrix_to_block, verify_ooc
from .designs import (CYCLIC, INF, REGULAR, DesignReport, FanDesign, HDesign,
                      RoSQSDesign, develop_family, verify_fan, verify_h_cyclic,
                      verify_h_design, verify_regular, verify_rosqs)
from .packing import is_perfect, verify_packing


@dataclass(frozen=True)
class ConstructionTrace:
    inputs: tuple
    steps: tuple  # ((label, count), ...)
    output: object


def _finish(inputs, steps, output, count: int):
    total = sum(delta for _, delta in steps)
    assert total == count, "trace steps sum to %d, output has %d" % (total, count)
    return output, ConstructionTrace(tuple(inputs), tuple(steps), output)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _require_report(report: DesignReport, label: str) -> None:
    if not report.ok:
        raise ValueError("%s: %s" % (label, report.detail))


def _require_packing(p: CyclicPacking, label: str, strict: bool = True) -> None:
    report = verify_packing(p)
    _require(report.valid, "%s: packing invalid at %r" % (label, report.violation))
    if strict:
        _require(report.strictly_cyclic, "%s: packing not strictly cyclic" % label)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trivial_packing(u: int, v: int, k: int = 4, t: int = 3) -> CyclicPacking:
    return CyclicPacking(u=u, v=v, k=k, t=t, base_blocks=())


def hartman(r: RoSQSDesign, input_label: str = "rotational quadruple system"):
    """Blow a rotational quadruple system on p + 1 points up to a
    perfect packing on the 2 x p grid, p prime, p = 1 mod 6.

    Row 0 carries the cyclic part as is.  Blocks through the fixed
    point lose it to (1, 0).  Each pair inside a fixed-point block
    additionally spawns (p - 1) / 2 blocks picking up two points of
    row 1 spaced by the pair difference.  Finally everything is
    mirrored through (i, x) -> (1 - i, -x).
    """
    _require_report(verify_rosqs(r), "hartman input")
    p = r.n - 1
    _require(_is_prime(p) and p % 6 == 1, "need n - 1 = %d to be a prime 1 mod 6" % p)

    a1 = [tuple(sorted(Point(0, x) for x in b)) for b in r.b2()]
    a2 = [tuple(sorted([Point(1, 0)] + [Point(0, x) for x in b if x != INF]))
          for b in r.b1()]
    a3 = []
    for b in r.b1():
        rest = sorted(x for x in b if x != INF)
        for x, y in combinations(rest, 2):
            d = y - x
            for rr in range(1, (p - 1) // 2 + 1):
                a3.append(tuple(sorted([
                    Point(0, x), Point(0, y),
                    Point(1, (2 * rr - 1) * d % p), Point(1, 2 * rr * d % p),
                ])))

    def mirror(block):
        return tuple(sorted(Point(1 - q.row, -q.col % p) for q in block))

    a1m = [mirror(b) for b in a1]
    a2m = [mirror(b) for b in a2]

    out = make_packing(2, p, 4, 3, a1 + a1m + a2 + a2m + a3)
    _require_packing(out, "hartman output")
    _require(is_perfect(out), "hartman output has a nonempty leave")
    steps = (
        ("row 0 quadruples", len(a1)),
        ("mirrored row 1 quadruples", len(a1m)),
        ("fixed point blocks", len(a2)),
        ("mirrored fixed point blocks", len(a2m)),
        ("pair difference blocks", len(a3)),
    )
    return _finish([input_label], steps, out, out.num_base_blocks)


def hartman_part_sizes(r: RoSQSDesign) -> tuple:
    """Sizes of the three block families before merging, in the order
    (plain plus mirror, fixed point plus mirror, pair difference)."""
    p = r.n - 1
    n_pairs = sum(len([x for x in b if x != INF]) * (len([x for x in b if x != INF]) - 1) // 2
                  for b in r.b1())
    return (2 * len(r.b2()), 2 * len(r.b1()), n_pairs * (p - 1) // 2)


def _master_cyclic_0fg(master: FanDesign, label: str) -> None:
    _require(master.shape == CYCLIC, "%s must use the cyclic shape" % label)
    _require(master.s == 0, "%s must have no layers" % label)
    _require_report(verify_fan(master), label)
    _require_report(verify_h_cyclic(master, strict=True), label)


def filling_1(master: FanDesign, fillers: dict, input_labels=None):
    """Fill each group of a strictly h-cyclic 0-layer fan design with a
    strictly h-cyclic packing on fibre x h, giving a packing on the
    disjoint union of the fibres.

    fillers maps fibre size to the packing used for every group of
    that size.  A missing filler is only allowed when the group is too
    small to hold any block."""
    _master_cyclic_0fg(master, "filling_1 master")
    k = 4
    for g, filler in fillers.items():
        _require((filler.u, filler.v) == (g, master.h),
                 "filler for fibre %d must live on %dx%d, got %dx%d"
                 % (g, g, master.h, filler.u, filler.v))
        _require((filler.k, filler.t) == (k, 3), "filler must have k=4, t=3")
        _require_packing(filler, "filling_1 filler for fibre %d" % g)
    for g in set(master.g_list):
        if g not in fillers:
            _require(g * master.h < k,
                     "no filler for fibre size %d and the group can hold blocks" % g)

    blocks = []
    offsets = []
    o = 0
    for g in master.g_list:
        offsets.append(o)
        o += g
    for b in master.terminal:
        blocks.append(tuple(sorted(Point(offsets[x] + y, j) for x, y, j in b)))
    master_count = len(blocks)
    fill_count = 0
    for x, g in enumerate(master.g_list):
        filler = fillers.get(g)
        if filler is None:
            continue
        for fb in filler.base_blocks:
            blocks.append(tuple(sorted(Point(offsets[x] + q.row, q.col) for q in fb)))
            fill_count += 1

    out = make_packing(sum(master.g_list), master.h, k, 3, blocks)
    _require_packing(out, "filling_1 output")
    labels = input_labels or ["master fan"] + ["filler fibre %d" % g for g in sorted(fillers)]
    steps = (("master blocks", master_count), ("filler blocks", fill_count))
    return _finish(labels, steps, out, out.num_base_blocks)


def filling_2(master: FanDesign, filler: CyclicPacking, input_labels=None):
    """Fill the column classes of a strictly regular 0-layer fan design
    with one strictly h-cyclic packing, dilated into the subgroup of
    index v / h.  The full orbit of each dilated block sweeps the
    filler through every column class."""
    _require(master.shape == REGULAR, "filling_2 master must use the regular shape")
    _require(master.s == 0, "filling_2 master must have no layers")
    _require(master.u * master.h >= 4, "group size %d is too small" % (master.u * master.h))
    _require_report(verify_fan(master), "filling_2 master")
    _require_report(verify_regular(master, strict=True), "filling_2 master")
    _require((filler.u, filler.v) == (master.u, master.h),
             "filler must live on %dx%d, got %dx%d"
             % (master.u, master.h, filler.u, filler.v))
    _require((filler.k, filler.t) == (4, 3), "filler must have k=4, t=3")
    _require_packing(filler, "filling_2 filler")

    step = master.v // master.h
    blocks = list(master.terminal)
    for fb in filler.base_blocks:
        blocks.append(tuple(sorted(Point(q.row, q.col * step) for q in fb)))
    out = make_packing(master.u, master.v, 4, 3, blocks)
    _require_packing(out, "filling_2 output")
    labels = input_labels or ["master fan", "filler"]
    steps = (("master blocks", len(master.terminal)),
             ("dilated filler blocks", filler.num_base_blocks))
    return _finish(labels, steps, out, out.num_base_blocks)


def _check_weighting_ingredients(sizes, layer_fans: dict, terminal_h: dict):
    """Common validation; returns (g2, h2, s2) shared by the ingredients."""
    layer_sizes, terminal_sizes = sizes
    shape = None
    for size in sorted(layer_sizes):
        _require(size in layer_fans, "no ingredient fan for layer blocks of size %d" % size)
        fan = layer_fans[size]
        _require(fan.shape == CYCLIC, "ingredient fans must use the cyclic shape")
        _require(len(fan.g_list) == size and len(set(fan.g_list)) == 1,
                 "ingredient fan for size %d must have %d equal groups" % (size, size))
        _require_report(verify_fan(fan), "ingredient fan for size %d" % size)
        _require_report(verify_h_cyclic(fan, strict=True),
                        "ingredient fan for size %d" % size)
        sig = (fan.g_list[0], fan.h, fan.s)
        _require(shape is None or sig == shape,
                 "ingredient fans disagree on (g2, h2, s): %r vs %r" % (sig, shape))
        shape = sig
    for size in sorted(terminal_sizes):
        _require(size in terminal_h, "no ingredient H design for size %d" % size)
        hd = terminal_h[size]
        _require(hd.n == size and hd.t == 3, "H ingredient for size %d has n=%d" % (size, hd.n))
        _require_report(verify_h_design(hd), "H ingredient for size %d" % size)
        sig = (hd.l, hd.h)
        _require(shape is None or sig == (shape[0], shape[1]),
                 "H ingredient (g2, h2) %r disagrees with fans %r" % (sig, shape))
        if shape is None:
            shape = (hd.l, hd.h, 0)
    return shape


def weighting_1(master: FanDesign, layer_fans: dict, terminal_h: dict, input_labels=None):
    """Replace every point of a strictly h1-cyclic one-layer fan design
    by g2 x h2 new points.  Layer blocks are inflated by ingredient fan
    designs, terminal blocks by H designs; ingredient group a is glued
    onto the a-th point of the block in sorted order."""
    _require(master.shape == CYCLIC, "weighting_1 master must use the cyclic shape")
    _require(master.s == 1, "weighting_1 master must have exactly one layer")
    _require(len(set(master.g_list)) == 1, "master groups must share one fibre size")
    _require_report(verify_fan(master), "weighting_1 master")
    _require_report(verify_h_cyclic(master, strict=True), "weighting_1 master")
    g1, h1 = master.g_list[0], master.h
    n = len(master.g_list)

    layer_sizes = {len(b) for b in master.layers[0]}
    terminal_sizes = {len(b) for b in master.terminal}
    g2, h2, s2 = _check_weighting_ingredients((layer_sizes, terminal_sizes),
                                              layer_fans, terminal_h)

    def glue(mblock, iblock):
        out = []
        for a, y2, j2 in iblock:
            x, y, j = mblock[a]
            out.append((x, y + y2 * g1, j + j2 * h1))
        return tuple(sorted(out))

    out_layers = [[] for _ in range(s2)]
    out_terminal = []
    layer_delta = 0
    terminal_delta = 0
    for mb in master.layers[0]:
        fan = layer_fans[len(mb)]
        for idx, fam in enumerate(fan.layers):
            for ib in fam:
                out_layers[idx].append(glue(mb, ib))
                layer_delta += 1
        for ib in fan.terminal:
            out_terminal.append(glue(mb, ib))
            layer_delta += 1
    for mb in master.terminal:
        hd = terminal_h[len(mb)]
        for ib in hd.base_blocks:
            out_terminal.append(glue(mb, ib))
            terminal_delta += 1

    out = FanDesign(s=s2, shape=CYCLIC, h=h1 * h2,
                    layers=tuple(tuple(lay) for lay in out_layers),
                    terminal=tuple(out_terminal),
                    g_list=(g1 * g2,) * n)
    _require_report(verify_fan(out), "weighting_1 output")
    _require_report(verify_h_cyclic(out, strict=True), "weighting_1 output")
    labels = input_labels or ["master fan", "layer ingredients", "terminal ingredients"]
    steps = (("inflated layer blocks", layer_delta),
             ("inflated terminal blocks", terminal_delta))
    count = sum(len(fam) for fam in out.families())
    return _finish(labels, steps, out, count)


def weighting_2(master: FanDesign, layer_fans: dict, terminal_h: dict, input_labels=None):
    """The regular-shape analogue of weighting_1.  The master lives on
    I_g1 x Z_{h1 n}; the output lives on I_{g1 g2} x Z_{h1 h2 n}."""
    _require(master.shape == REGULAR, "weighting_2 master must use the regular shape")
    _require(master.s == 1, "weighting_2 master must have exactly one layer")
    _require_report(verify_fan(master), "weighting_2 master")
    _require_report(verify_regular(master, strict=True), "weighting_2 master")
    g1, h1 = master.u, master.h
    n = master.v // master.h

    layer_sizes = {len(b) for b in master.layers[0]}
    terminal_sizes = {len(b) for b in master.terminal}
    g2, h2, s2 = _check_weighting_ingredients((layer_sizes, terminal_sizes),
                                              layer_fans, terminal_h)

    def glue(mblock, iblock):
        out = []
        for a, y2, j2 in iblock:
            q = mblock[a]
            out.append(Point(q.row + y2 * g1, q.col + j2 * master.v))
        return tuple(sorted(out))

    out_layers = [[] for _ in range(s2)]
    out_terminal = []
    layer_delta = 0
    terminal_delta = 0
    for mb in master.layers[0]:
        fan = layer_fans[len(mb)]
        for idx, fam in enumerate(fan.layers):
            for ib in fam:
                out_layers[idx].append(glue(mb, ib))
                layer_delta += 1
        for ib in fan.terminal:
            out_terminal.append(glue(mb, ib))
            layer_delta += 1
    for mb in master.terminal:
        hd = terminal_h[len(mb)]
        for ib in hd.base_blocks:
            out_terminal.append(glue(mb, ib))
            terminal_delta += 1

    out = FanDesign(s=s2, shape=REGULAR, h=h1 * h2,
                    layers=tuple(tuple(lay) for lay in out_layers),
                    terminal=tuple(out_terminal),
                    u=g1 * g2, v=h1 * h2 * n)
    _require_report(verify_fan(out), "weighting_2 output")
    _require_report(verify_regular(out, strict=True), "weighting_2 output")
    labels = input_labels or ["master fan", "layer ingredients", "terminal ingredients"]
    steps = (("inflated layer blocks", layer_delta),
             ("inflated terminal blocks", terminal_delta))
    count = sum(len(fam) for fam in out.families())
    return _finish(labels, steps, out, count)


def weighting_3(master: HDesign, ingredients: dict, input_labels=None):
    """Inflate every point of an h1-cyclic H design by g2 x h2 points,
    replacing each block by an h2-cyclic H design on its point set."""
    _require_report(verify_h_design(master), "weighting_3 master")
    g1, h1 = master.l, master.h
    sizes = {len(b) for b in master.base_blocks}
    shape = None
    for size in sorted(sizes):
        _require(size in ingredients, "no ingredient for blocks of size %d" % size)
        hd = ingredients[size]
        _require(hd.n == size and hd.t == master.t,
                 "ingredient for size %d has n=%d, t=%d" % (size, hd.n, hd.t))
        _require_report(verify_h_design(hd), "ingredient for size %d" % size)
        sig = (hd.l, hd.h)
        _require(shape is None or sig == shape,
                 "ingredients disagree on (g2, h2): %r vs %r" % (sig, shape))
        shape = sig
    g2, h2 = shape

    def glue(mblock, iblock):
        out = []
        for a, y2, j2 in iblock:
            x, y, j = mblock[a]
            out.append((x, y + y2 * g1, j + j2 * h1))
        return tuple(sorted(out))

    blocks = []
    for mb in master.base_blocks:
        hd = ingredients[len(mb)]
        for ib in hd.base_blocks:
            blocks.append(glue(mb, ib))

    out = HDesign(n=master.n, l=g1 * g2, h=h1 * h2, t=master.t,
                  base_blocks=tuple(blocks))
    _require_report(verify_h_design(out), "weighting_3 output")
    labels = input_labels or ["master H design", "ingredients"]
    steps = (("inflated blocks", len(blocks)),)
    return _finish(labels, steps, out, len(out.base_blocks))


def as_semicyclic(d: HDesign):
    """Reread a plain H design whose groups are I_l as one with
    cyclic groups Z_l, then present it by base blocks under that
    action.  Fails if any block orbit is short."""
    _require(d.h == 1, "input must be a plain H design")
    remapped = [tuple(sorted((x, 0, y) for x, y, _ in b)) for b in d.base_blocks]
    out_h = d.l
    reps = []
    seen: set = set()
    for b in remapped:
        images = [tuple(sorted((x, 0, (j + delta) % out_h) for x, _, j in b))
                  for delta in range(out_h)]
        if len(set(images)) != out_h:
            raise ValueError("block %r has a short orbit" % (b,))
        rep = min(images)
        if rep in seen:
            continue
        seen.add(rep)
        reps.append(rep)
    _require(len(reps) * out_h == len(remapped),
             "orbits do not partition the block set")
    out = HDesign(n=d.n, l=1, h=out_h, t=d.t, base_blocks=tuple(sorted(reps)))
    _require_report(verify_h_design(out), "as_semicyclic output")
    steps = (("orbit representatives", len(reps)),)
    return _finish(["plain H design"], steps, out, len(out.base_blocks))


def fold(code: Code, v1: int, input_label: str = "code"):
    """Trade period for rows: each codeword yields v1 translated
    copies read on the (u * v1) x (v / v1) grid, sending (i, x) to
    (i + u * (x mod v1), x div v1)."""
    _require(v1 >= 1 and code.v % v1 == 0, "v1 must divide v")
    report = verify_ooc(code)
    _require(report.ok, "fold input fails correlation at %r" % (report.witness,))
    u2, v2 = code.u * v1, code.v // v1

    def remap(block):
        return tuple(sorted(Point(q.row + code.u * (q.col % v1), q.col // v1)
                            for q in block))

    mats = []
    for m in code.codewords:
        block = matrix_to_block(m)
        for d in range(v1):
            shifted = shift(block, d, code.v)
            mats.append(block_to_matrix(remap(shifted), u2, v2))
    out = Code(u=u2, v=v2, k=code.k, lam=code.lam, codewords=tuple(mats))
    report = verify_ooc(out)
    _require(report.ok, "fold output fails correlation at %r" % (report.witness,))
    steps = (("translated copies", len(mats)),)
    return _finish([input_label], steps, out, out.size)


def semicyclic_to_vcyclic(d: FanDesign):
    """Reread a two-group fan design over Z_{2v}, v odd, as one over
    I_2 x Z_v, re-extracting base blocks under the smaller action."""
    _require(d.shape == CYCLIC and d.s == 0, "input must be a 0-layer cyclic fan")
    _require(tuple(d.g_list) == (1, 1), "input must have two fibres of size 1")
    _require(d.h % 2 == 0 and (d.h // 2) % 2 == 1, "period must be 2v with v odd")
    _require_report(verify_fan(d), "semicyclic_to_vcyclic input")
    _require_report(verify_h_cyclic(d, strict=False), "semicyclic_to_vcyclic input")
    v = d.h // 2

    full, _, problem = develop_family(d, d.terminal)
    _require(problem is None, "input family problem: %s" % problem)
    remapped = [tuple(sorted((x, i % 2, i // 2) for x, _, i in b)) for b in full]
    reps = []
    seen: set = set()
    for b in remapped:
        images = [tuple(sorted((x, y, (j + delta) % v) for x, y, j in b))
                  for delta in range(v)]
        if len(set(images)) != v:
            raise ValueError("block %r has a short orbit under the new action" % (b,))
        rep = min(images)
        if rep in seen:
            continue
        seen.add(rep)
        reps.append(rep)
    _require(len(reps) * v == len(remapped), "orbits do not partition the block set")

    out = FanDesign(s=0, shape=CYCLIC, h=v, layers=(), terminal=tuple(sorted(reps)),
                    g_list=(2, 2))
    _require_report(verify_fan(out), "semicyclic_to_vcyclic output")
    _require_report(verify_h_cyclic(out, strict=True), "semicyclic_to_vcyclic output")
    steps = (("orbit representatives", len(reps)),)
    count = sum(len(fam) for fam in out.families())
    return _finish(["semicyclic fan"], steps, out, count)


def fan_shift_regular(block, delta: int, v: int):
    return tuple(sorted(Point(q.row, (q.col + delta) % v) for q in block))


def regular_to_h1cyclic(d: FanDesign, h1: int):
    """View a strictly regular fan design over Z_v as a strictly
    h1-cyclic one for any divisor h1 of its h.  Columns split as
    j = i + (a + b * (h / h1)) * (v / h); the point moves to group i,
    fibre row + u * a, cyclic coordinate b."""
    _require(d.shape == REGULAR, "input must use the regular shape")
    _require(h1 >= 1 and d.h % h1 == 0, "h1 must divide h")
    _require_report(verify_fan(d), "regular_to_h1cyclic input")
    _require_report(verify_regular(d, strict=True), "regular_to_h1cyclic input")
    step = d.v // d.h
    ratio = d.h // h1

    def remap(block):
        out = []
        for q in block:
            i, m = q.col % step, q.col // step
            a, b = m % ratio, m // ratio
            out.append((i, q.row + d.u * a, b))
        return tuple(sorted(out))

    new_layers = []
    new_terminal = []
    deltas = []
    for fam in d.families():
        new_fam = []
        for blk in fam:
            for delta in range(d.v // h1):
                new_fam.append(remap(fan_shift_regular(blk, delta, d.v)))
        deltas.append(len(new_fam))
        new_fam = sorted(new_fam)
        if fam is d.terminal:
            new_terminal = new_fam
        else:
            new_layers.append(tuple(new_fam))

    out = FanDesign(s=d.s, shape=CYCLIC, h=h1,
                    layers=tuple(new_layers), terminal=tuple(new_terminal),
                    g_list=(d.u * ratio,) * step)
    _require_report(verify_fan(out), "regular_to_h1cyclic output")
    _require_report(verify_h_cyclic(out, strict=True), "regular_to_h1cyclic output")
    steps = tuple(("family %d representatives" % i, n) for i, n in enumerate(deltas))
    count = sum(len(fam) for fam in out.families())
    return _finish(["regular fan"], steps, out, count)


def add_cross_pairs_layer(d: FanDesign):
    """Turn a 0-layer regular fan design into a 1-layer one by adding
    the orbit representatives of all cross-group point pairs."""
    _require(d.shape == REGULAR and d.s == 0, "input must be a 0-layer regular fan")
    _require_report(verify_fan(d), "add_cross_pairs_layer input")
    _require_report(verify_regular(d, strict=True), "add_cross_pairs_layer input")
    step = d.v // d.h
    pairs = set()
    for p in d.points():
        for q in d.points():
            if p < q and p.col % step != q.col % step:
                pairs.add(canonicalize((p, q), d.v))
    layer = tuple(sorted(pairs))
    out = FanDesign(s=1, shape=REGULAR, h=d.h, layers=(layer,),
                    terminal=d.terminal, u=d.u, v=d.v)
    _require_report(verify_fan(out), "add_cross_pairs_layer output")
    _require_report(verify_regular(out, strict=True), "add_cross_pairs_layer output")
    steps = (("existing terminal blocks", len(d.terminal)),
             ("cross pair representatives", len(layer)))
    count = sum(len(fam) for fam in out.families())
    return _finish(["regular fan"], steps, out, count)


def perfect_to_regular_1fg(p: CyclicPacking):
    """A perfect packing on 2 x v, v = 1 or 5 mod 6, becomes a strictly
    regular one-layer fan design with singleton column groups: the
    packing blocks are the terminal class and the cross-column pair
    orbits form the layer."""
    _require(p.u == 2 and (p.k, p.t) == (4, 3), "input must be a 2 x v packing with k=4")
    _require(p.v % 6 in (1, 5), "need v = 1 or 5 mod 6, got %d" % p.v)
    _require(is_perfect(p), "input packing must be perfect")
    base = FanDesign(s=0, shape=REGULAR, h=1, layers=(), terminal=p.base_blocks,
                     u=p.u, v=p.v)
    out, trace = add_cross_pairs_layer(base)
    expected_pairs = 2 * (p.v - 1)
    got_pairs = len(out.layers[0])
    _require(got_pairs == expected_pairs,
             "expected %d pair orbits, got %d" % (expected_pairs, got_pairs))
    return _finish(["perfect packing"], trace.steps, out,
                   sum(len(fam) for fam in out.families()))


def complete_pair_fan(n: int = 4) -> FanDesign:
    """The trivial one-layer fan design on n singleton groups: all
    pairs form the layer, the whole point set is the terminal block."""
    pts = [(x, 0, 0) for x in range(n)]
    layer = tuple(tuple(sorted(pq)) for pq in combinations(pts, 2))
    return FanDesign(s=1, shape=CYCLIC, h=1, layers=(layer,),
                     terminal=(tuple(pts),), g_list=(1,) * n)
