"""Search for maximum strictly cyclic packings.

Two stages.  A seeded ruin-and-recreate heuristic first tries to grow
a packing to the sharpened counting bound; reaching it is already a
proof of optimality, no tree search needed.  Otherwise the heuristic's
best packing becomes the incumbent for an exhaustive branch and bound:
branch on the lexicographically least t-subset that is neither covered
nor written off, either covering it with one of the candidate block
orbits or pushing it permanently into the leave.  All pruning is
against strictly-better-than-incumbent, so a finished run proves the
incumbent maximal.

The optional row filter insists that solution blocks introduce new
rows in ascending order.  It can speed the tree search up, but whether
it keeps the search complete is checked empirically in the tests,
never assumed; a witness meeting the counting bound is proof either
way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bounds import jstar
from .core import CyclicPacking, Point, make_packing


@dataclass(frozen=True)
class SearchResult:
    max_blocks: int
    witness: CyclicPacking
    proved_optimal: bool
    nodes_explored: int
    budget_exhausted: bool


class _BudgetExhausted(Exception):
    pass


def _build_orbits(u: int, v: int, k: int, t: int) -> list:
    """All orbit representatives whose orbit repeats no t-subset,
    paired with the frozen set of t-subsets the orbit covers."""
    n = u * v
    sh = [p - p % v + (p % v + 1) % v for p in range(n)]
    orbits = []
    seen: set = set()
    for c in combinations(range(n), k):
        block = frozenset(c)
        imgs = [block]
        cur = block
        short = False
        for _ in range(v - 1):
            cur = frozenset(sh[q] for q in cur)
            if cur == block:
                short = True
                break
            imgs.append(cur)
        if short:
            continue
        rep = min(tuple(sorted(img)) for img in imgs)
        if rep in seen:
            continue
        seen.add(rep)
        subs: set = set()
        ok = True
        for img in imgs:
            for sub in combinations(sorted(img), t):
                if sub in subs:
                    ok = False
                    break
                subs.add(sub)
            if not ok:
                break
        if ok:
            orbits.append((rep, frozenset(subs)))
    return orbits


def _ruin_recreate(orbits: list, cap, iterations: int, rng: random.Random) -> list:
    """Grow a packing greedily, then repeatedly drop a few random
    blocks and regrow, keeping the best.  Stops early at cap."""

    def grow(blocks: list, covered: frozenset):
        while True:
            avail = [o for o in orbits if not (o[1] & covered)]
            if not avail:
                return blocks, covered
            pick = avail[rng.randrange(len(avail))]
            blocks.append(pick)
            covered = covered | pick[1]

    cur, covered = grow([], frozenset())
    best = list(cur)
    for _ in range(iterations):
        if cap is not None and len(best) >= cap:
            break
        keep = max(0, len(cur) - rng.randrange(2, 7))
        rng.shuffle(cur)
        cur = cur[:keep]
        covered = frozenset().union(*[o[1] for o in cur]) if cur else frozenset()
        cur, covered = grow(cur, covered)
        if len(cur) > len(best):
            best = list(cur)
    return best


def max_packing(u: int, v: int, k: int, t: int,
                node_budget: int = 100_000_000,
                row_filter: bool = False,
                heuristic_iterations: int = 30_000) -> SearchResult:
    if u < 1 or v < 1:
        raise ValueError("grid dimensions must be positive")
    if not (1 <= t <= k):
        raise ValueError("need 1 <= t <= k")
    if u * v < k:
        raise ValueError("grid has fewer than k points")
    if node_budget < 1:
        raise ValueError("node budget must be positive")

    n = u * v
    per_block = v * comb(k, t)
    all_t = list(combinations(range(n), t))
    total_t = len(all_t)
    cap = jstar(u, v)[0] if (k, t) == (4, 3) else None

    def to_packing(reps) -> CyclicPacking:
        blocks = [tuple(Point(p // v, p % v) for p in b) for b in reps]
        return make_packing(u, v, k, t, blocks)

    orbits = _build_orbits(u, v, k, t)
    incumbent: list = []
    if heuristic_iterations > 0 and orbits and cap != 0:
        rng = random.Random(20210 + 31 * u + v)
        incumbent = _ruin_recreate(orbits, cap, heuristic_iterations, rng)
        if cap is not None and len(incumbent) >= cap:
            return SearchResult(
                max_blocks=len(incumbent),
                witness=to_packing([rep for rep, _ in incumbent]),
                proved_optimal=True,
                nodes_explored=0,
                budget_exhausted=False,
            )

    sh = [p - p % v + (p % v + 1) % v for p in range(n)]

    def orbit_images(block: frozenset) -> list:
        imgs = [block]
        cur = block
        for _ in range(v - 1):
            cur = frozenset(sh[p] for p in cur)
            imgs.append(cur)
        return imgs

    covered: set = set()
    forbidden: set = set()
    cur_blocks: list = []
    rows_used: set = set()
    state = {
        "best": len(incumbent),
        "best_blocks": [rep for rep, _ in incumbent],
        "nodes": 0,
        "done": False,
    }

    def rec(depth: int, start: int) -> None:
        if state["done"]:
            return
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise _BudgetExhausted
        idx = start
        while idx < total_t and (all_t[idx] in covered or all_t[idx] in forbidden):
            idx += 1
        if idx == total_t:
            if depth > state["best"]:
                state["best"] = depth
                state["best_blocks"] = list(cur_blocks)
                if cap is not None and state["best"] >= cap:
                    state["done"] = True
            return
        if cap is not None and state["best"] >= cap:
            state["done"] = True
            return
        remaining = total_t - len(covered) - len(forbidden)
        if depth + remaining // per_block <= state["best"]:
            return

        target = all_t[idx]
        target_set = set(target)
        rest = [p for p in range(n) if p not in target_set]
        seen_orbits: set = set()
        for extra in combinations(rest, k - t):
            block = frozenset(target_set.union(extra))
            imgs = orbit_images(block)
            if any(img == block for img in imgs[1:]):
                continue  # short orbit, not strictly cyclic
            rep = min(tuple(sorted(img)) for img in imgs)
            if rep in seen_orbits:
                continue
            seen_orbits.add(rep)
            subs = []
            subs_seen: set = set()
            ok = True
            for img in imgs:
                for sub in combinations(sorted(img), t):
                    if sub in subs_seen or sub in covered or sub in forbidden:
                        ok = False
                        break
                    subs_seen.add(sub)
                    subs.append(sub)
                if not ok:
                    break
            if not ok:
                continue
            new_rows: list = []
            if row_filter:
                fresh = sorted({p // v for p in block} - rows_used)
                if fresh:
                    unused = sorted(set(range(u)) - rows_used)
                    if fresh != unused[:len(fresh)]:
                        continue
                    new_rows = fresh
            covered.update(subs)
            cur_blocks.append(rep)
            rows_used.update(new_rows)
            rec(depth + 1, idx)
            rows_used.difference_update(new_rows)
            cur_blocks.pop()
            covered.difference_update(subs)
            if state["done"]:
                return

        if len(forbidden) + 1 <= total_t - (state["best"] + 1) * per_block:
            forbidden.add(target)
            rec(depth, idx + 1)
            forbidden.discard(target)

    exhausted = False
    try:
        rec(0, 0)
    except _BudgetExhausted:
        exhausted = True

    proved = (not exhausted) or (cap is not None and state["best"] >= cap)
    return SearchResult(
        max_blocks=state["best"],
        witness=to_packing(state["best_blocks"]),
        proved_optimal=proved,
        nodes_explored=state["nodes"],
        budget_exhausted=exhausted,
    )
