"""Bundled designs transcribed from published listings.

catalog.json stores each design with its original integer labels plus
a declared relabeling rule.  The loader applies the rule, builds the
domain object, and verifies it in full before handing it out, so a
transcription error cannot propagate silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import Point, as_block, make_packing
from .designs import (CYCLIC, REGULAR, FanDesign, HDesign, RoSQSDesign,
                      verify_fan, verify_h_cyclic, verify_h_design,
                      verify_regular, verify_rosqs)
from .packing import verify_packing


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    payload: object
    expected_base_count: int
    declared_action: dict


def _relabel_point(rule: dict, p):
    name = rule["name"]
    if name == "literal":
        return p
    if name == "split-rows":
        v = rule["v"]
        return [p // v, p % v]
    if name == "split-triple":
        g, h = rule["group_size"], rule["h"]
        return [p // g, (p % g) // h, p % h]
    if name == "mod-groups":
        n = rule["n"]
        return [p % n, p // n, 0]
    if name == "group-table":
        for gi, members in enumerate(rule["groups"]):
            if p in members:
                return [gi, members.index(p), 0]
        raise ValueError("element %r missing from group table" % (p,))
    raise ValueError("unknown relabel rule %r" % (name,))


def _relabel_blocks(rule: dict, blocks):
    return [[_relabel_point(rule, p) for p in b] for b in blocks]


def _expand_rows(blocks, u: int):
    """Close a block list under row rotation modulo u."""
    out = []
    for b in blocks:
        for d in range(u):
            out.append([[(r + d) % u, c] for r, c in b])
    return out


def _triples(blocks):
    return tuple(tuple(sorted(tuple(int(c) for c in p) for p in b)) for b in blocks)


def _point_blocks(blocks):
    return tuple(tuple(sorted(Point(int(r), int(c)) for r, c in b)) for b in blocks)


@lru_cache(maxsize=1)
def _raw() -> dict:
    text = resources.files("ooc2d").joinpath("data/catalog.json").read_text()
    data = json.loads(text)
    if data.get("format") != 1:
        raise ValueError("unsupported catalog format %r" % (data.get("format"),))
    return data["entries"]


def catalog_ids() -> list:
    return sorted(_raw())


def _build_payload(entry: dict):
    kind = entry["kind"]
    params = entry["params"]
    source = entry["source"]
    rule = source["relabel"]
    if kind == "packing":
        blocks = _relabel_blocks(rule, source["blocks"])
        return make_packing(params["u"], params["v"], params["k"], params["t"],
                            [as_block(b) for b in blocks])
    if kind == "fan":
        terminal = _relabel_blocks(rule, source["terminal"])
        layers = [_relabel_blocks(rule, lay) for lay in source["layers"]]
        expand = source.get("expand_rows")
        if expand:
            terminal = _expand_rows(terminal, expand)
            layers = [_expand_rows(lay, expand) for lay in layers]
        if "g_list" in params:
            return FanDesign(s=params["s"], shape=CYCLIC, h=params["h"],
                             layers=tuple(_triples(lay) for lay in layers),
                             terminal=_triples(terminal),
                             g_list=tuple(params["g_list"]))
        return FanDesign(s=params["s"], shape=REGULAR, h=params["h"],
                         layers=tuple(_point_blocks(lay) for lay in layers),
                         terminal=_point_blocks(terminal),
                         u=params["u"], v=params["v"])
    if kind == "hdesign":
        blocks = _relabel_blocks(rule, source["blocks"])
        return HDesign(n=params["n"], l=params["l"], h=params["h"], t=params["t"],
                       base_blocks=_triples(blocks))
    if kind == "rosqs":
        blocks = [sorted(int(x) for x in b) for b in source["blocks"]]
        return RoSQSDesign(n=params["n"], base_blocks=tuple(tuple(b) for b in blocks))
    raise ValueError("unknown catalog kind %r" % (kind,))


def _count_base(kind: str, payload) -> int:
    if kind == "packing":
        return payload.num_base_blocks
    if kind == "fan":
        return sum(len(fam) for fam in payload.families())
    return len(payload.base_blocks)


def _verify_payload(entry_id: str, kind: str, payload, action: dict) -> None:
    if kind == "packing":
        report = verify_packing(payload)
        if not report.valid:
            raise ValueError("catalog %s: invalid packing, %r" % (entry_id, report.violation))
        if action.get("strict") and not report.strictly_cyclic:
            raise ValueError("catalog %s: packing is not strictly cyclic" % entry_id)
        return
    if kind == "fan":
        cover = verify_fan(payload)
        if not cover.ok:
            raise ValueError("catalog %s: %s" % (entry_id, cover.detail))
        strict = bool(action.get("strict"))
        if action["form"] == "cyclic":
            act = verify_h_cyclic(payload, strict=strict)
        else:
            act = verify_regular(payload, strict=strict)
        if not act.ok:
            raise ValueError("catalog %s: %s" % (entry_id, act.detail))
        return
    if kind == "hdesign":
        report = verify_h_design(payload)
        if not report.ok:
            raise ValueError("catalog %s: %s" % (entry_id, report.detail))
        return
    if kind == "rosqs":
        report = verify_rosqs(payload)
        if not report.ok:
            raise ValueError("catalog %s: %s" % (entry_id, report.detail))
        return
    raise ValueError("unknown catalog kind %r" % (kind,))


@lru_cache(maxsize=None)
def catalog_get(entry_id: str) -> CatalogEntry:
    entries = _raw()
    if entry_id not in entries:
        raise KeyError("no catalog entry %r, have: %s" % (entry_id, ", ".join(catalog_ids())))
    raw = entries[entry_id]
    payload = _build_payload(raw)
    count = _count_base(raw["kind"], payload)
    if count != raw["expected_base_count"]:
        raise ValueError("catalog %s: %d base blocks, expected %d"
                         % (entry_id, count, raw["expected_base_count"]))
    _verify_payload(entry_id, raw["kind"], payload, raw["action"])
    return CatalogEntry(
        id=entry_id,
        kind=raw["kind"],
        payload=payload,
        expected_base_count=raw["expected_base_count"],
        declared_action=dict(raw["action"]),
    )
