"""JSON design files.

One self-describing format for every object kind so constructions can
be chained through the command line.  Coordinates are plain lists,
[row, col] on grids and [x, y, j] for the cyclic shapes; the fixed
point of a rotational system is written -1.
"""

from __future__ import annotations

import json

from .core import Code, CodewordMatrix, CyclicPacking, Point, as_block, make_packing
from .designs import CYCLIC, REGULAR, FanDesign, HDesign, RoSQSDesign

SCHEMA_VERSION = 1


def design_to_dict(obj) -> dict:
    if isinstance(obj, CyclicPacking):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "packing",
            "parameters": {"u": obj.u, "v": obj.v, "k": obj.k, "t": obj.t},
            "base_blocks": [[[q.row, q.col] for q in b] for b in obj.base_blocks],
        }
    if isinstance(obj, FanDesign):
        if obj.shape == CYCLIC:
            params = {"s": obj.s, "shape": obj.shape, "h": obj.h,
                      "g_list": list(obj.g_list), "developed": obj.developed}
            enc = lambda b: [list(p) for p in b]
        else:
            params = {"s": obj.s, "shape": obj.shape, "h": obj.h,
                      "u": obj.u, "v": obj.v, "developed": obj.developed}
            enc = lambda b: [[q.row, q.col] for q in b]
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "fan",
            "parameters": params,
            "layers": [[enc(b) for b in lay] for lay in obj.layers],
            "base_blocks": [enc(b) for b in obj.terminal],
        }
    if isinstance(obj, HDesign):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "hdesign",
            "parameters": {"n": obj.n, "l": obj.l, "h": obj.h, "t": obj.t},
            "base_blocks": [[list(p) for p in b] for b in obj.base_blocks],
        }
    if isinstance(obj, RoSQSDesign):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "rosqs",
            "parameters": {"n": obj.n},
            "base_blocks": [list(b) for b in obj.base_blocks],
        }
    if isinstance(obj, Code):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "code",
            "parameters": {"u": obj.u, "v": obj.v, "k": obj.k, "lambda": obj.lam},
            "codewords": [[list(row) for row in m.bits] for m in obj.codewords],
        }
    raise ValueError("cannot serialize %r" % (type(obj).__name__,))


def design_from_dict(doc: dict):
    if not isinstance(doc, dict):
        raise ValueError("design file must contain a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema_version %r" % (doc.get("schema_version"),))
    kind = doc.get("kind")
    params = doc.get("parameters", {})
    if kind == "packing":
        blocks = [as_block(b) for b in doc["base_blocks"]]
        return make_packing(params["u"], params["v"], params["k"], params["t"], blocks)
    if kind == "fan":
        if params.get("shape") == CYCLIC:
            dec = lambda b: tuple(sorted(tuple(int(c) for c in p) for p in b))
            extra = {"g_list": tuple(params["g_list"])}
        elif params.get("shape") == REGULAR:
            dec = lambda b: tuple(sorted(Point(int(p[0]), int(p[1])) for p in b))
            extra = {"u": params["u"], "v": params["v"]}
        else:
            raise ValueError("unknown fan shape %r" % (params.get("shape"),))
        return FanDesign(s=params["s"], shape=params["shape"], h=params["h"],
                         layers=tuple(tuple(dec(b) for b in lay)
                                      for lay in doc.get("layers", [])),
                         terminal=tuple(dec(b) for b in doc["base_blocks"]),
                         developed=bool(params.get("developed", False)),
                         **extra)
    if kind == "hdesign":
        blocks = tuple(tuple(sorted(tuple(int(c) for c in p) for p in b))
                       for b in doc["base_blocks"])
        return HDesign(n=params["n"], l=params["l"], h=params["h"], t=params["t"],
                       base_blocks=blocks)
    if kind == "rosqs":
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in doc["base_blocks"])
        return RoSQSDesign(n=params["n"], base_blocks=blocks)
    if kind == "code":
        u, v = params["u"], params["v"]
        mats = tuple(CodewordMatrix(u=u, v=v,
                                    bits=tuple(tuple(int(x) for x in row) for row in m))
                     for m in doc["codewords"])
        return Code(u=u, v=v, k=params["k"], lam=params["lambda"], codewords=mats)
    raise ValueError("unknown design kind %r" % (kind,))


def save_design(obj, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(design_to_dict(obj), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_design(path: str):
    with open(path) as fh:
        doc = json.load(fh)
    return design_from_dict(doc)
