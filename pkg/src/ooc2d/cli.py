"""Command line front end.

Subcommands: bound, verify, construct, search, convert, catalog.
Design sources are either file paths or catalog:<id> references.
Exit codes: 0 success, 1 a verification or construction failed,
2 bad usage (unknown name, unreadable file, malformed parameters).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bound_report
from .catalog import catalog_get, catalog_ids
from .constructs import (
    ConstructionTrace,
    add_cross_pairs_layer,
    as_semicyclic,
    complete_pair_fan,
    filling_1,
    filling_2,
    fold,
    hartman,
    perfect_to_regular_1fg,
    regular_to_h1cyclic,
    semicyclic_to_vcyclic,
    weighting_1,
    weighting_2,
    weighting_3,
)
from .core import Code, CyclicPacking
from .correlation import code_to_packing, packing_to_code, verify_ooc
from .designs import (CYCLIC, REGULAR, FanDesign, HDesign, RoSQSDesign,
                      verify_fan, verify_h_cyclic, verify_h_design,
                      verify_regular, verify_rosqs)
from .files import design_to_dict, load_design, save_design
from .packing import is_perfect, verify_packing
from .pipelines import pipeline_names, run_pipeline
from .search import max_packing


class UsageError(Exception):
    pass


def _load_source(source: str):
    if source.startswith("catalog:"):
        try:
            return catalog_get(source[len("catalog:"):]).payload
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
    try:
        return load_design(source)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (source, exc))
    except (ValueError, KeyError) as exc:
        raise UsageError("cannot parse %s: %s" % (source, exc))


def _emit(obj, out, as_json: bool) -> None:
    if out:
        save_design(obj, out)
    elif as_json:
        print(json.dumps(design_to_dict(obj), indent=1, sort_keys=True))


def _kind_name(obj) -> str:
    return design_to_dict(obj)["kind"]


def _object_summary(obj) -> dict:
    doc = design_to_dict(obj)
    summary = {"kind": doc["kind"], "parameters": doc["parameters"]}
    if doc["kind"] == "code":
        summary["count"] = len(doc["codewords"])
    elif doc["kind"] == "fan":
        summary["count"] = sum(len(lay) for lay in doc["layers"]) + len(doc["base_blocks"])
    else:
        summary["count"] = len(doc["base_blocks"])
    return summary


def cmd_bound(args) -> int:
    report = bound_report(args.u, args.v, args.k, args.lam)
    if args.json:
        print(json.dumps(report.__dict__, sort_keys=True))
        return 0
    print("johnson=%d j1=%d/%d lifting_equal=%s"
          % (report.johnson, report.j1_num, report.j1_den, report.lifting_equal))
    if report.jstar is not None:
        print("jstar=%d case=%s perfect_class=%s"
              % (report.jstar, report.jstar_case, report.perfect))
    return 0


def _run_check(obj, check: str, strict: bool):
    """Returns (ok, detail) or raises UsageError on a kind mismatch."""
    if check == "ooc":
        if isinstance(obj, CyclicPacking):
            obj = packing_to_code(obj)
        if not isinstance(obj, Code):
            raise UsageError("check ooc needs a code or packing")
        report = verify_ooc(obj)
        return report.ok, None if report.ok else "correlation %d at %r" % (
            report.worst_value, report.witness)
    if check in ("packing", "perfect"):
        if isinstance(obj, Code):
            obj = code_to_packing(obj)
        if not isinstance(obj, CyclicPacking):
            raise UsageError("check %s needs a packing or code" % check)
        report = verify_packing(obj)
        if not report.valid:
            return False, "covered twice: %r" % (report.violation,)
        if strict and not report.strictly_cyclic:
            return False, "not strictly cyclic"
        if check == "perfect":
            if not report.strictly_cyclic:
                return False, "not strictly cyclic"
            if not is_perfect(obj):
                return False, "leave is nonempty (%d t-subsets)" % report.leave_size
        return True, None
    if check == "fan":
        if not isinstance(obj, FanDesign):
            raise UsageError("check fan needs a fan design")
        report = verify_fan(obj)
        if not report.ok:
            return False, report.detail
        action = verify_h_cyclic if obj.shape == CYCLIC else verify_regular
        report = action(obj, strict=strict)
        return report.ok, report.detail
    if check == "hdesign":
        if not isinstance(obj, HDesign):
            raise UsageError("check hdesign needs an H design")
        report = verify_h_design(obj)
        return report.ok, report.detail
    if check == "rosqs":
        if not isinstance(obj, RoSQSDesign):
            raise UsageError("check rosqs needs a rotational system")
        report = verify_rosqs(obj)
        return report.ok, report.detail
    raise UsageError("unknown check %r" % check)


def cmd_verify(args) -> int:
    obj = _load_source(args.target)
    ok, detail = _run_check(obj, args.check, args.strict)
    if args.json:
        print(json.dumps({"target": args.target, "check": args.check,
                          "ok": ok, "detail": detail}, sort_keys=True))
    elif ok:
        print("ok: %s passes %s" % (args.target, args.check))
    else:
        print("FAIL: %s fails %s: %s" % (args.target, args.check, detail))
    return 0 if ok else 1


def _parse_sized(token: str, label: str):
    size, eq, src = token.partition("=")
    if not eq or not size.isdigit():
        raise UsageError("%s wants SIZE=SOURCE, got %r" % (label, token))
    return int(size), _load_source(src)


def _parse_weighting_args(rest):
    fans = {}
    hs = {}
    for token in rest:
        if token.startswith("fan:"):
            size, obj = _parse_sized(token[4:], "fan ingredient")
            fans[size] = obj
        elif token.startswith("h:"):
            size, obj = _parse_sized(token[2:], "h ingredient")
            hs[size] = obj
        else:
            raise UsageError("weighting wants fan:SIZE=SOURCE or h:SIZE=SOURCE, got %r"
                             % token)
    return fans, hs


def _dispatch_recipe(recipe: str, rest: list):
    if recipe == "hartman":
        if len(rest) != 1:
            raise UsageError("construct hartman SOURCE")
        return hartman(_load_source(rest[0]), input_label=rest[0])
    if recipe == "filling1":
        if len(rest) < 2:
            raise UsageError("construct filling1 MASTER SIZE=SOURCE...")
        fillers = dict(_parse_sized(tok, "filler") for tok in rest[1:])
        return filling_1(_load_source(rest[0]), fillers)
    if recipe == "filling2":
        if len(rest) != 2:
            raise UsageError("construct filling2 MASTER FILLER")
        return filling_2(_load_source(rest[0]), _load_source(rest[1]))
    if recipe in ("weighting1", "weighting2"):
        if len(rest) < 2:
            raise UsageError("construct %s MASTER fan:SIZE=SOURCE... h:SIZE=SOURCE..."
                             % recipe)
        fans, hs = _parse_weighting_args(rest[1:])
        op = weighting_1 if recipe == "weighting1" else weighting_2
        return op(_load_source(rest[0]), fans, hs)
    if recipe == "weighting3":
        if len(rest) < 2:
            raise UsageError("construct weighting3 MASTER SIZE=SOURCE...")
        ingredients = dict(_parse_sized(tok, "ingredient") for tok in rest[1:])
        return weighting_3(_load_source(rest[0]), ingredients)
    if recipe == "fold":
        if len(rest) != 2 or not rest[1].isdigit():
            raise UsageError("construct fold SOURCE V1")
        obj = _load_source(rest[0])
        if isinstance(obj, CyclicPacking):
            obj = packing_to_code(obj)
        if not isinstance(obj, Code):
            raise UsageError("fold needs a code or packing")
        return fold(obj, int(rest[1]), input_label=rest[0])
    if recipe == "remap":
        if len(rest) != 2:
            raise UsageError("construct remap MODE SOURCE")
        mode, obj = rest[0], _load_source(rest[1])
        if mode == "semicyclic":
            return semicyclic_to_vcyclic(obj)
        if mode == "hsemicyclic":
            return as_semicyclic(obj)
        if mode.startswith("h1cyclic:"):
            h1 = mode[len("h1cyclic:"):]
            if not h1.isdigit():
                raise UsageError("remap h1cyclic:<h1> SOURCE")
            return regular_to_h1cyclic(obj, int(h1))
        if mode == "pairs":
            return add_cross_pairs_layer(obj)
        if mode == "perfect1fg":
            return perfect_to_regular_1fg(obj)
        raise UsageError("unknown remap mode %r" % mode)
    if recipe == "pairfan":
        if len(rest) != 1 or not rest[0].isdigit():
            raise UsageError("construct pairfan N")
        fan = complete_pair_fan(int(rest[0]))
        count = sum(len(fam) for fam in fan.families())
        trace = ConstructionTrace(inputs=(), output=fan,
                                  steps=(("pair and quadruple blocks", count),))
        return fan, trace
    if recipe == "pipeline":
        if len(rest) != 1:
            raise UsageError("construct pipeline NAME")
        try:
            return run_pipeline(rest[0])
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
    raise UsageError("unknown recipe %r" % recipe)


def cmd_construct(args) -> int:
    obj, trace = _dispatch_recipe(args.recipe, args.args)
    summary = _object_summary(obj)
    if args.json:
        print(json.dumps({"result": summary,
                          "inputs": list(trace.inputs),
                          "steps": [[label, delta] for label, delta in trace.steps]},
                         sort_keys=True))
    else:
        print("inputs: %s" % "; ".join(trace.inputs))
        for label, delta in trace.steps:
            print("  %-28s %+d" % (label, delta))
        print("result: %s %s, %d blocks"
              % (summary["kind"],
                 " ".join("%s=%s" % kv for kv in sorted(summary["parameters"].items())),
                 summary["count"]))
    _emit(obj, args.out, False)
    return 0


def cmd_search(args) -> int:
    result = max_packing(args.u, args.v, args.k, args.t, node_budget=args.budget)
    if args.json:
        print(json.dumps({"max": result.max_blocks,
                          "proved": result.proved_optimal,
                          "nodes": result.nodes_explored,
                          "budget_exhausted": result.budget_exhausted},
                         sort_keys=True))
    else:
        tag = "proved" if result.proved_optimal else "not proved (budget exhausted)"
        print("max=%d %s nodes=%d" % (result.max_blocks, tag, result.nodes_explored))
    if args.out:
        save_design(result.witness, args.out)
    return 0


def cmd_convert(args) -> int:
    obj = _load_source(args.src)
    if args.to == "matrix":
        if isinstance(obj, CyclicPacking):
            obj = packing_to_code(obj)
        if not isinstance(obj, Code):
            raise UsageError("convert --to matrix needs a packing or code")
    else:
        if isinstance(obj, Code):
            obj = code_to_packing(obj)
        if not isinstance(obj, CyclicPacking):
            raise UsageError("convert --to blocks needs a code or packing")
    if args.out:
        save_design(obj, args.out)
    else:
        print(json.dumps(design_to_dict(obj), indent=1, sort_keys=True))
    return 0


def cmd_catalog(args) -> int:
    if args.what == "list":
        for entry_id in catalog_ids():
            entry = catalog_get(entry_id)
            print("%-22s %-8s %d base blocks"
                  % (entry_id, entry.kind, entry.expected_base_count))
        return 0
    if not args.id:
        raise UsageError("catalog emit needs an id")
    try:
        entry = catalog_get(args.id)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    if args.out:
        save_design(entry.payload, args.out)
    else:
        print(json.dumps(design_to_dict(entry.payload), indent=1, sort_keys=True))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ooc2d")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="counting bounds for one grid")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("verify", help="run one verifier against a design")
    p.add_argument("target")
    p.add_argument("--check", required=True,
                   choices=["ooc", "packing", "perfect", "fan", "hdesign", "rosqs"])
    p.add_argument("--strict", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="run a construction recipe")
    p.add_argument("recipe")
    p.add_argument("args", nargs="*")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("search", help="maximum packing search")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("k", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--budget", type=int, default=100_000_000)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("convert", help="switch between matrix and block form")
    p.add_argument("src")
    p.add_argument("--to", required=True, choices=["matrix", "blocks"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("catalog", help="list shipped designs or emit one")
    p.add_argument("what", choices=["list", "emit"])
    p.add_argument("id", nargs="?")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (TypeError, AttributeError) as exc:
        print("error: wrong design kind for this operation (%s)" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("FAIL: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
