"""Named construction chains.

Each pipeline builds the optimum-size object for one grid out of
catalog ingredients, and is named after the grid it lands on.  The
result is the finished object together with the trace of the last
construction step.
"""

from __future__ import annotations

from functools import lru_cache

from .catalog import catalog_get
from .constructs import (
    add_cross_pairs_layer,
    as_semicyclic,
    complete_pair_fan,
    filling_1,
    filling_2,
    fold,
    hartman,
    trivial_packing,
    weighting_1,
    weighting_2,
    weighting_3,
)
from .correlation import packing_to_code


def _cat(entry_id: str):
    return catalog_get(entry_id).payload


def _grid_2x7():
    """13 codewords on 2x7 from the rotational quadruple system on 8 points."""
    return hartman(_cat("rosqs8"), input_label="catalog rosqs8")


def _grid_14x1():
    """91 codewords on 14x1 by folding the 2x7 optimum to a single column."""
    packing, _ = run_pipeline("2x7")
    return fold(packing_to_code(packing), 7, input_label="pipeline 2x7")


def _grid_4x2():
    """6 codewords on 4x2: fill both fibres of the 4^2 group divisible fan."""
    return filling_1(_cat("fg-4^2-s2c"), {2: trivial_packing(2, 2)},
                     input_labels=["catalog fg-4^2-s2c", "trivial 2x2"])


def _grid_4x3():
    """17 codewords on 4x3: fill both fibres of the 6^2 group divisible fan."""
    return filling_1(_cat("fg-6^2-s3c"), {2: _cat("small-(2,3)")},
                     input_labels=["catalog fg-6^2-s3c", "catalog small-(2,3)"])


def _grid_2x4():
    """3 codewords on 2x4: fill the column classes of the regular 4^2 fan."""
    return filling_2(_cat("fg-(2,2)reg-4^2"), trivial_packing(2, 2),
                     input_labels=["catalog fg-(2,2)reg-4^2", "trivial 2x2"])


def _grid_2x8():
    """17 codewords on 2x8: regular 8^2 fan filled with the 2x4 optimum."""
    filler, _ = run_pipeline("2x4")
    return filling_2(_cat("fg-(2,4)reg-8^2"), filler,
                     input_labels=["catalog fg-(2,4)reg-8^2", "pipeline 2x4"])


def _grid_2x12():
    """41 codewords on 2x12: regular 12^2 fan filled with the 2x6 optimum."""
    return filling_2(_cat("fg-(2,6)reg-12^2"), _cat("small-(2,6)"),
                     input_labels=["catalog fg-(2,6)reg-12^2", "catalog small-(2,6)"])


def _grid_2x15():
    """67 codewords on 2x15: regular 6^5 fan filled with the 2x3 optimum."""
    return filling_2(_cat("fg-(2,3)reg-6^5"), _cat("small-(2,3)"),
                     input_labels=["catalog fg-(2,3)reg-6^5", "catalog small-(2,3)"])


def _grid_3x10():
    """100 codewords on 3x10: regular 6^5 fan filled with the 3x2 optimum."""
    return filling_2(_cat("fg-(3,2)reg-6^5"), _cat("small-(3,2)"),
                     input_labels=["catalog fg-(3,2)reg-6^5", "catalog small-(3,2)"])


def _grid_12x2():
    """248 codewords on 12x2: fill both fibres of the 12^2 group divisible fan."""
    return filling_1(_cat("fg-12^2-s2c"), {6: _cat("small-(6,2)")},
                     input_labels=["catalog fg-12^2-s2c", "catalog small-(6,2)"])


def _h44_plain():
    """Transversal design H(4,4,4,3) with trivial group action, 64 base blocks."""
    seed = _cat("h-4-2-4-3")
    return weighting_3(seed, {4: seed},
                       input_labels=["catalog h-4-2-4-3", "catalog h-4-2-4-3"])


def _h44_2cyc():
    """2-cyclic H(4,4,4,3) with 32 base blocks, via the semicyclic view of the seed."""
    seed = _cat("h-4-2-4-3")
    semi, _ = as_semicyclic(seed)
    return weighting_3(seed, {4: semi},
                       input_labels=["catalog h-4-2-4-3", "semicyclic h-4-2-4-3"])


def _grid_8x2():
    """68 codewords on 8x2.

    Blow up the complete quadruple system on 4 points by weight 4:
    pairs carry the 4^2 group divisible fan, quadruples carry the
    2-cyclic H(4,4,4,3).  The groups of the resulting 4^4 fan are
    2x2 fibres, filled trivially.
    """
    terminal_h, _ = run_pipeline("h44-2cyc")
    fan, _ = weighting_1(complete_pair_fan(4),
                         {2: _cat("fg-4^2-s2c")},
                         {4: terminal_h},
                         input_labels=["complete pair fan on 4 points",
                                       "catalog fg-4^2-s2c",
                                       "pipeline h44-2cyc"])
    return filling_1(fan, {2: trivial_packing(2, 2)},
                     input_labels=["weighted 4^4 fan", "trivial 2x2"])


def _grid_8x4():
    """308 codewords on 8x4.

    Rebuild the regular 4^2 fan with its cross pairs as an explicit
    layer, blow it up by weight 4 (pairs carry the plain 4^2 fan,
    quadruples carry the plain H(4,4,4,3)), then fill the two 16-point
    column classes with the 8x2 optimum.
    """
    layered, _ = add_cross_pairs_layer(_cat("fg-(2,2)reg-4^2"))
    terminal_h, _ = run_pipeline("h44-plain")
    fan, _ = weighting_2(layered,
                         {2: _cat("fan-plain-4^2")},
                         {4: terminal_h},
                         input_labels=["catalog fg-(2,2)reg-4^2 with pair layer",
                                       "catalog fan-plain-4^2",
                                       "pipeline h44-plain"])
    filler, _ = run_pipeline("8x2")
    return filling_2(fan, filler,
                     input_labels=["weighted 16^2 fan", "pipeline 8x2"])


_PIPELINES = {
    "2x4": _grid_2x4,
    "2x7": _grid_2x7,
    "2x8": _grid_2x8,
    "2x12": _grid_2x12,
    "2x15": _grid_2x15,
    "3x10": _grid_3x10,
    "4x2": _grid_4x2,
    "4x3": _grid_4x3,
    "8x2": _grid_8x2,
    "8x4": _grid_8x4,
    "12x2": _grid_12x2,
    "14x1": _grid_14x1,
    "h44-plain": _h44_plain,
    "h44-2cyc": _h44_2cyc,
}


def pipeline_names() -> list:
    return sorted(_PIPELINES)


@lru_cache(maxsize=None)
def run_pipeline(name: str):
    """Run a named chain; returns (object, trace of the final step)."""
    try:
        build = _PIPELINES[name]
    except KeyError:
        raise KeyError("no pipeline %r, have: %s" % (name, ", ".join(pipeline_names())))
    return build()
