"""Exact variation-of-GIT computations for diagonal torus actions.

Blocks are ``(weight, dim)`` pairs, supports are 1-based index lists, and
rationals are :class:`fractions.Fraction` (ints and ``"p/q"`` strings are
accepted wherever a rational is expected).
"""

import json
import os

from ._core import (
    ParseError,
    chamber_count,
    chamber_of,
    chamber_scan_check,
    commuting_principle_check,
    flipsex_notion_counts,
    is_polystable,
    is_semistable,
    parse_rational,
    realize_bidegree,
    residual_slope_range,
    semistable_by_invariant_oracle,
    semistable_supports,
    torus_polystable,
    torus_semistable,
    two_block_polarization,
    u_set,
)
from . import _core

__all__ = [
    "ParseError",
    "analyze",
    "bb",
    "bb_dot",
    "chamber_count",
    "chamber_of",
    "chamber_scan_check",
    "chambers",
    "commuting_principle_check",
    "example",
    "flips",
    "flipsex_notion_counts",
    "is_polystable",
    "is_semistable",
    "parse_rational",
    "product_check",
    "quotient",
    "realize_bidegree",
    "residual_slope_range",
    "semistable_by_invariant_oracle",
    "semistable_supports",
    "torus_polystable",
    "torus_semistable",
    "two_block_polarization",
    "u_set",
]


def chambers(blocks):
    return json.loads(_core._chambers_report(blocks))


def bb(blocks):
    return json.loads(_core._bb_report(blocks))


def bb_dot(blocks):
    return _core._bb_dot(blocks)


def flips(blocks):
    return json.loads(_core._flips_report(blocks))


def quotient(blocks, slope=None):
    return json.loads(_core._quotient_report(blocks, slope))


def example(name, d1=0, d2=1):
    return json.loads(_core._example_report(name, d1, d2))


def product_check(grid="", seed=None):
    """Grid check of the two-step principle; seed defaults to $VGIT_SEED or 0."""
    if seed is None:
        seed = int(os.environ.get("VGIT_SEED", "0"))
    return json.loads(_core._product_check(grid, seed))


def analyze(document):
    """Chamber report for a cstar input, stability report for a torus input.

    ``document`` is the JSON input format of the command-line tool, as text or
    as an already-decoded object.
    """
    if not isinstance(document, str):
        document = json.dumps(document)
    return json.loads(_core._analyze(document))
