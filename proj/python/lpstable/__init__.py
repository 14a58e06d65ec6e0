"""Stable-model workbench for ground logic programs."""

from ._core import *  # noqa: F401,F403
from ._core import LpstableError, ParseError, Program, SearchDepthExceeded

__all__ = [
    "LpstableError",
    "ParseError",
    "Program",
    "SearchDepthExceeded",
    "brute_force_answer_sets",
    "brute_force_stable",
    "encode",
    "encoding_size_report",
    "generate",
    "is_answer_set",
    "is_antichain",
    "is_extremal_member",
    "is_stable",
    "max_stable",
    "overline",
    "parse",
    "query",
    "remove_redundant_rules",
    "run_suite",
    "s0",
    "shift",
    "simp",
    "stable_models",
    "suite_names",
    "well_founded",
]
