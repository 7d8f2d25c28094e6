"""Exact computations in the Zhu algebra of the rank-l Heisenberg orbifold."""

import json
from fractions import Fraction

from . import _core
from ._core import HzhuError, circ, evaluate, independence_rank, is_equiv, star, suite_names, tables

__all__ = [
    "HzhuError",
    "circ",
    "circle_reduction_coefficients",
    "delta_coefficients",
    "evaluate",
    "independence_rank",
    "is_equiv",
    "run_script",
    "run_suite",
    "star",
    "suite_names",
    "tables",
]


def delta_coefficients(degree):
    """c_mn for m, n >= 1, m + n <= degree, as Fractions keyed by (m, n)."""
    return {mn: Fraction(c) for mn, c in _core.delta_coefficients(degree).items()}


def circle_reduction_coefficients():
    return [Fraction(c) for c in _core.circle_reduction_coefficients()]


def run_script(text, rank=2, max_weight=None, slack=None):
    """Runs a relation script; returns the report as a dict."""
    return json.loads(_core.run_script(text, rank, max_weight, slack))


def run_suite(name, rank=2):
    return json.loads(_core.run_suite(name, rank))
