"""Exact toolkit for singular fibers of elliptic surfaces.

Classifies the fibers of Weierstrass models over the rational function
field, computes extremality and Torelli-type invariants of fiber
configurations, carries out the quadratic-twist and base-change calculus,
and decides realizability of fiber configurations by exhaustive
permutation-monodromy search.
"""

from .configuration import Configuration, Fiber, counts, report
from .kodaira import FiberType, LocalData, parse_fiber_type
from .monodromy import SearchProblem, Witness, search, survey_partitions
from .ratfunc import Place, Poly, parse_poly
from .weierstrass import WeierstrassModel, classify_model, parse_model, quadratic_twist

__all__ = [
    "Configuration",
    "Fiber",
    "FiberType",
    "LocalData",
    "Place",
    "Poly",
    "SearchProblem",
    "WeierstrassModel",
    "Witness",
    "classify_model",
    "counts",
    "parse_fiber_type",
    "parse_model",
    "parse_poly",
    "quadratic_twist",
    "report",
    "search",
    "survey_partitions",
]

__version__ = "0.1.0"
