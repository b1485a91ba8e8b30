"""Catalog of the extremal constant-j families over the projective line.

Each entry is a concrete short Weierstrass model together with the expected
positions and types of its singular fibers.  The free parameters of the
higher-genus families are instantiated at generic rationals (alpha = 2,
beta = 3, gamma = 5), guarded to be pairwise distinct and outside {0, 1};
every statement checked against the catalog is valuation-theoretic and does
not depend on the generic choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weierstrass import WeierstrassModel, parse_model

ALPHA = Fraction(2)
BETA = Fraction(3)
GAMMA = Fraction(5)


def check_generic(*values: Fraction) -> None:
    """Parameters must be pairwise distinct and avoid 0 and 1."""
    seen = set()
    for v in values:
        if v in (0, 1):
            raise ValueError(f"parameter {v} collides with a fixed fiber position")
        if v in seen:
            raise ValueError(f"parameter {v} repeated")
        seen.add(v)


check_generic(ALPHA, BETA, GAMMA)


@dataclass(frozen=True)
class CatalogRow:
    name: str
    a_text: str
    b_text: str
    j_value: str  # "0", "1728" or "other"
    p_g: int
    expected: tuple[tuple[str, str], ...]  # (place label, fiber type text)

    def model(self) -> WeierstrassModel:
        return parse_model(f"A = {self.a_text}\nB = {self.b_text}\n")


def _row(name, a, b, j, p_g, expected):
    return CatalogRow(name, a, b, j, p_g, tuple(expected))


#: All rows of the two constant-j classification tables, plus the
#: two-parameter family with constant j outside {0, 1728} at a = 1.
ROWS: tuple[CatalogRow, ...] = (
    # j = 0: y^2 = x^3 + f(t)
    _row("y^2 = x^3 + t", "0", "t", "0", 0,
         [("0", "II"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^2", "0", "t^2", "0", 0,
         [("0", "IV"), ("inf", "IV*")]),
    _row("y^2 = x^3 + t^3", "0", "t^3", "0", 0,
         [("0", "I0*"), ("inf", "I0*")]),
    _row("y^2 = x^3 + t^5*(t-1)^2", "0", "t^5*(t-1)^2", "0", 1,
         [("0", "II*"), ("1", "IV"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^4*(t-1)^3", "0", "t^4*(t-1)^3", "0", 1,
         [("0", "IV*"), ("1", "I0*"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^4*(t-1)^4", "0", "t^4*(t-1)^4", "0", 1,
         [("0", "IV*"), ("1", "IV*"), ("inf", "IV*")]),
    _row("y^2 = x^3 + t^5*(t-1)^5*(t-2)^3", "0", "t^5*(t-1)^5*(t-2)^3", "0", 2,
         [("0", "II*"), ("1", "II*"), ("2", "I0*"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^5*(t-1)^4*(t-2)^4", "0", "t^5*(t-1)^4*(t-2)^4", "0", 2,
         [("0", "II*"), ("1", "IV*"), ("2", "IV*"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^5*(t-1)^5*(t-2)^5*(t-3)^4",
         "0", "t^5*(t-1)^5*(t-2)^5*(t-3)^4", "0", 3,
         [("0", "II*"), ("1", "II*"), ("2", "II*"), ("3", "IV*"), ("inf", "II*")]),
    _row("y^2 = x^3 + t^5*(t-1)^5*(t-2)^5*(t-3)^5*(t-5)^5",
         "0", "t^5*(t-1)^5*(t-2)^5*(t-3)^5*(t-5)^5", "0", 4,
         [("0", "II*"), ("1", "II*"), ("2", "II*"), ("3", "II*"), ("5", "II*"),
          ("inf", "II*")]),
    # j = 1728: y^2 = x^3 + g(t) x
    _row("y^2 = x^3 + t*x", "t", "0", "1728", 0,
         [("0", "III"), ("inf", "III*")]),
    _row("y^2 = x^3 + t^2*x", "t^2", "0", "1728", 0,
         [("0", "I0*"), ("inf", "I0*")]),
    _row("y^2 = x^3 + t^3*(t-1)^2*x", "t^3*(t-1)^2", "0", "1728", 1,
         [("0", "III*"), ("1", "I0*"), ("inf", "III*")]),
    _row("y^2 = x^3 + t^3*(t-1)^3*(t-2)^3*x", "t^3*(t-1)^3*(t-2)^3", "0", "1728", 2,
         [("0", "III*"), ("1", "III*"), ("2", "III*"), ("inf", "III*")]),
    # constant j outside {0, 1728}: y^2 = x^3 + a t^2 x + t^3 at a = 1
    _row("y^2 = x^3 + t^2*x + t^3", "t^2", "t^3", "other", 0,
         [("0", "I0*"), ("inf", "I0*")]),
)


def rows_with_constant_j(value: str) -> tuple[CatalogRow, ...]:
    return tuple(r for r in ROWS if r.j_value == value)
