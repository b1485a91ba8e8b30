"""Global Weierstrass models y^2 = x^3 + A(t) x + B(t) over the projective
line: exact invariants, per-place fiber classification (including the place
at infinity), configuration extraction, and quadratic twists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kodaira
from .configuration import Configuration, Fiber
from .kodaira import FiberType, LocalData, euler_number, minimalize
from .ratfunc import (
    INF,
    FactorBasis,
    Place,
    Poly,
    format_poly,
    gcdfree_refine,
    is_squarefree,
    parse_poly,
    valuation,
)


class ZeroDiscriminantError(ValueError):
    """The model is degenerate: 4A^3 + 27B^2 = 0."""


class NoetherError(AssertionError):
    """Euler numbers of a full classification failed to sum to 12k."""


@dataclass(frozen=True)
class WeierstrassModel:
    A: Poly
    B: Poly

    def __post_init__(self):
        if discriminant(self.A, self.B).is_zero:
            raise ZeroDiscriminantError("discriminant vanishes identically")

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({format_poly(self.A)})*x + ({format_poly(self.B)})"


def discriminant(a: Poly, b: Poly) -> Poly:
    return (a ** 3).scale(4) + (b ** 2).scale(27)


@dataclass(frozen=True)
class ModelInvariants:
    """c4, c6, delta and the reduced j-invariant of a model.

    The identity c4^3 - c6^2 = 1728*delta holds exactly; j = c4^3/delta is
    stored in lowest terms with a monic denominator.
    """

    c4: Poly
    c6: Poly
    delta: Poly
    j_num: Poly
    j_den: Poly


def invariants(model: WeierstrassModel) -> ModelInvariants:
    c4 = model.A.scale(-48)
    c6 = model.B.scale(-864)
    delta = discriminant(model.A, model.B).scale(-16)
    if (c4 ** 3 - c6 ** 2) != delta.scale(1728):
        raise AssertionError("c4^3 - c6^2 != 1728*delta")
    num = c4 ** 3
    if num.is_zero:
        j_num, j_den = Poly(), Poly.constant(1)
    else:
        from .ratfunc import poly_gcd, exact_div

        g = poly_gcd(num, delta)
        j_num, j_den = exact_div(num, g), exact_div(delta, g)
        lc = j_den.leading_coefficient()
        j_num, j_den = j_num.scale(1 / lc), j_den.scale(1 / lc)
    return ModelInvariants(c4, c6, delta, j_num, j_den)


def j_is_constant(model: WeierstrassModel) -> tuple[bool, Fraction | None]:
    """Whether j is a constant function, and its value when it is."""
    inv = invariants(model)
    if inv.j_num.is_zero:
        return True, Fraction(0)
    if inv.c6.is_zero:
        return True, Fraction(1728)
    if inv.j_num.degree() == 0 and inv.j_den.degree() == 0:
        return True, inv.j_num.coeffs[0] / inv.j_den.coeffs[0]
    return False, None


def _valuation_or_inf(p: Poly, place: Place) -> int | float:
    return INF if p.is_zero else valuation(p, place)


def _infinity_shift(model: WeierstrassModel) -> int:
    """Minimal k with deg A <= 4k and deg B <= 6k (homogenization weight)."""
    k = 0
    if not model.A.is_zero:
        k = max(k, -(-model.A.degree() // 4))
    if not model.B.is_zero:
        k = max(k, -(-model.B.degree() // 6))
    return k


def local_data_at(model: WeierstrassModel, place: Place) -> LocalData:
    """Minimal valuation triple of the model at a place.

    At infinity the triple is computed from degrees: with
    k = max(ceil(deg A / 4), ceil(deg B / 6)) the valuations are
    4k - deg c4, 6k - deg c6 and 12k - deg delta.
    """
    inv = invariants(model)
    if place.is_infinite:
        k = _infinity_shift(model)
        v4 = INF if inv.c4.is_zero else 4 * k - inv.c4.degree()
        v6 = INF if inv.c6.is_zero else 6 * k - inv.c6.degree()
        vd = 12 * k - inv.delta.degree()
        raw = LocalData(v4, v6, vd)
    else:
        raw = LocalData(
            _valuation_or_inf(inv.c4, place),
            _valuation_or_inf(inv.c6, place),
            int(valuation(inv.delta, place)),
        )
    minimal, _ = minimalize(raw)
    return minimal


@dataclass(frozen=True)
class PlaceReport:
    """Classification of the model at one place of the factor basis."""

    place: Place
    data: LocalData
    fiber: FiberType
    degree: int  # number of geometric points the place carries


def classify_places(model: WeierstrassModel) -> list[PlaceReport]:
    """Per-place classification over a gcd-free basis of delta, c4, c6.

    Finite places come first, ordered by (degree, coefficient sequence),
    which lists linear factors in increasing root order; infinity is last.
    Only places with singular (or potentially non-minimal) local data are
    inspected, and places that minimalize to good reduction are dropped.
    """
    inv = invariants(model)
    polys = [inv.delta]
    for extra in (inv.c4, inv.c6):
        if not extra.is_zero:
            polys.append(extra)
    basis: FactorBasis = gcdfree_refine(polys)
    reports: list[PlaceReport] = []
    for i, factor in enumerate(basis.factors):
        vd = basis.exponent(i, 0)
        if vd == 0:
            continue
        v4 = basis.exponent(i, 1) if not inv.c4.is_zero else INF
        v6_index = 1 + (0 if inv.c4.is_zero else 1)
        v6 = basis.exponent(i, v6_index) if not inv.c6.is_zero else INF
        minimal, _ = minimalize(LocalData(v4, v6, vd))
        fiber = kodaira.classify_local(minimal)
        if fiber.is_smooth:
            continue
        reports.append(PlaceReport(Place.finite(factor), minimal, fiber, factor.degree()))
    data_inf = local_data_at(model, Place.infinity())
    fiber_inf = kodaira.classify_local(data_inf)
    if not fiber_inf.is_smooth:
        reports.append(PlaceReport(Place.infinity(), data_inf, fiber_inf, 1))
    total = sum(euler_number(r.fiber) * r.degree for r in reports)
    if total % 12 != 0:
        raise NoetherError(f"Euler numbers sum to {total}, not a multiple of 12")
    return reports


def classify_model(model: WeierstrassModel) -> Configuration:
    """Configuration of singular fibers of the model (base genus 0).

    A finite place of degree d contributes d fibers of one type, labeled by
    the place.
    """
    fibers = []
    for r in classify_places(model):
        fibers.extend([Fiber(r.place.label(), r.fiber)] * r.degree)
    return Configuration(0, tuple(fibers))


def deg_fundamental(model: WeierstrassModel) -> int:
    """deg L, one twelfth of the total Euler number of the fibration."""
    total = sum(euler_number(r.fiber) * r.degree for r in classify_places(model))
    return total // 12


def quadratic_twist(model: WeierstrassModel, f: Poly) -> WeierstrassModel:
    """Twist by a squarefree f: (A, B) -> (f^2 A, f^3 B).

    Repeated roots of f would have even valuation and therefore would not
    be twist sites at all, so non-squarefree f is rejected.
    """
    if f.is_zero:
        raise ValueError("cannot twist by zero")
    if not is_squarefree(f):
        raise ValueError("twisting polynomial must be squarefree")
    return WeierstrassModel(model.A * f ** 2, model.B * f ** 3)


def base_change_pullback(model: WeierstrassModel, e: int) -> WeierstrassModel:
    """Pull the model back along t -> t^e."""
    if e < 1:
        raise ValueError("pullback exponent must be at least 1")
    te = Poly.variable() ** e
    return WeierstrassModel(model.A.compose(te), model.B.compose(te))


# --------------------------------------------------------------------------
# model file format: two lines "A = <poly>" and "B = <poly>"


class ModelFormatError(ValueError):
    pass


def parse_model(text: str) -> WeierstrassModel:
    parts: dict[str, Poly] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if "=" not in line:
            raise ModelFormatError(f"expected 'A = <poly>' or 'B = <poly>', got {line!r}")
        name, _, rhs = line.partition("=")
        name = name.strip()
        if name not in ("A", "B"):
            raise ModelFormatError(f"unknown model entry {name!r}")
        if name in parts:
            raise ModelFormatError(f"duplicate entry for {name}")
        parts[name] = parse_poly(rhs)
    if set(parts) != {"A", "B"}:
        raise ModelFormatError("model file must define both A and B")
    return WeierstrassModel(parts["A"], parts["B"])


def format_model(model: WeierstrassModel) -> str:
    return f"A = {format_poly(model.A)}\nB = {format_poly(model.B)}\n"


def format_classification(model: WeierstrassModel) -> str:
    """The classification report: one line per place, then the totals."""
    reports = classify_places(model)
    lines = []
    for r in reports:
        lines.append(f"{r.place.label()} : {r.fiber} {r.data}")
    if not reports:
        lines.append("no singular fibers")
    total = sum(euler_number(r.fiber) * r.degree for r in reports)
    lines.append(f"deg L = {total // 12}")
    lines.append(f"sum_euler = {total}")
    return "\n".join(lines) + "\n"
