"""Kodaira fiber types and their local calculus.

Covers the classification of a fiber from the valuation triple
(v(c4), v(c6), v(delta)) at a place, the numeric attributes of each type
(Euler number, component count), the quadratic-twist involution, and the
transport of a fiber type through a ramified base change.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ratfunc import INF


class ClassificationError(ValueError):
    """A valuation triple that no Weierstrass model can produce."""


_STARRED = {"I*", "II*", "III*", "IV*"}
_KINDS = ("I", "I*", "II", "III", "IV", "IV*", "III*", "II*")


@dataclass(frozen=True, order=True)
class FiberType:
    """One Kodaira type; ``nu`` is meaningful only for I and I*.

    ``FiberType("I", 0)`` denotes a smooth fiber and is the only
    non-singular value.
    """

    kind: str
    nu: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown fiber kind {self.kind!r}")
        if self.kind in ("I", "I*"):
            if self.nu < 0:
                raise ValueError("fiber index must be nonnegative")
        elif self.nu != 0:
            raise ValueError(f"type {self.kind} carries no index")

    @staticmethod
    def I(nu: int) -> "FiberType":  # noqa: E743  (the Kodaira symbol)
        return FiberType("I", nu)

    @staticmethod
    def I_star(nu: int) -> "FiberType":
        return FiberType("I*", nu)

    @property
    def is_smooth(self) -> bool:
        return self.kind == "I" and self.nu == 0

    @property
    def is_starred(self) -> bool:
        return self.kind in _STARRED

    def __str__(self) -> str:
        if self.kind == "I":
            return f"I{self.nu}"
        if self.kind == "I*":
            return f"I{self.nu}*"
        return self.kind


I0 = FiberType.I(0)
II = FiberType("II")
III = FiberType("III")
IV = FiberType("IV")
IV_STAR = FiberType("IV*")
III_STAR = FiberType("III*")
II_STAR = FiberType("II*")

_FIBER_RE = re.compile(r"^I(\d+)(\*?)$")


def parse_fiber_type(text: str) -> FiberType:
    """Inverse of ``str(fiber)``; the round trip is bit-exact."""
    s = text.strip()
    if s in ("II", "III", "IV", "IV*", "III*", "II*"):
        return FiberType(s)
    m = _FIBER_RE.match(s)
    if m:
        return FiberType("I*" if m.group(2) else "I", int(m.group(1)))
    raise ValueError(f"unknown fiber type {text!r}")


@dataclass(frozen=True)
class LocalData:
    """Valuations of (c4, c6, delta) at one place.

    ``v_c4`` and ``v_c6`` may be INF (the polynomial is identically zero);
    ``v_delta`` is always a nonnegative integer because the discriminant of
    a valid model is nonzero.
    """

    v_c4: int | float
    v_c6: int | float
    v_delta: int

    def __post_init__(self):
        for v in (self.v_c4, self.v_c6):
            if v != INF and (not isinstance(v, int) or v < 0):
                raise ValueError("valuations must be nonnegative integers or INF")
        if not isinstance(self.v_delta, int) or self.v_delta < 0:
            raise ValueError("v_delta must be a nonnegative integer")
        if self.v_c4 == INF and self.v_c6 == INF:
            raise ValueError("c4 and c6 cannot both vanish identically")
        # c4^3 - c6^2 = 1728*delta constrains the triple ultrametrically
        a, b = 3 * self.v_c4, 2 * self.v_c6
        if a != b and self.v_delta < min(a, b):
            raise ValueError(
                f"inconsistent triple ({self.v_c4}, {self.v_c6}, {self.v_delta}): "
                f"v_delta below min(3*v_c4, 2*v_c6)"
            )

    def is_minimal(self) -> bool:
        return _shift(self) == 0

    def __str__(self) -> str:
        def fmt(v):
            return "inf" if v == INF else str(v)

        return f"({fmt(self.v_c4)}, {fmt(self.v_c6)}, {fmt(self.v_delta)})"


def _shift(data: LocalData) -> int:
    """Largest k with (v_c4, v_c6, v_delta) - k*(4, 6, 12) all nonnegative;
    infinite entries are absorbing (they never constrain k)."""
    candidates = [data.v_delta // 12]
    if data.v_c4 != INF:
        candidates.append(data.v_c4 // 4)
    if data.v_c6 != INF:
        candidates.append(data.v_c6 // 6)
    return min(candidates)


def minimalize(data: LocalData) -> tuple[LocalData, int]:
    """Strip the largest (4, 6, 12)-multiple keeping all entries >= 0."""
    k = _shift(data)
    if k == 0:
        return data, 0
    shifted = LocalData(
        data.v_c4 - 4 * k if data.v_c4 != INF else INF,
        data.v_c6 - 6 * k if data.v_c6 != INF else INF,
        data.v_delta - 12 * k,
    )
    return shifted, k


def classify_local(data: LocalData) -> FiberType:
    """Kodaira type of a minimal valuation triple (characteristic zero).

    Raises :class:`ClassificationError` on triples that cannot occur for a
    minimal Weierstrass model, instead of guessing.
    """
    if not data.is_minimal():
        raise ClassificationError(f"triple {data} is not minimal")
    v4, v6, vd = data.v_c4, data.v_c6, data.v_delta
    if vd == 0:
        return I0
    if v4 == 0:
        return FiberType.I(vd)
    # additive reduction from here on
    if vd == 2:
        return II
    if vd == 3:
        return III
    if vd == 4:
        return IV
    if vd == 6:
        if v4 >= 2 and v6 >= 3:
            return FiberType.I_star(0)
        raise ClassificationError(f"triple {data} matches no Kodaira type")
    if v4 == 2 and v6 == 3 and vd > 6:
        return FiberType.I_star(vd - 6)
    if vd == 8 and v4 >= 3 and v6 == 4:
        return IV_STAR
    if vd == 9 and v4 == 3 and v6 >= 5:
        return III_STAR
    if vd == 10 and v4 >= 4 and v6 == 5:
        return II_STAR
    raise ClassificationError(f"triple {data} matches no Kodaira type")


def euler_number(fiber: FiberType) -> int:
    """Topological Euler characteristic, i.e. v(minimal discriminant)."""
    if fiber.kind == "I":
        return fiber.nu
    if fiber.kind == "I*":
        return 6 + fiber.nu
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[fiber.kind]


def lattice_contribution(fiber: FiberType) -> int:
    """Components minus one: the rank the fiber adds to the trivial lattice."""
    if fiber.kind == "I":
        return max(fiber.nu - 1, 0)
    if fiber.kind == "I*":
        return fiber.nu + 4
    return {"II": 0, "III": 1, "IV": 2, "IV*": 6, "III*": 7, "II*": 8}[fiber.kind]


_TWIST = {"II": "IV*", "IV*": "II", "III": "III*", "III*": "III", "IV": "II*", "II*": "IV"}


def twist_type(fiber: FiberType) -> FiberType:
    """Quadratic-twist involution: I_nu <-> I_nu*, II <-> IV*, III <-> III*,
    IV <-> II*."""
    if fiber.kind == "I":
        return FiberType.I_star(fiber.nu)
    if fiber.kind == "I*":
        return FiberType.I(fiber.nu)
    return FiberType(_TWIST[fiber.kind])


def reference_triple(fiber: FiberType) -> LocalData:
    """A minimal valuation triple producing the fiber type.

    Additive types take the triple of the family that pins their free
    valuation exactly: v(c6) is exact for II, IV, IV*, II* (c4 = 0
    identically), v(c4) is exact for III, III* (c6 = 0), and I_nu* takes
    (2, 3, 6 + nu).  These choices are validated against concrete models
    under pullback, which is what they exist for.
    """
    if fiber.kind == "I":
        return LocalData(0, 0, fiber.nu)
    if fiber.kind == "I*":
        return LocalData(2, 3, 6 + fiber.nu)
    v6 = {"II": 1, "IV": 2, "IV*": 4, "II*": 5}
    if fiber.kind in v6:
        return LocalData(INF, v6[fiber.kind], 2 * v6[fiber.kind])
    v4 = {"III": 1, "III*": 3}[fiber.kind]
    return LocalData(v4, INF, 3 * v4)


def base_change_type(fiber: FiberType, e: int) -> FiberType:
    """Fiber type after a base change with local ramification index ``e``."""
    if e < 1:
        raise ValueError("ramification index must be at least 1")
    if e == 1:
        return fiber
    ref = reference_triple(fiber)
    scaled = LocalData(
        ref.v_c4 * e if ref.v_c4 != INF else INF,
        ref.v_c6 * e if ref.v_c6 != INF else INF,
        ref.v_delta * e,
    )
    minimal, _ = minimalize(scaled)
    return classify_local(minimal)


def all_fiber_types(max_euler: int) -> list[FiberType]:
    """Every singular fiber type with Euler number at most ``max_euler``."""
    types = [FiberType.I(n) for n in range(1, max_euler + 1)]
    types += [FiberType.I_star(n) for n in range(0, max_euler - 5)]
    types += [f for f in (II, III, IV, IV_STAR, III_STAR, II_STAR)
              if euler_number(f) <= max_euler]
    return types
