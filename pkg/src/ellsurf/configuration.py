"""Configuration-level calculus for elliptic fibrations.

A configuration is a base-curve genus plus a finite labeled multiset of
singular fiber types.  Everything a fibration's fingerprint determines is
computed here: deg L, Hodge-theoretic counts, extremality verdicts, the
quadratic-twist calculus (including *-minimal and minimal-delta twists),
ramified base change, the ramification bookkeeping of the functional
invariant, Torelli verdicts, and single-fiber genus bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import kodaira
from .kodaira import FiberType, euler_number, twist_type


class NoetherError(ValueError):
    """Euler numbers of a configuration do not sum to a multiple of 12."""


@dataclass(frozen=True, order=True)
class Fiber:
    label: str
    type: FiberType

    def __str__(self) -> str:
        return f"{self.label} : {self.type}"


def _canonical(fibers: Iterable[Fiber]) -> tuple[Fiber, ...]:
    return tuple(sorted(fibers, key=lambda f: (f.label, str(f.type))))


@dataclass(frozen=True)
class Configuration:
    """Genus of the base curve plus the multiset of singular fibers.

    Smooth fibers are never stored; the Euler numbers must sum to a
    multiple of 12 or the value is rejected outright.
    """

    genus: int
    fibers: tuple[Fiber, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        for f in self.fibers:
            if f.type.is_smooth:
                raise ValueError("smooth fibers are not stored in a configuration")
        total = sum(euler_number(f.type) for f in self.fibers)
        if total % 12 != 0:
            raise NoetherError(f"Euler numbers sum to {total}, not a multiple of 12")
        object.__setattr__(self, "fibers", _canonical(self.fibers))

    @staticmethod
    def of(genus: int, fibers: Iterable[tuple[str, FiberType]]) -> "Configuration":
        return Configuration(genus, tuple(Fiber(lbl, ft) for lbl, ft in fibers))

    def euler_total(self) -> int:
        return sum(euler_number(f.type) for f in self.fibers)

    def deg_L(self) -> int:
        return self.euler_total() // 12

    def labels(self) -> list[str]:
        return [f.label for f in self.fibers]

    def types(self) -> list[FiberType]:
        return [f.type for f in self.fibers]

    def __str__(self) -> str:
        return format_configuration(self)


class Counts(NamedTuple):
    """Fiber counts (a, b, c, d, e) by reduction class."""

    a: int  # II*, III*, IV*
    b: int  # II, III, IV
    c: int  # I0*
    d: int  # I_nu*, nu > 0
    e: int  # I_nu, nu > 0


def counts(config: Configuration) -> Counts:
    a = b = c = d = e = 0
    for f in config.fibers:
        k, nu = f.type.kind, f.type.nu
        if k in ("II*", "III*", "IV*"):
            a += 1
        elif k in ("II", "III", "IV"):
            b += 1
        elif k == "I*":
            if nu == 0:
                c += 1
            else:
                d += 1
        elif k == "I" and nu > 0:
            e += 1
    return Counts(a, b, c, d, e)


@dataclass(frozen=True)
class InvariantReport:
    deg_L: int
    p_g: int
    h11: int
    rho_tr: int
    counts: Counts
    delta: int  # h11 - rho_tr


def report(config: Configuration) -> InvariantReport:
    """Numeric invariants of the configuration.

    delta is computed both as h11 - rho_tr and by the closed form
    2(a+b+c+d) + e - 2 deg L - 2 + 2g; the two must agree.
    """
    cnt = counts(config)
    deg_l = config.deg_L()
    g = config.genus
    p_g = deg_l - 1 + g
    h11 = 10 * deg_l + 2 * g
    rho_tr = 2 + 12 * deg_l - 2 * (cnt.a + cnt.b + cnt.c + cnt.d) - cnt.e
    delta = h11 - rho_tr
    closed = 2 * (cnt.a + cnt.b + cnt.c + cnt.d) + cnt.e - 2 * deg_l - 2 + 2 * g
    if delta != closed:
        raise AssertionError("delta closed form disagrees with definition")
    return InvariantReport(deg_l, p_g, h11, rho_tr, cnt, delta)


# --------------------------------------------------------------------------
# extremality


EXTREMAL = "extremal"
NOT_EXTREMAL = "not-extremal"
OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class ExtremalVerdict:
    status: str  # EXTREMAL | NOT_EXTREMAL | OUT_OF_SCOPE
    note: str = ""

    def __str__(self) -> str:
        return f"{self.status} ({self.note})" if self.note else self.status


_J0_KINDS = {"II", "IV", "IV*", "II*"}
_J1728_KINDS = {"III", "III*"}


def is_extremal(config: Configuration, j_constant: bool) -> ExtremalVerdict:
    """Extremality of a fibration with this configuration.

    With constant j the criterion is the fiber count deg L + 1 - g (with
    deg L = 0 handled as out of scope: those surfaces are products or
    hyperelliptic and the Mordell-Weil side of extremality is invisible to
    the configuration).  With non-constant j the criterion is
    b = c = 0 together with delta = 0.
    """
    cnt = counts(config)
    rep = report(config)
    if j_constant:
        if cnt.d + cnt.e > 0:
            return ExtremalVerdict(
                OUT_OF_SCOPE, "fibers of type I_nu or I_nu* force a non-constant j"
            )
        kinds = {f.type.kind for f in config.fibers}
        if kinds & _J0_KINDS and kinds & _J1728_KINDS:
            return ExtremalVerdict(
                OUT_OF_SCOPE, "fiber types would force two different constant j-values"
            )
        if rep.deg_L == 0:
            if config.genus == 1:
                return ExtremalVerdict(OUT_OF_SCOPE, "hyperelliptic")
            return ExtremalVerdict(OUT_OF_SCOPE, "product, not extremal")
        if config.genus > 1:
            return ExtremalVerdict(NOT_EXTREMAL, "constant j needs genus <= 1")
        if config.genus == 1:
            return ExtremalVerdict(NOT_EXTREMAL, "genus 1 with constant j needs deg L = 0")
        bound = 3 if kinds & _J1728_KINDS else 5
        if rep.deg_L > bound:
            return ExtremalVerdict(NOT_EXTREMAL, f"deg L exceeds the constant-j bound {bound}")
        if len(config.fibers) == rep.deg_L + 1 - config.genus:
            return ExtremalVerdict(EXTREMAL)
        return ExtremalVerdict(NOT_EXTREMAL, "wrong number of singular fibers")
    if cnt.d + cnt.e == 0:
        return ExtremalVerdict(
            OUT_OF_SCOPE, "no fiber maps to j = infinity, so j is constant"
        )
    if cnt.b == 0 and cnt.c == 0 and rep.delta == 0:
        return ExtremalVerdict(EXTREMAL)
    return ExtremalVerdict(NOT_EXTREMAL)


# --------------------------------------------------------------------------
# twisting


def _twist_contribution(fiber: FiberType | None) -> int:
    """Change of delta caused by twisting at one point (None = smooth)."""
    if fiber is None or fiber.is_smooth:
        return 1
    k, nu = fiber.kind, fiber.nu
    if k in ("IV*", "III*", "II*"):
        return 1
    if k in ("II", "III", "IV"):
        return -1
    if k == "I*" and nu == 0:
        return -1
    return 0  # I_nu or I_nu*, nu > 0


def twist(config: Configuration, sites: Sequence[str]) -> tuple[Configuration, int]:
    """Twist at an even number of points, given by label.

    A site label carried by a fiber toggles that fiber through the
    quadratic-twist involution; a label not present in the configuration is
    a smooth point and acquires an I0* fiber.  Returns the new
    configuration and the predicted change of delta, which is also asserted
    against the recomputed reports.
    """
    if len(sites) % 2 != 0:
        raise ValueError("twists happen at an even number of points")
    available: dict[str, list[Fiber]] = {}
    for f in config.fibers:
        available.setdefault(f.label, []).append(f)
    from collections import Counter

    change = 0
    new_fibers: list[Fiber] = []
    site_counts = Counter(sites)
    for label, mult in site_counts.items():
        stack = available.get(label, [])
        if not stack:
            if mult > 1:
                raise ValueError(f"smooth site {label!r} used more than once")
            change += _twist_contribution(None)
            new_fibers.append(Fiber(label, FiberType.I_star(0)))
            continue
        if mult > len(stack):
            raise ValueError(f"site {label!r} has only {len(stack)} fiber(s)")
        for f in stack[:mult]:
            change += _twist_contribution(f.type)
            twisted = twist_type(f.type)
            if not twisted.is_smooth:
                new_fibers.append(Fiber(label, twisted))
        new_fibers.extend(stack[mult:])
    for label, stack in available.items():
        if label not in site_counts:
            new_fibers.extend(stack)
    result = Configuration(config.genus, tuple(new_fibers))
    if report(result).delta != report(config).delta + change:
        raise AssertionError("twist contribution table disagrees with reports")
    return result, change


def _fresh_label(config: Configuration, prefix: str = "s") -> str:
    used = set(config.labels())
    i = 1
    while f"{prefix}{i}" in used:
        i += 1
    return f"{prefix}{i}"


def star_minimal_twist(config: Configuration) -> Configuration:
    """The twist with no starred fibers except at most one I0*.

    Twists at every I_nu*, II*, III*, IV* fiber; an odd site count is
    completed by one fresh smooth point, which carries the single allowed
    I0* of the result.  This is the deg-L-minimal member of the twist
    orbit.
    """
    sites = [f.label for f in config.fibers if f.type.is_starred]
    if not sites:
        return config
    if len(sites) % 2 != 0:
        sites.append(_fresh_label(config))
    return twist(config, sites)[0]


def is_star_minimal(config: Configuration) -> bool:
    cnt = counts(config)
    return cnt.a == 0 and cnt.d == 0 and cnt.c <= 1


class ConstantJError(ValueError):
    """Operation needs a non-constant functional invariant."""


class NonJacobianConfigError(ValueError):
    """The twist orbit reaches negative delta: no Jacobian surface fits."""


def minimal_delta_twist(config: Configuration) -> Configuration:
    """The twist minimizing delta = h11 - rho_tr; it has b = c = 0.

    Recipe: pass to the *-minimal twist, then twist at every II, III, IV
    and I0* fiber, fixing an odd site count with one I_nu fiber (smallest
    index, then smallest label).  Configurations without I_nu or I_nu*
    fibers have constant j and are rejected.  If the minimum comes out
    with delta < 0 the input was not the configuration of any Jacobian
    elliptic surface, and that is reported as an error rather than
    returned.
    """
    cnt = counts(config)
    if cnt.d + cnt.e == 0:
        raise ConstantJError("minimal-delta twisting needs a non-constant j")
    if cnt.b == 0 and cnt.c == 0:
        return config
    base = star_minimal_twist(config)
    sites = [f.label for f in base.fibers
             if f.type.kind in ("II", "III", "IV")
             or (f.type.kind == "I*" and f.type.nu == 0)]
    if len(sites) % 2 != 0:
        mult = sorted(
            (f for f in base.fibers if f.type.kind == "I" and f.type.nu > 0),
            key=lambda f: (f.type.nu, f.label),
        )
        # e > 0 after *-minimalization whenever d + e > 0 before
        sites.append(mult[0].label)
    result = twist(base, sites)[0]
    if report(result).delta < 0:
        raise NonJacobianConfigError(
            "minimal twist has negative delta; no Jacobian elliptic surface "
            "realizes this configuration"
        )
    return result


# --------------------------------------------------------------------------
# base change


def base_change(
    config: Configuration,
    degree: int,
    profile: Mapping[str, Sequence[int]],
    cover_genus: int | None = None,
) -> Configuration:
    """Configuration pulled back along a degree-n cover of the base.

    ``profile`` maps a place label to the multiset of local ramification
    indices above it (summing to the degree); unnamed places are
    unramified.  Labels without a fiber may appear: ramification over a
    smooth point affects only the genus.  The genus of the covering curve
    comes from the Hurwitz formula; pass ``cover_genus`` to cross-check it.
    """
    if degree < 1:
        raise ValueError("cover degree must be at least 1")
    ramification = 0
    for label, indices in profile.items():
        if not indices or any(e < 1 for e in indices):
            raise ValueError(f"bad ramification indices over {label!r}")
        if sum(indices) != degree:
            raise ValueError(
                f"indices over {label!r} sum to {sum(indices)}, not {degree}"
            )
        ramification += sum(e - 1 for e in indices)
    two_minus_2g = degree * (2 - 2 * config.genus) - ramification
    if two_minus_2g % 2 != 0:
        raise ValueError("ramification profile violates the Hurwitz parity")
    new_genus = (2 - two_minus_2g) // 2
    if new_genus < 0:
        raise ValueError("ramification profile forces negative genus")
    if cover_genus is not None and cover_genus != new_genus:
        raise ValueError(f"profile gives genus {new_genus}, not {cover_genus}")

    new_fibers: list[Fiber] = []
    for f in config.fibers:
        indices = profile.get(f.label)
        if indices is None:
            indices = [1] * degree
        for i, e in enumerate(indices):
            new_type = kodaira.base_change_type(f.type, e)
            if new_type.is_smooth:
                continue
            label = f.label if len(indices) == 1 else f"{f.label}.{i + 1}"
            new_fibers.append(Fiber(label, new_type))
    return Configuration(new_genus, tuple(new_fibers))


# --------------------------------------------------------------------------
# ramification accounting for the functional invariant


@dataclass(frozen=True)
class RamificationProfile:
    """Candidate ramification of j over 0, 1728 and infinity.

    Indices over 0 are pinned to 1 mod 3 by II fibers and 2 mod 3 by IV
    fibers, over 1728 to 1 mod 2 by III fibers; the remaining degree is
    filled by free points of index exactly 3 (resp. 2).  Over infinity the
    indices are the orders of the I_nu fibers.  A negative free budget
    means no such j-map exists.
    """

    degree: int
    over0: tuple[int, ...]
    over1728: tuple[int, ...]
    over_inf: tuple[int, ...]
    free0: int
    free1728: int

    @property
    def feasible(self) -> bool:
        return self.free0 >= 0 and self.free1728 >= 0 and self.degree > 0


@dataclass(frozen=True)
class RamificationVerdict:
    profile: RamificationProfile
    num_fibers: int
    expected_fibers: int  # 2 deg L + 2 - 2g

    @property
    def tight(self) -> bool:
        """Whether the count matches, i.e. j is a (3,2)-type map with no
        ramification outside 0, 1728 and infinity."""
        return self.num_fibers == self.expected_fibers and self.profile.feasible


def ramification_accounting(config: Configuration) -> RamificationVerdict:
    """Three-point ramification bookkeeping for a *-minimal configuration.

    Requires a *-minimal configuration with non-constant j (some I_nu
    fiber).  The fiber count equals 2 deg L + 2 - 2g exactly when j is of
    (3,2)-type and unramified outside the three special values.
    """
    if not is_star_minimal(config):
        raise ValueError("ramification accounting needs a *-minimal configuration")
    cnt = counts(config)
    if cnt.e == 0:
        raise ConstantJError("ramification accounting needs a non-constant j")
    n2 = sum(1 for f in config.fibers if f.type.kind == "II")
    n3 = sum(1 for f in config.fibers if f.type.kind == "III")
    n4 = sum(1 for f in config.fibers if f.type.kind == "IV")
    orders = sorted(
        (f.type.nu for f in config.fibers if f.type.kind == "I" and f.type.nu > 0),
        reverse=True,
    )
    r = sum(orders)
    rem0 = r - n2 - 2 * n4
    rem1728 = r - n3
    free0 = rem0 // 3 if rem0 >= 0 and rem0 % 3 == 0 else -1
    free1728 = rem1728 // 2 if rem1728 >= 0 and rem1728 % 2 == 0 else -1
    over0 = tuple(sorted([1] * n2 + [2] * n4 + [3] * max(free0, 0), reverse=True))
    over1728 = tuple(sorted([1] * n3 + [2] * max(free1728, 0), reverse=True))
    profile = RamificationProfile(r, over0, over1728, tuple(orders), free0, free1728)
    expected = 2 * config.deg_L() + 2 - 2 * config.genus
    return RamificationVerdict(profile, len(config.fibers), expected)


# --------------------------------------------------------------------------
# Torelli and dimension bounds


TORELLI_FAILS = "fails-infinitesimal-Torelli"
TORELLI_SATISFIES = "satisfies-infinitesimal-Torelli"
TORELLI_OUT_OF_SCOPE = "out-of-scope"


def torelli_verdict(p_g: int, j_constant: bool, extremal: bool) -> str:
    """Infinitesimal Torelli for a fibration over the projective line.

    For p_g > 1 the period map differential is non-injective exactly when
    j is constant and the fibration is extremal.  For p_g <= 1 the
    question is outside this criterion (the K3 case satisfies it).
    """
    if p_g <= 1:
        return TORELLI_OUT_OF_SCOPE
    if j_constant and extremal:
        return TORELLI_FAILS
    return TORELLI_SATISFIES


def h0_omega_twist(n: int, deg_L: int, num_singular: int, j_constant: bool) -> int:
    """dim H^0(X, Omega^1(nF)) for a fibration not birational to a product."""
    if n <= 0:
        raise ValueError("n must be positive")
    if not j_constant:
        return n - 1
    d = deg_L - num_singular
    return n - 1 + max(0, n + d + 1)


def family_bound(genus: int, deg_L: int, s: int) -> bool:
    """Whether a maximal constant-j family with s singular fibers is too big
    for the period domain (every member then violates infinitesimal
    Torelli)."""
    h20 = deg_L + genus - 1
    if h20 <= 1:
        raise ValueError("criterion needs p_g > 1")
    return 3 * genus - 3 + s > (s - deg_L + genus - 1) * h20


def family_s_max(genus: int, deg_L: int) -> int:
    """Largest fiber count passing :func:`family_bound`."""
    h20 = deg_L + genus - 1
    if h20 <= 1:
        raise ValueError("criterion needs p_g > 1")
    s = 0
    best = -1
    # the right side grows with slope h20 >= 2, so the crossover is small
    while s <= 6 * (deg_L + genus + 2):
        if family_bound(genus, deg_L, s):
            best = s
        s += 1
    return best


def single_fiber_genus_bound(fiber: FiberType) -> int | None:
    """Minimal base genus carrying the fiber type as the only singular
    fiber, or None when no fibration can have just this fiber.

    Only I(12k) and I*(12k-6) have Euler number 12k; the bounds are k+1
    and k respectively.
    """
    e = euler_number(fiber)
    if e == 0 or e % 12 != 0:
        return None
    k = e // 12
    if fiber.kind == "I":
        return k + 1
    if fiber.kind == "I*":
        return k
    return None


# --------------------------------------------------------------------------
# text format


class ConfigFormatError(ValueError):
    pass


def parse_configuration(text: str) -> Configuration:
    """Parse the 'genus = n' header plus one 'label : type' line per fiber.
    Blank lines and lines starting with '#' are ignored."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ConfigFormatError("empty configuration")
    head = lines[0]
    if not head.replace(" ", "").startswith("genus="):
        raise ConfigFormatError("first line must be 'genus = <n>'")
    try:
        genus = int(head.split("=", 1)[1])
    except ValueError as exc:
        raise ConfigFormatError(f"bad genus in {head!r}") from exc
    fibers = []
    for line in lines[1:]:
        if ":" not in line:
            raise ConfigFormatError(f"expected '<label> : <fiber-type>', got {line!r}")
        label, _, rhs = line.partition(":")
        label = label.strip()
        if not label:
            raise ConfigFormatError(f"missing label in {line!r}")
        try:
            fiber = kodaira.parse_fiber_type(rhs.strip())
        except ValueError as exc:
            raise ConfigFormatError(str(exc)) from exc
        fibers.append(Fiber(label, fiber))
    return Configuration(genus, tuple(fibers))


def format_configuration(config: Configuration) -> str:
    lines = [f"genus = {config.genus}"]
    lines.extend(str(f) for f in config.fibers)
    return "\n".join(lines) + "\n"
