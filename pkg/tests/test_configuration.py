from __future__ import annotations

import random
from itertools import combinations

import pytest

from ellsurf import configuration as cfg
from ellsurf.configuration import (
    Configuration,
    ConstantJError,
    Counts,
    EXTREMAL,
    Fiber,
    NOT_EXTREMAL,
    NonJacobianConfigError,
    NoetherError,
    OUT_OF_SCOPE,
    base_change,
    counts,
    family_bound,
    family_s_max,
    format_configuration,
    h0_omega_twist,
    is_extremal,
    is_star_minimal,
    minimal_delta_twist,
    parse_configuration,
    ramification_accounting,
    report,
    single_fiber_genus_bound,
    star_minimal_twist,
    torelli_verdict,
    twist,
)
from ellsurf.kodaira import (
    II,
    III,
    III_STAR,
    II_STAR,
    IV,
    IV_STAR,
    FiberType,
    all_fiber_types,
    euler_number,
)

I = FiberType.I
Istar = FiberType.I_star


def config(genus, *types, labels=None):
    if labels is None:
        labels = [f"P{i}" for i in range(len(types))]
    return Configuration.of(genus, list(zip(labels, types)))


# -- the value type ------------------------------------------------------------


def test_rejects_smooth_fibers():
    with pytest.raises(ValueError):
        config(0, I(0), I(12))


def test_rejects_noether_violation():
    with pytest.raises(NoetherError):
        config(0, I(5))


def test_canonical_order():
    a = config(0, I(2), II_STAR, labels=["z", "a"])
    b = config(0, II_STAR, I(2), labels=["a", "z"])
    assert a == b


# -- counts and report ---------------------------------------------------------


def test_counts_examples():
    assert counts(config(0, II_STAR, IV, II_STAR)) == Counts(2, 1, 0, 0, 0)
    assert counts(config(0)) == Counts(0, 0, 0, 0, 0)
    assert counts(config(0, I(1), I(1), I(1), I(9))) == Counts(0, 0, 0, 0, 4)


def test_report_examples():
    rep = report(config(0, I(1), I(1), I(1), I(9)))
    assert (rep.deg_L, rep.h11, rep.rho_tr, rep.delta) == (1, 10, 10, 0)
    rep = report(config(1, I(6), Istar(0)))
    assert (rep.deg_L, rep.h11, rep.delta) == (1, 12, 1)
    rep = report(config(0, Istar(0), Istar(0)))
    assert (rep.deg_L, rep.delta) == (1, 0)
    assert rep.p_g == 0


def test_delta_closed_form_random():
    rng = random.Random(11)
    pool = all_fiber_types(20)
    for _ in range(300):
        genus = rng.randint(0, 2)
        types = [rng.choice(pool) for _ in range(rng.randint(0, 5))]
        total = sum(euler_number(t) for t in types)
        if total % 12:
            types.append(I(12 - total % 12))
        c = config(genus, *types)
        rep = report(c)
        cnt = rep.counts
        assert rep.delta == (
            2 * (cnt.a + cnt.b + cnt.c + cnt.d) + cnt.e - 2 * rep.deg_L - 2 + 2 * genus
        )


# -- extremality ---------------------------------------------------------------


def test_extremal_constant_j_catalog_row():
    verdict = is_extremal(config(0, II_STAR, IV, II_STAR), j_constant=True)
    assert verdict.status == EXTREMAL


def test_extremal_nonconstant_examples():
    assert is_extremal(config(0, I(1), I(1), I(1), I(9)), False).status == EXTREMAL
    ten = config(0, *([I(1)] * 9), I(3))
    assert is_extremal(ten, False).status == NOT_EXTREMAL


def test_extremal_out_of_scope_cases():
    assert is_extremal(config(0), True).note == "product, not extremal"
    assert is_extremal(config(1), True).note == "hyperelliptic"
    # inconsistent claims are flagged, not silently judged
    assert is_extremal(config(0, I(12)), True).status == OUT_OF_SCOPE
    assert is_extremal(config(0, Istar(0), Istar(0)), False).status == OUT_OF_SCOPE


def test_extremal_genus1_constant_j():
    # euler 24 via four I0* on genus 1; constant j on genus 1 needs deg L 0
    c = config(1, Istar(0), Istar(0), Istar(0), Istar(0))
    assert is_extremal(c, True).status == NOT_EXTREMAL


# -- twisting ------------------------------------------------------------------


def test_twist_example_genus1():
    c = config(1, I(6), Istar(0), labels=["P", "Q"])
    twisted, change = twist(c, ["P", "Q"])
    assert [str(f) for f in twisted.fibers] == ["P : I6*"]
    assert change == -1


def test_twist_two_smooth_points():
    c = config(1)
    twisted, change = twist(c, ["P", "Q"])
    assert sorted(str(f.type) for f in twisted.fibers) == ["I0*", "I0*"]
    assert change == 2


def test_twist_is_involution():
    c = config(0, II, I(1), I(4), I(5), labels=list("abcd"))
    once, ch1 = twist(c, ["a", "b"])
    back, ch2 = twist(once, ["a", "b"])
    assert back == c
    assert ch1 + ch2 == 0


def test_twist_odd_sites_rejected():
    with pytest.raises(ValueError):
        twist(config(0, I(12)), ["P0"])


def test_twist_duplicate_smooth_site_rejected():
    with pytest.raises(ValueError):
        twist(config(0), ["P", "P"])


def test_twist_conjugate_pair_by_shared_label():
    c = config(0, II, II, IV, IV, labels=["q", "q", "r", "r"])
    twisted, _ = twist(c, ["q", "q"])
    assert sorted(str(f.type) for f in twisted.fibers) == ["IV", "IV", "IV*", "IV*"]


# -- *-minimal twist -----------------------------------------------------------


def test_star_minimal_examples():
    c = config(1, Istar(6), labels=["P"])
    out = star_minimal_twist(c)
    assert sorted(str(f.type) for f in out.fibers) == ["I0*", "I6"]
    c2 = config(0, II_STAR, IV, II_STAR)
    out2 = star_minimal_twist(c2)
    assert sorted(str(f.type) for f in out2.fibers) == ["IV", "IV", "IV"]
    c3 = config(0, I(3), I(9))
    assert star_minimal_twist(c3) == c3


def _orbit(c: Configuration):
    """Every twist of c: subsets of fiber sites, odd ones completed by a
    fresh smooth point."""
    labels = [f.label for f in c.fibers]
    assert len(set(labels)) == len(labels)
    out = []
    for r in range(len(labels) + 1):
        for subset in combinations(labels, r):
            sites = list(subset)
            if len(sites) % 2:
                sites.append("fresh")
            out.append(twist(c, sites)[0])
    return out


def _random_configs(seed, count, max_fibers=5, max_euler=18):
    rng = random.Random(seed)
    pool = all_fiber_types(max_euler)
    out = []
    while len(out) < count:
        genus = rng.randint(0, 2)
        types = [rng.choice(pool) for _ in range(rng.randint(1, max_fibers - 1))]
        total = sum(euler_number(t) for t in types)
        if total % 12:
            types.append(I(12 - total % 12))
        out.append(config(genus, *types))
    return out


@pytest.mark.parametrize("c", _random_configs(13, 40))
def test_star_minimal_is_orbit_deg_L_minimum(c):
    sm = star_minimal_twist(c)
    assert is_star_minimal(sm)
    assert sm.deg_L() == min(x.deg_L() for x in _orbit(c))


@pytest.mark.parametrize("c", _random_configs(17, 40))
def test_minimal_delta_twist_is_orbit_minimum(c):
    orbit_min = min(report(x).delta for x in _orbit(c))
    cnt = counts(c)
    if cnt.d + cnt.e == 0:
        with pytest.raises(ConstantJError):
            minimal_delta_twist(c)
        return
    try:
        out = minimal_delta_twist(c)
    except NonJacobianConfigError:
        assert orbit_min < 0
        return
    out_counts = counts(out)
    assert out_counts.b == 0 and out_counts.c == 0
    assert report(out).delta == orbit_min


def test_minimal_delta_already_minimal():
    c = config(0, I(3), I(9))
    assert minimal_delta_twist(c) == c


def test_minimal_delta_parity_example():
    c = config(0, II, I(1), I(4), I(5))
    out = minimal_delta_twist(c)
    assert counts(out).b == 0 and counts(out).c == 0
    assert report(out).delta == 0


def test_minimal_delta_flags_non_jacobian():
    # {III, III, I6} has twist-orbit minimum delta = -1, so no Jacobian
    # surface carries it
    c = config(0, III, III, I(6))
    with pytest.raises(NonJacobianConfigError):
        minimal_delta_twist(c)


def test_minimal_delta_rejects_constant_j():
    with pytest.raises(ConstantJError):
        minimal_delta_twist(config(0, Istar(0), Istar(0)))


# -- base change -----------------------------------------------------------------


def test_base_change_paper_quadruples():
    c = config(0, III, III, II, I(4), labels=list("pqrs"))
    out = base_change(c, 2, {x: (2,) for x in "pqrs"})
    assert out.genus == 1
    assert sorted(str(f.type) for f in out.fibers) == ["I0*", "I0*", "I8", "IV"]

    c2 = config(0, III, III, III, I(3), labels=list("pqrs"))
    out2 = base_change(c2, 2, {x: (2,) for x in "pqrs"})
    assert out2.genus == 1
    assert sorted(str(f.type) for f in out2.fibers) == ["I0*", "I0*", "I0*", "I6"]


def test_base_change_degree_one_is_identity():
    c = config(0, I(3), I(9))
    assert base_change(c, 1, {}) == c


def test_base_change_unramified_duplicates():
    c = config(1, I(3), I(9), labels=["x", "y"])  # genus 1 admits unramified covers
    out = base_change(c, 3, {})
    assert out.genus == 1
    assert sorted(str(f.type) for f in out.fibers) == ["I3", "I3", "I3", "I9", "I9", "I9"]


def test_base_change_bad_profile():
    c = config(0, I(3), I(9), labels=["x", "y"])
    with pytest.raises(ValueError):
        base_change(c, 2, {"x": (3,)})  # indices must sum to the degree
    with pytest.raises(ValueError):
        base_change(c, 2, {"x": (2,)})  # a single branch point violates parity
    with pytest.raises(ValueError):
        base_change(c, 2, {})  # the line has no unramified double cover


def test_base_change_genus_crosscheck():
    c = config(0, III, III, III, I(3), labels=list("pqrs"))
    with pytest.raises(ValueError):
        base_change(c, 2, {x: (2,) for x in "pqrs"}, cover_genus=0)


@pytest.mark.parametrize("c", _random_configs(19, 25, max_fibers=4))
def test_base_change_preserves_noether(c):
    # double cover branched at two smooth points
    out = base_change(c, 2, {"w1": (2,), "w2": (2,)})
    assert out.euler_total() % 12 == 0
    assert out.euler_total() == 2 * c.euler_total()


# -- ramification accounting ------------------------------------------------------


def test_ramification_examples():
    v = ramification_accounting(config(0, I(1), I(1), I(1), I(9)))
    assert v.tight
    assert v.profile.over_inf == (9, 1, 1, 1)
    assert v.profile.over0 == (3, 3, 3, 3)
    assert v.profile.over1728 == (2, 2, 2, 2, 2, 2)

    v2 = ramification_accounting(config(1, I(1), I(11)))
    assert v2.tight and v2.expected_fibers == 2

    v3 = ramification_accounting(config(0, I(12)))
    assert not v3.tight and v3.expected_fibers == 4


def test_ramification_with_additive_fibers():
    # {II*, I1, I1} is extremal; its *-minimal twist is {IV, I1, I1, I0*}
    c = star_minimal_twist(config(0, II_STAR, I(1), I(1)))
    v = ramification_accounting(c)
    assert v.tight
    assert v.profile.degree == 2  # j has degree r = 2
    assert v.profile.over0 == (2,)  # the IV fiber pins index 2 mod 3
    assert v.profile.over1728 == (2,)  # one free double point
    assert v.profile.over_inf == (1, 1)


def test_ramification_preconditions():
    with pytest.raises(ValueError):
        ramification_accounting(config(0, II_STAR, I(1), I(1)))  # not *-minimal
    with pytest.raises(ConstantJError):
        ramification_accounting(config(0, II, IV, Istar(0)))  # constant j


# -- Torelli, h0 and dimension bounds ---------------------------------------------


def test_torelli_examples():
    assert torelli_verdict(2, True, True) == cfg.TORELLI_FAILS
    assert torelli_verdict(2, False, True) == cfg.TORELLI_SATISFIES
    assert torelli_verdict(1, True, True) == cfg.TORELLI_OUT_OF_SCOPE


def test_torelli_truth_table():
    for p_g in (2, 3):
        for j_const in (False, True):
            for extremal in (False, True):
                verdict = torelli_verdict(p_g, j_const, extremal)
                if j_const and extremal:
                    assert verdict == cfg.TORELLI_FAILS
                else:
                    assert verdict == cfg.TORELLI_SATISFIES


def test_h0_omega_examples():
    assert h0_omega_twist(1, 3, 5, False) == 0
    assert h0_omega_twist(1, 2, 3, True) == 1
    assert h0_omega_twist(2, 0, 0, False) == 1


def test_family_bound_rows():
    # (genus, deg_L) -> s_max
    assert family_s_max(1, 2) == 3
    assert family_s_max(1, 3) == 4
    assert family_s_max(1, 4) == 5
    assert family_s_max(1, 5) == 6
    assert family_s_max(2, 1) == 2


def test_family_bound_rejects_small_pg():
    with pytest.raises(ValueError):
        family_bound(0, 1, 3)  # p_g = 0
    with pytest.raises(ValueError):
        family_s_max(1, 1)  # p_g = 1


def test_single_fiber_genus_bound():
    assert single_fiber_genus_bound(I(12)) == 2
    assert single_fiber_genus_bound(Istar(6)) == 1
    assert single_fiber_genus_bound(I(7)) is None
    assert single_fiber_genus_bound(I(24)) == 3
    assert single_fiber_genus_bound(Istar(18)) == 2
    assert single_fiber_genus_bound(II_STAR) is None
    assert single_fiber_genus_bound(I(0)) is None


# -- extremality route agreement (small scale; exhaustive in acceptance) ----------


@pytest.mark.parametrize("c", _random_configs(23, 60))
def test_extremality_routes_agree(c):
    cnt = counts(c)
    if cnt.d + cnt.e == 0:
        return
    rep = report(c)
    route_a = is_extremal(c, False).status == EXTREMAL
    route_b = cnt.b == 0 and cnt.c == 0 and rep.delta == 0
    route_c = (
        cnt.b == 0
        and cnt.c == 0
        and ramification_accounting(star_minimal_twist(c)).tight
    )
    assert route_a == route_b == route_c


# -- text format -------------------------------------------------------------------


def test_format_parse_round_trip():
    c = config(1, I(6), Istar(0), labels=["P", "Q"])
    assert parse_configuration(format_configuration(c)) == c


def test_parse_skips_comments():
    c = parse_configuration("# a remark\ngenus = 0\n\nP : I3\nQ : I9\n")
    assert c == config(0, I(3), I(9), labels=["P", "Q"])


def test_parse_errors():
    with pytest.raises(cfg.ConfigFormatError):
        parse_configuration("P : I3\n")
    with pytest.raises(cfg.ConfigFormatError):
        parse_configuration("genus = x\n")
    with pytest.raises(cfg.ConfigFormatError):
        parse_configuration("genus = 0\nP I3\n")
    with pytest.raises(cfg.ConfigFormatError):
        parse_configuration("genus = 0\nP : I3*x\n")
