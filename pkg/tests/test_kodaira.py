from __future__ import annotations

import pytest

from ellsurf.kodaira import (
    II,
    III,
    III_STAR,
    II_STAR,
    IV,
    IV_STAR,
    ClassificationError,
    FiberType,
    I0,
    LocalData,
    all_fiber_types,
    base_change_type,
    classify_local,
    euler_number,
    lattice_contribution,
    minimalize,
    parse_fiber_type,
    reference_triple,
    twist_type,
)
from ellsurf.ratfunc import INF

ALL_SMALL = [I0] + all_fiber_types(24)


# -- fiber type basics -------------------------------------------------------


def test_fiber_type_validation():
    with pytest.raises(ValueError):
        FiberType("I", -1)
    with pytest.raises(ValueError):
        FiberType("II", 3)
    with pytest.raises(ValueError):
        FiberType("V")


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_text_round_trip(fiber):
    assert parse_fiber_type(str(fiber)) == fiber


def test_text_examples():
    assert str(FiberType.I(0)) == "I0"
    assert str(FiberType.I_star(12)) == "I12*"
    assert parse_fiber_type("IV*") == IV_STAR
    with pytest.raises(ValueError):
        parse_fiber_type("I*")
    with pytest.raises(ValueError):
        parse_fiber_type("V")


# -- local data and minimalization -------------------------------------------


def test_local_data_validation():
    with pytest.raises(ValueError):
        LocalData(INF, INF, 0)  # c4 = c6 = 0 kills the discriminant
    with pytest.raises(ValueError):
        LocalData(0, 1, -1)
    with pytest.raises(ValueError):
        LocalData(1, 2, 2)  # v_delta below min(3*1, 2*2) = 3


@pytest.mark.parametrize(
    "triple,expected,k",
    [
        ((4, 6, 12), (0, 0, 0), 1),
        ((8, 12, 24), (0, 0, 0), 2),
        ((3, 5, 9), (3, 5, 9), 0),
        ((INF, 6, 12), (INF, 0, 0), 1),
        ((4, INF, 12), (0, INF, 0), 1),
    ],
)
def test_minimalize(triple, expected, k):
    got, got_k = minimalize(LocalData(*triple))
    assert (got.v_c4, got.v_c6, got.v_delta) == expected
    assert got_k == k


# -- classification ----------------------------------------------------------


@pytest.mark.parametrize(
    "triple,expected",
    [
        ((INF, 1, 2), II),
        ((2, INF, 6), FiberType.I_star(0)),
        ((0, 0, 6), FiberType.I(6)),
        ((0, 0, 0), I0),
        ((INF, 2, 4), IV),
        ((1, INF, 3), III),
        ((INF, 4, 8), IV_STAR),
        ((3, INF, 9), III_STAR),
        ((INF, 5, 10), II_STAR),
        ((2, 3, 6), FiberType.I_star(0)),
        ((2, 3, 10), FiberType.I_star(4)),
        ((3, 3, 6), FiberType.I_star(0)),
        ((2, 4, 6), FiberType.I_star(0)),
    ],
)
def test_classify_local(triple, expected):
    assert classify_local(LocalData(*triple)) == expected


@pytest.mark.parametrize("triple", [(2, 3, 5), (2, 4, 11), (INF, 3, 7), (1, 2, 5)])
def test_classify_impossible(triple):
    # these pass the ultrametric construction check but match no type
    with pytest.raises(ClassificationError):
        classify_local(LocalData(*triple))


@pytest.mark.parametrize("triple", [(1, 1, 1), (3, 5, 7)])
def test_inconsistent_triples_rejected_at_construction(triple):
    with pytest.raises(ValueError):
        LocalData(*triple)


def test_classify_requires_minimal():
    with pytest.raises(ClassificationError):
        classify_local(LocalData(4, 6, 12))


# -- numeric attributes ------------------------------------------------------


def test_euler_numbers():
    assert euler_number(FiberType.I_star(0)) == 6
    assert euler_number(I0) == 0
    assert euler_number(II_STAR) == 10
    assert euler_number(FiberType.I(7)) == 7
    assert euler_number(FiberType.I_star(3)) == 9


def test_lattice_contribution():
    assert lattice_contribution(FiberType.I_star(0)) == 4
    assert lattice_contribution(FiberType.I(1)) == 0
    assert lattice_contribution(II_STAR) == 8


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_euler_minus_lattice(fiber):
    # multiplicative fibers contribute 1 to the trivial-lattice defect,
    # additive ones 2, smooth ones 0
    gap = euler_number(fiber) - lattice_contribution(fiber)
    if fiber.is_smooth:
        assert gap == 0
    elif fiber.kind == "I":
        assert gap == 1
    else:
        assert gap == 2


# -- twisting ----------------------------------------------------------------


def test_twist_examples():
    assert twist_type(I0) == FiberType.I_star(0)
    assert twist_type(III_STAR) == III
    assert twist_type(twist_type(IV)) == IV
    assert twist_type(FiberType.I(5)) == FiberType.I_star(5)


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_twist_involution(fiber):
    assert twist_type(twist_type(fiber)) == fiber


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_twist_euler_jump(fiber):
    # the unstarred member of each twist pair is 6 below the starred one
    diff = euler_number(twist_type(fiber)) - euler_number(fiber)
    assert abs(diff) == 6
    if fiber.kind == "I" or fiber.kind in ("II", "III", "IV"):
        assert diff == 6
    else:
        assert diff == -6


# -- base change -------------------------------------------------------------


@pytest.mark.parametrize(
    "fiber,e,expected",
    [
        (III, 2, FiberType.I_star(0)),
        (FiberType.I(3), 2, FiberType.I(6)),
        (II, 2, IV),
        (I0, 4, I0),
        (FiberType.I_star(2), 2, FiberType.I(4)),
        (FiberType.I_star(2), 3, FiberType.I_star(6)),
        (II, 8, IV),
        (III, 6, FiberType.I_star(0)),
        (IV_STAR, 3, I0),
        (II_STAR, 6, I0),
        (IV, 3, I0),
    ],
)
def test_base_change_examples(fiber, e, expected):
    assert base_change_type(fiber, e) == expected


def test_base_change_rejects_zero():
    with pytest.raises(ValueError):
        base_change_type(II, 0)


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_base_change_identity(fiber):
    assert base_change_type(fiber, 1) == fiber


@pytest.mark.parametrize("fiber", ALL_SMALL)
@pytest.mark.parametrize("a", range(1, 7))
@pytest.mark.parametrize("b", range(1, 7))
def test_base_change_composition(fiber, a, b):
    assert base_change_type(base_change_type(fiber, a), b) == base_change_type(fiber, a * b)


@pytest.mark.parametrize("fiber", ALL_SMALL)
def test_reference_triples_classify_back(fiber):
    if fiber.is_smooth:
        return
    assert classify_local(reference_triple(fiber)) == fiber
