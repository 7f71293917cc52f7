from math import isqrt

import pytest

from quadufd.forms import (
    QuadraticForm,
    class_number,
    class_number_neg,
    class_number_pos,
    cycles_pos,
    is_fundamental,
    reduced_forms_neg,
    reduced_forms_pos,
    rho,
    ufd_oracle,
)
from quadufd.ufd import decide_ufd

from oracles import brute_reduced_forms_neg, valid_discriminants


@pytest.mark.parametrize("D,expected", [(-163, True), (-12, False), (8, True), (-4, True), (5, True), (45, False), (-16, False), (40, True), (12, True), (-27, False)])
def test_is_fundamental(D, expected):
    assert is_fundamental(D) == expected


def test_is_fundamental_rejects_invalid():
    with pytest.raises(ValueError):
        is_fundamental(6)


def test_class_number_neg_examples():
    assert reduced_forms_neg(-4) == [QuadraticForm(1, 0, 1)]
    assert class_number_neg(-4) == 1
    assert sorted(reduced_forms_neg(-23)) == [QuadraticForm(1, 1, 6), QuadraticForm(2, -1, 3), QuadraticForm(2, 1, 3)]
    assert class_number_neg(-23) == 3
    assert class_number_neg(-163) == 1
    with pytest.raises(ValueError):
        class_number_neg(5)


def test_reduced_forms_neg_loop_order_invariant():
    for D in valid_discriminants(-1500, -3):
        forms = reduced_forms_neg(D)
        assert {(f.a, f.b, f.c) for f in forms} == brute_reduced_forms_neg(D)
        assert all(f.discriminant == D for f in forms)


def test_rho_permutes_reduced_forms():
    for D in valid_discriminants(2, 600):
        s = isqrt(D)
        forms = set(reduced_forms_pos(D))
        assert all(f.discriminant == D and f.is_primitive() for f in forms)
        images = {rho(f, s) for f in forms}
        assert images == forms
        cycles = cycles_pos(D)
        assert sum(len(c) for c in cycles) == len(forms)


# class numbers of Q(sqrt 10), Q(sqrt 15), Q(sqrt 65), Q(sqrt 85), Q(sqrt 3), Q(sqrt 2)
@pytest.mark.parametrize("D,h", [(40, 2), (60, 2), (65, 2), (85, 2), (12, 1), (8, 1), (5, 1), (73, 1)])
def test_class_number_pos_known(D, h):
    assert class_number_pos(D) == h
    assert decide_ufd(D).is_ufd == (h == 1)


def test_narrow_vs_wide_for_unit_norm_plus_one():
    # Q(sqrt 3): unit 2+sqrt3 has norm +1, two narrow classes, one wide class
    assert len(cycles_pos(12)) == 2 and class_number_pos(12) == 1
    with pytest.raises(ValueError):
        class_number_pos(-4)


@pytest.mark.parametrize("D,expected", [(-163, True), (-12, False), (73, True), (-23, False), (40, False)])
def test_ufd_oracle_examples(D, expected):
    assert ufd_oracle(D) == expected


def test_class_number_dispatch():
    assert class_number(-23) == 3 and class_number(40) == 2
