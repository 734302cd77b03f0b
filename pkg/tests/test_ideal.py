"""Monomial ideals: minimalization, decomposition, duality, sliding."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from stanleydepth.core import enumerate_box, join, leq
from stanleydepth.errors import DomainError
from stanleydepth.ideal import (
    MonomialIdeal,
    intersect_many,
    irreducible_contains,
    irreducible_ideal,
    skeleton_power_ideal,
)


def ideal_strategy(n=3, hi=3, max_gens=4):
    gen = st.tuples(*[st.integers(0, hi)] * n).filter(lambda g: any(g))
    return st.lists(gen, min_size=1, max_size=max_gens).map(
        lambda gs: MonomialIdeal.from_gens(n, gs)
    )


def grid_members(I, box):
    return {b for b in enumerate_box(box) if I.contains(b)}


def test_minimalization():
    I = MonomialIdeal.from_gens(2, [(1, 0), (2, 0), (1, 1)])
    assert I.gens == ((1, 0),)
    assert MonomialIdeal.from_gens(1, [(1,), (2,)]).gens == ((1,),)


def test_zero_and_unit():
    Z, U = MonomialIdeal.zero(2), MonomialIdeal.unit(2)
    assert Z.is_zero and not Z.is_unit
    assert U.is_unit and not U.is_zero
    assert U.contains((0, 0)) and not Z.contains((5, 5))
    with pytest.raises(DomainError):
        Z.irreducible_decomposition()
    with pytest.raises(DomainError):
        U.dual((1, 1))


@given(ideal_strategy(), ideal_strategy())
@settings(max_examples=60, deadline=None)
def test_sum_and_intersection_against_grid(I, J):
    box = join(join(I.gens_join(), J.gens_join()), (1, 1, 1))
    gi, gj = grid_members(I, box), grid_members(J, box)
    assert grid_members(I.add_ideal(J), box) == gi | gj
    assert grid_members(I.intersect(J), box) == gi & gj


@given(ideal_strategy(), st.tuples(*[st.integers(0, 2)] * 3))
@settings(max_examples=60, deadline=None)
def test_colon_against_grid(I, m):
    box = join(I.gens_join(), (2, 2, 2))
    expected = {
        b for b in enumerate_box(box)
        if I.contains(tuple(x + y for x, y in zip(b, m)))
    }
    assert grid_members(I.colon(m), box) == expected


@given(ideal_strategy())
@settings(max_examples=60, deadline=None)
def test_irreducible_decomposition_against_grid(I, ):
    comps = I.irreducible_decomposition()
    box = join(I.gens_join(), (1, 1, 1))
    for b in enumerate_box(box):
        assert I.contains(b) == all(irreducible_contains(d, b) for d in comps)
    # irredundancy: dropping any component changes the ideal
    if len(comps) > 1:
        for d in comps:
            others = intersect_many(3, (irreducible_ideal(e) for e in comps if e != d))
            assert any(
                others.contains(b) and not irreducible_contains(d, b)
                for b in enumerate_box(join(others.gens_join(), d))
            )


def test_decomposition_example():
    I = MonomialIdeal.from_gens(2, [(3, 0), (2, 1)])
    assert I.irreducible_decomposition() == [(2, 0), (3, 1)]


def test_dual_examples():
    I = MonomialIdeal.from_gens(2, [(3, 0), (2, 1)])
    assert I.dual((3, 1)).gens == ((1, 1), (2, 0))
    # components of slide((xy), (1,1)) = (x^2 y^2)
    J = MonomialIdeal.from_gens(2, [(1, 1)]).slide((1, 1))
    assert sorted(J.irreducible_decomposition()) == [(0, 2), (2, 0)]


@given(ideal_strategy())
@settings(max_examples=40, deadline=None)
def test_dual_involution_and_reflection(I):
    a = join(I.gens_join(), (1, 1, 1))
    D = I.dual(a)
    assert D.dual(a) == I
    # x^c in dual(I) iff x^(a-c) not in I
    for c in enumerate_box(a):
        refl = tuple(x - y for x, y in zip(a, c))
        assert D.contains(c) == (not I.contains(refl))


def test_slide_examples():
    I = MonomialIdeal.from_gens(2, [(2, 1), (0, 3)])
    assert I.slide((1, 1)).gens == ((0, 4), (3, 2))
    assert I.slide((0, 0)) == I


@given(ideal_strategy(), st.tuples(*[st.integers(0, 3)] * 3))
@settings(max_examples=40, deadline=None)
def test_slide_component_form(I, b):
    slid = I.slide(b)
    direct = sorted(slid.irreducible_decomposition())
    via_comps = sorted(
        {tuple(x + y if x != 0 else 0 for x, y in zip(d, b))
         for d in I.irreducible_decomposition()}
    )
    # slid components, re-irredundantized
    via = intersect_many(3, (irreducible_ideal(d) for d in via_comps if any(d)))
    assert slid == via or not any(any(d) for d in via_comps)


@given(ideal_strategy(), st.tuples(*[st.integers(0, 3)] * 3))
@settings(max_examples=40, deadline=None)
def test_slide_preserves_genericity(I, b):
    if I.is_unit:
        return
    assert I.is_generic() == I.slide(b).is_generic()
    assert I.is_cogeneric() == I.slide(b).is_cogeneric()


def test_genericity_examples():
    assert MonomialIdeal.from_gens(2, [(3, 1), (1, 2)]).is_generic()
    assert not MonomialIdeal.from_gens(3, [(2, 1, 0), (2, 0, 1)]).is_generic()


def test_linear_quotient():
    I = MonomialIdeal.from_gens(2, [(2, 0), (1, 1)])
    order = I.linear_quotient_order()
    assert order is not None
    for i in range(1, len(order)):
        prefix = MonomialIdeal.from_gens(2, order[:i])
        colon = MonomialIdeal.from_gens(
            2, (tuple(max(h - g, 0) for h, g in zip(m, order[i])) for m in order[:i])
        )
        assert all(sum(q) == 1 for q in colon.gens)
    # (x^2 y, y z^2) has no linear quotient order
    J = MonomialIdeal.from_gens(3, [(2, 1, 0), (0, 1, 2)])
    assert J.linear_quotient_order() is None


def test_skeleton_power_ideal():
    a = (2, 3, 1)
    for level in range(0, 4):
        S = skeleton_power_ideal(a, level)
        for b in enumerate_box(a):
            big = sum(1 for x, y in zip(b, a) if x >= y) > level
            assert S.contains(b) == big
    # zero coordinates in the box shift the cut
    a0 = (2, 0, 1)
    for level in range(0, 4):
        S = skeleton_power_ideal(a0, level)
        for b in enumerate_box(a0):
            big = sum(1 for x, y in zip(b, a0) if x >= y) > level
            assert S.contains(b) == big
    assert skeleton_power_ideal((1, 1), 2).is_zero
    assert skeleton_power_ideal((0, 0), 1).is_unit
