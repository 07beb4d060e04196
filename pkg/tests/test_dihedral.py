import pytest
from hypothesis import given, strategies as st

from dihedral_cayley.dihedral import (AffineMap, aff_apply, aff_compose, all_elements, dh_order, format_element,
                                      gcd_all, identity, parse_element, parse_elements, refl, rot, unit_subgroup,
                                      units)
from dihedral_cayley.errors import ElementParseError, ModulusMismatch, NotAUnit

from oracles import dihedral_as_polygon_maps

moduli = st.integers(min_value=3, max_value=30)


def elements(n):
    return st.builds(lambda a, e: refl(e, n) if a else rot(e, n), st.booleans(), st.integers(-100, 100))


def test_products():
    assert rot(1, 6) * rot(2, 6) == rot(3, 6)
    assert refl(0, 5) * refl(0, 5) == identity(5)
    s, r = refl(0, 5), rot(1, 5)
    assert s * r * s == rot(4, 5)


def test_inverses_and_orders():
    assert rot(3, 5).inverse() == rot(7 % 5, 5)
    assert rot(3, 10).inverse() == rot(7, 10)
    assert refl(4, 5).inverse() == refl(4, 5)
    assert identity(5).inverse() == identity(5)
    assert dh_order(rot(3, 6)) == 2
    assert dh_order(refl(5, 7)) == 2
    assert dh_order(rot(2, 7)) == 7


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        rot(1, 5) * rot(1, 6)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_product_matches_polygon_action(n):
    maps = dihedral_as_polygon_maps(n)
    for g in all_elements(n):
        for h in all_elements(n):
            gh = g * h
            mg, mh = maps[(int(g.reflect), g.exp)], maps[(int(h.reflect), h.exp)]
            assert maps[(int(gh.reflect), gh.exp)] == tuple(mh[mg[x]] for x in range(n))


@given(st.data(), moduli)
def test_group_axioms(data, n):
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == identity(n)
    assert (2 * n) % a.order() == 0


@given(st.data(), moduli)
def test_format_parse_roundtrip(data, n):
    g = data.draw(elements(n))
    assert parse_element(format_element(g), n) == g


def test_parse_forms():
    assert parse_element("r^-1", 7) == rot(6, 7)
    assert parse_element("r", 7) == rot(1, 7)
    assert parse_element("s", 7) == refl(0, 7)
    # r^k s = s r^-k
    assert parse_element("r^3*s", 7) == refl(4, 7)
    assert parse_elements("r^1, r^6,s,s*r^3", 7) == [rot(1, 7), rot(6, 7), refl(0, 7), refl(3, 7)]
    with pytest.raises(ElementParseError):
        parse_element("t^2", 7)


def test_affine_examples():
    # r^3 s in D_14 is s r^4; psi_{2,1} sends it to s r^0
    assert aff_apply(AffineMap(2, 1, 7), parse_element("r^3*s", 7)) == refl(0, 7)
    assert aff_apply(AffineMap(1, 0, 7), refl(5, 7)) == refl(5, 7)
    for n in (5, 8, 11):
        for k in range(1, n):
            phi = AffineMap(-1, -k, n)
            assert aff_apply(phi, refl(0, n)) == refl(k, n)
            assert aff_compose(phi, phi) == AffineMap(1, 0, n)
    assert aff_compose(AffineMap(1, 0, 7), AffineMap(3, 4, 7)) == AffineMap(3, 4, 7)
    assert aff_compose(AffineMap(2, 1, 7), AffineMap(3, 4, 7)).as_pair() == (6, 2)
    with pytest.raises(NotAUnit):
        AffineMap(2, 0, 8)


@given(st.data(), moduli)
def test_affine_maps_are_automorphisms(data, n):
    u = data.draw(st.sampled_from(units(n)))
    v = data.draw(st.integers(0, n - 1))
    phi = AffineMap(u, v, n)
    a, b = data.draw(elements(n)), data.draw(elements(n))
    assert phi(a * b) == phi(a) * phi(b)
    assert phi.inverse()(phi(a)) == a


@given(st.data(), moduli)
def test_compose_is_composition(data, n):
    maps = [AffineMap(data.draw(st.sampled_from(units(n))), data.draw(st.integers(0, n - 1)), n) for _ in range(2)]
    g = data.draw(elements(n))
    assert aff_compose(maps[0], maps[1])(g) == maps[0](maps[1](g))


def test_units_and_subgroups():
    assert units(7) == [1, 2, 3, 4, 5, 6]
    assert units(8) == [1, 3, 5, 7]
    assert units(1) == []
    assert unit_subgroup([6], 7) == {1, 6}
    assert unit_subgroup([4], 17) == {1, 4, 13, 16}
    assert unit_subgroup([1], 9) == {1}
    with pytest.raises(NotAUnit):
        unit_subgroup([3], 9)
    assert gcd_all(10, [2, 4]) == 2
    assert gcd_all(7, [1, 2]) == 1
    assert gcd_all(6, []) == 6
