import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from dihedral_cayley.autsearch import automorphism_group, right_regular
from dihedral_cayley.graphs import circulant, cycle
from dihedral_cayley.permgroup import (PermGroup, closure, cycle_perm, cyclic_group, identity_perm, inv,
                                       is_internal_semidirect, is_normal_in, is_two_transitive, mul,
                                       symmetric_group)
from dihedral_cayley.errors import DegreeMismatch, NotASubgroup

from oracles import brute_force_automorphisms


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def affine_group(p, multipliers=None):
    mults = multipliers or range(1, p)
    gens = [tuple((x + 1) % p for x in range(p))] + [tuple(u * x % p for x in range(p)) for u in mults]
    return PermGroup(p, gens)


def test_basic_orders():
    assert cyclic_group(7).order == 7
    assert PermGroup(5).order == 1
    c7 = automorphism_group(cycle(7))
    gens = brute_force_automorphisms(cycle(7))
    assert c7.order == len(gens) == 14
    assert PermGroup(7, gens).order == 14


def test_membership():
    G = cyclic_group(7)
    assert G.contains(identity_perm(7))
    reflection = tuple((-x) % 7 for x in range(7))
    assert not G.contains(reflection)
    with pytest.raises(DegreeMismatch):
        G.contains(identity_perm(6))


def test_orbits_and_stabilizers():
    for n in (6, 8, 12):
        for v in range(1, n):
            G = PermGroup(n, [tuple((x + v) % n for x in range(n))])
            assert len(G.orbit(0)) == n // math.gcd(n, v)
    assert cyclic_group(5).orbit(2) == set(range(5))
    assert cyclic_group(3).stabilizer(0).order == 1


def test_two_transitivity():
    assert is_two_transitive(symmetric_group(3))
    assert not is_two_transitive(cyclic_group(3))
    assert not is_two_transitive(automorphism_group(circulant(7, {1, 2, 5, 6})))


def test_normality():
    aff = affine_group(7)
    assert is_normal_in(cyclic_group(7), aff) == (True, None)
    normal, witness = is_normal_in(PermGroup(3, [cycle_perm(3, 0, 1)]), symmetric_group(3))
    assert not normal and set(witness) == {"g", "x", "conjugated"}
    R = right_regular(5)
    assert is_normal_in(R, R)[0]
    with pytest.raises(NotASubgroup):
        is_normal_in(symmetric_group(4), cyclic_group(4))


def test_semidirect():
    aff = affine_group(5)
    mults = PermGroup(5, [tuple(u * x % 5 for x in range(5)) for u in range(1, 5)])
    assert is_internal_semidirect(cyclic_group(5), mults, aff) is True
    S3 = symmetric_group(3)
    assert is_internal_semidirect(S3, S3, S3) is False


def test_big_orders_are_exact():
    n = 14
    K = PermGroup(2 * n, [cycle_perm(2 * n, 0, 1), cycle_perm(2 * n, *range(n)),
                          tuple(list(range(n, 2 * n)) + list(range(n)))])
    assert K.order == 2 * math.factorial(n) ** 2
    assert K.order > 2 ** 64


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_bsgs_matches_closure(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    gens = [random_perm(rng, n) for _ in range(rng.randint(1, 3))]
    G = PermGroup(n, gens)
    elems = closure(n, gens)
    assert G.order == len(elems)
    assert all(G.contains(g) for g in rng.sample(sorted(elems), min(20, len(elems))))
    assert sorted(G.elements()) == sorted(elems)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_orbit_stabilizer(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 20)
    # products of short cycles keep the group small enough to be interesting
    gens = []
    for _ in range(rng.randint(1, 3)):
        pts = rng.sample(range(n), rng.randint(2, min(n, 5)))
        gens.append(cycle_perm(n, *pts))
    G = PermGroup(n, gens)
    x = rng.randrange(n)
    assert G.order == len(G.orbit(x)) * G.stabilizer(x).order
    if is_two_transitive(G):
        assert len(G.stabilizer(0).orbit(1)) == n - 1


def test_mul_convention():
    p, q = (1, 2, 0), (0, 2, 1)
    # p first, then q
    assert mul(p, q) == tuple(q[p[i]] for i in range(3))
    assert mul(p, inv(p)) == identity_perm(3)
