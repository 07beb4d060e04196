import math

import pytest

from dihedral_cayley import graphs as gr
from dihedral_cayley.autsearch import (affine_permutation, aut_group_set, aut_gs_as_permutations,
                                       automorphism_group, cayley_is_normal, regular_permutations,
                                       right_regular, vertex_stabilizer_at_identity)
from dihedral_cayley.connset import parse_connection_set, reflections_set, rotations_set, thm52_set
from dihedral_cayley.dihedral import AffineMap
from dihedral_cayley.errors import MapDoesNotPreserveS, SizeCapExceeded
from dihedral_cayley.permgroup import PermGroup, identity_perm
from dihedral_cayley.refine import refine

from oracles import brute_force_automorphisms, load_corpus


def test_known_orders():
    assert automorphism_group(gr.circulant(7, {1, 2, 5, 6})).order == 14
    assert automorphism_group(gr.cayley(rotations_set(7, [1, 2]))).order == 392
    crown = gr.crown(5)
    assert automorphism_group(crown).order == 240 == len(brute_force_automorphisms(crown))


def test_search_matches_enumeration_on_corpus():
    corpus = load_corpus()
    assert len(corpus) >= 30
    for name, g in corpus:
        A = automorphism_group(g)
        assert A.order == len(brute_force_automorphisms(g)), name
        assert all(g.is_automorphism(p) for p in A.generators)


def test_colour_refinement_is_equitable():
    for _, g in load_corpus():
        nbrs = [g.neighbors(v) for v in range(g.order)]
        colors, _ = refine(nbrs, [0] * g.order)
        for v in range(g.order):
            for w in range(g.order):
                if colors[v] == colors[w]:
                    assert sorted(colors[x] for x in nbrs[v]) == sorted(colors[x] for x in nbrs[w])


def test_cap():
    with pytest.raises(SizeCapExceeded):
        automorphism_group(gr.cycle(70))
    assert automorphism_group(gr.cycle(70), cap=80).order == 140


def test_stabilizers():
    g = gr.cayley(thm52_set(5, 1))
    A = automorphism_group(g)
    assert vertex_stabilizer_at_identity(A).order == 2
    assert A.orbit(0) == set(range(10))
    A = automorphism_group(gr.cayley(parse_connection_set(3, "r,r^2,s,s*r")))
    assert vertex_stabilizer_at_identity(A).order == 8


def test_right_regular():
    assert right_regular(5).order == 10
    perms = regular_permutations(5)
    r = perms[1]
    assert sorted(r[:5]) == list(range(5)) and PermGroup(10, [r]).orbit(0) == set(range(5))
    for n in range(3, 9):
        for p in regular_permutations(n)[1:]:
            assert all(p[i] != i for i in range(2 * n))


@pytest.mark.parametrize("n,text", [(7, "r,r^6,s,s*r^3"), (6, "r^3,s,s*r,s*r^4"), (10, "r^2,r^8,r^4,r^6"),
                                    (7, "s,s*r,s*r^2,s*r^4"), (8, "r,r^7,r^4,s*r^5"), (5, "r,r^4,s,s*r")])
def test_regular_representation_and_aut_gs_inside(n, text):
    cs = parse_connection_set(n, text)
    A = automorphism_group(gr.cayley(cs))
    assert right_regular(n).is_subgroup_of(A)
    gs = aut_gs_as_permutations(cs, aut_group_set(n, cs))
    assert gs.is_subgroup_of(vertex_stabilizer_at_identity(A))


def test_aut_group_set_examples():
    assert [m.as_pair() for m in aut_group_set(7, thm52_set(7, 2))] == [(1, 0), (6, 5)]
    assert [m.as_pair() for m in aut_group_set(7, reflections_set(7, [0, 1, 2, 4]))] == [(1, 0), (2, 0), (4, 0)]
    maps = aut_group_set(7, rotations_set(7, [1, 2]))
    assert {m.u for m in maps} == {1, 6}


def test_aut_gs_permutations():
    cs = thm52_set(7, 2)
    assert affine_permutation(AffineMap(1, 0, 7)) == identity_perm(14)
    g = gr.cayley(cs)
    assert g.is_automorphism(affine_permutation(AffineMap(-1, -2, 7)))
    g = gr.cayley(reflections_set(7, [0, 1, 2, 4]))
    assert g.is_automorphism(affine_permutation(AffineMap(2, 0, 7)))
    with pytest.raises(MapDoesNotPreserveS):
        aut_gs_as_permutations(cs, [AffineMap(2, 0, 7)])


def test_normality_examples():
    ev = cayley_is_normal(gr.cayley(thm52_set(6, 1)), 6)
    assert ev.normal and ev.cross_check_agrees
    ev = cayley_is_normal(gr.cayley(reflections_set(5, [0, 1, 2, 3])), 5)
    assert not ev.normal and ev.aut_order == 240 and ev.aut_gs_order == 4
    ev = cayley_is_normal(gr.cayley(parse_connection_set(3, "r,r^2,s,s*r")), 3)
    assert not ev.normal and ev.aut_order == 48
    assert ev.witness["not_in_RG"]


def test_wreath_order_of_disconnected_union():
    for p, reps in ((5, [1]), (7, [1, 2]), (11, [1, 2])):
        g = gr.cayley(rotations_set(p, reps))
        m = automorphism_group(gr.circulant(p, {x % p for t in reps for x in (t, -t)})).order
        assert automorphism_group(g).order == m ** 2 * math.factorial(2)
    g = gr.cayley(rotations_set(10, [2, 4]))
    assert automorphism_group(g).order == math.factorial(5) ** 4 * math.factorial(4)
