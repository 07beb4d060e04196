"""Automorphism groups of graphs and the Cayley-specific companions.

The regular representation used here is the one that acts by automorphisms
under the ``g ~ g x`` adjacency of :func:`graphs.cayley`: the translation by
``g`` sends the vertex ``x`` to ``g x``.  Inversion ``x -> x^-1`` turns it
into ``x -> x g^-1`` on the ``x y^-1 in S`` model of the same graph, so the
normality question is the same on both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .connset import ConnectionSet
from .dihedral import AffineMap, all_elements, aff_apply, element_from_index, units
from .errors import MapDoesNotPreserveS, SizeCapExceeded
from .graphs import Graph
from .permgroup import PermGroup, is_normal_in
from .refine import search_automorphisms

VERTEX_CAP = int(os.environ.get("DIHEDRAL_CAYLEY_VERTEX_CAP", "64"))


def automorphism_group(g: Graph, cap: int | None = None, colors=None) -> PermGroup:
    """Full automorphism group of ``g`` (colour-preserving when ``colors`` is given)."""
    cap = VERTEX_CAP if cap is None else cap
    if g.order > cap:
        raise SizeCapExceeded(g.order, cap)
    result = search_automorphisms(g, colors)
    group = PermGroup(g.order, result.generators)
    # the search tree's orbit product and Schreier-Sims must agree
    assert group.order == result.order, (group.order, result.order)
    return group


def vertex_stabilizer_at_identity(A: PermGroup) -> PermGroup:
    return A.stabilizer(0)


def right_regular(n: int) -> PermGroup:
    """The regular action of D_2n on vertex indices, one permutation per element."""
    return PermGroup(2 * n, regular_permutations(n))


def regular_permutations(n: int) -> list[tuple[int, ...]]:
    elems = all_elements(n)
    return [tuple((g * x).index() for x in elems) for g in elems]


def aut_group_set(n: int, S) -> list[AffineMap]:
    """Every psi_{u,v} with psi(S) = S, by scanning all phi(n) * n pairs."""
    elems = S.elems if isinstance(S, ConnectionSet) else frozenset(S)
    out = []
    for u in units(n):
        for v in range(n):
            phi = AffineMap(u, v, n)
            if all(aff_apply(phi, x) in elems for x in elems):
                out.append(phi)
    return out


def affine_permutation(phi: AffineMap) -> tuple[int, ...]:
    n = phi.n
    return tuple(aff_apply(phi, element_from_index(i, n)).index() for i in range(2 * n))


def aut_gs_as_permutations(cs: ConnectionSet, maps) -> PermGroup:
    perms = []
    for phi in maps:
        if any(aff_apply(phi, x) not in cs.elems for x in cs.elems):
            raise MapDoesNotPreserveS(f"psi_({phi.u},{phi.v}) does not map S onto itself")
        perms.append(affine_permutation(phi))
    return PermGroup(2 * cs.n, perms)


@dataclass
class NormalityEvidence:
    normal: bool
    witness: dict | None
    aut_order: int
    stabilizer_order: int
    aut_gs_order: int
    # Fact: normal iff Aut(Gamma)_e equals Aut(G,S)
    stabilizer_equals_aut_gs: bool

    @property
    def cross_check_agrees(self) -> bool:
        return self.normal == self.stabilizer_equals_aut_gs

    def to_json(self) -> dict:
        return {
            "normal": self.normal,
            "witness": self.witness,
            "aut_order": str(self.aut_order),
            "stabilizer_order": str(self.stabilizer_order),
            "aut_gs_order": str(self.aut_gs_order),
            "stabilizer_equals_aut_gs": self.stabilizer_equals_aut_gs,
            "cross_check_agrees": self.cross_check_agrees,
        }


def cayley_is_normal(g: Graph, n: int, aut: PermGroup | None = None, cap: int | None = None) -> NormalityEvidence:
    """Is R(D_2n) normal in Aut(g)?  ``g`` must be a layered Cayley graph."""
    if aut is None:
        aut = automorphism_group(g, cap)
    S = frozenset(element_from_index(v, n) for v in g.neighbors(0))
    R = right_regular(n)
    normal, witness = is_normal_in(R, aut)
    if witness is not None:
        witness = {"conjugated": witness["conjugated"], "not_in_RG": True,
                   "aut_generator": witness["g"], "translation": witness["x"]}
    stab = vertex_stabilizer_at_identity(aut)
    gs_perms = [affine_permutation(phi) for phi in aut_group_set(n, S)]
    assert all(stab.contains(p) for p in gs_perms), "Aut(G,S) must fix the identity vertex"
    return NormalityEvidence(
        normal=normal,
        witness=witness,
        aut_order=aut.order,
        stabilizer_order=stab.order,
        aut_gs_order=len(gs_perms),
        stabilizer_equals_aut_gs=stab.order == len(gs_perms),
    )
