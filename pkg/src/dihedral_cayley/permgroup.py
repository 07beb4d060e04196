"""Permutation groups with a deterministic Schreier-Sims stabilizer chain.

A permutation of degree N is a tuple ``p`` with ``p[i]`` the image of ``i``.
Products read left to right: ``mul(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import math
from functools import cached_property
from itertools import product

from .errors import DegreeMismatch, NotASubgroup

INTERSECTION_ENUM_CAP = 10_000


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def mul(p, q):
    """p then q."""
    return tuple(q[x] for x in p)


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(g, x):
    """The map g o x o g^-1 (apply g^-1, then x, then g)."""
    return mul(mul(inv(g), x), g)


def is_identity(p) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(p, degree: int | None = None):
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {list(p)}")
    if degree is not None and len(p) != degree:
        raise DegreeMismatch(f"permutation has degree {len(p)}, expected {degree}")


def cycle_perm(degree: int, *cycle) -> tuple[int, ...]:
    out = list(range(degree))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        out[a] = b
    return tuple(out)


def perm_order(p) -> int:
    seen, out = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        out = math.lcm(out, length)
    return out


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point, gens, degree):
        self.point = point
        self.gens = gens
        self.recompute(degree)

    def recompute(self, degree):
        trans = {self.point: identity_perm(degree)}
        queue = [self.point]
        for x in queue:
            ux = trans[x]
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = mul(ux, g)
                    queue.append(y)
        self.transversal = trans


class PermGroup:
    """Group generated by ``generators`` acting on ``range(degree)``."""

    def __init__(self, degree: int, generators=(), base_prefix=()):
        gens = []
        for g in generators:
            g = tuple(g)
            check_perm(g, degree)
            if not is_identity(g) and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = gens
        self._base_prefix = tuple(base_prefix)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"

    # -- stabilizer chain ----------------------------------------------------

    @cached_property
    def _chain(self) -> list[_Level]:
        return _schreier_sims(self.degree, self.generators, self._base_prefix)

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self._chain]

    @property
    def strong_generators(self) -> list[tuple[int, ...]]:
        out = []
        for lvl in self._chain:
            out.extend(g for g in lvl.gens if g not in out)
        return out

    @cached_property
    def order(self) -> int:
        out = 1
        for lvl in self._chain:
            out *= len(lvl.transversal)
        return out

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self._chain]

    def sift(self, p):
        return _sift(self._chain, tuple(p), 0)

    def contains(self, p) -> bool:
        check_perm(p, self.degree)
        h, j = self.sift(p)
        return j == len(self._chain) and is_identity(h)

    __contains__ = contains

    def elements(self):
        """Iterate every element (only sensible for small groups)."""
        transversals = [list(lvl.transversal.values()) for lvl in reversed(self._chain)]
        ident = identity_perm(self.degree)
        for choice in product(*transversals):
            g = ident
            for u in choice:
                g = mul(g, u)
            yield g

    # -- actions ---------------------------------------------------------------

    def orbit(self, x: int) -> set[int]:
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} out of range for degree {self.degree}")
        seen, stack = {x}, [x]
        while stack:
            y = stack.pop()
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return seen

    def orbits(self) -> list[list[int]]:
        left, out = set(range(self.degree)), []
        for x in range(self.degree):
            if x in left:
                orb = self.orbit(x)
                left -= orb
                out.append(sorted(orb))
        return out

    def stabilizer(self, x: int) -> PermGroup:
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} out of range for degree {self.degree}")
        chain = _schreier_sims(self.degree, self.generators, (x,))
        gens = chain[1].gens if len(chain) > 1 else []
        return PermGroup(self.degree, gens)

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)


def _sift(chain, h, start):
    for j in range(start, len(chain)):
        lvl = chain[j]
        beta = h[lvl.point]
        u = lvl.transversal.get(beta)
        if u is None:
            return h, j
        h = mul(h, inv(u))
    return h, len(chain)


def _first_moved(p):
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


def _schreier_sims(degree, generators, base_prefix=()):
    """Deterministic Schreier-Sims; base = prefix, then ascending first moved points."""
    gens = [tuple(g) for g in generators if not is_identity(g)]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    if not base:
        return []

    def level_gens(i):
        return [g for g in strong if all(g[b] == b for b in base[:i])]

    strong = list(gens)
    chain = [_Level(base[i], level_gens(i), degree) for i in range(len(base))]

    i = len(chain) - 1
    while i >= 0:
        lvl = chain[i]
        restart = False
        for beta, u_beta in list(lvl.transversal.items()):
            for x in lvl.gens:
                u_img = lvl.transversal[x[beta]]
                schreier = mul(mul(u_beta, x), inv(u_img))
                if is_identity(schreier):
                    continue
                h, j = _sift(chain, schreier, i + 1)
                if j < len(chain) or not is_identity(h):
                    if j == len(chain):
                        base.append(_first_moved(h))
                        chain.append(_Level(base[-1], [], degree))
                    strong.append(h)
                    for l in range(i + 1, j + 1):
                        chain[l].gens = level_gens(l)
                        chain[l].recompute(degree)
                    i = j
                    restart = True
                    break
            if restart:
                break
        if not restart:
            i -= 1
    return chain


def closure(degree: int, generators) -> set[tuple[int, ...]]:
    """Every element by repeated multiplication; the order oracle for small groups."""
    ident = identity_perm(degree)
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- structural predicates ---------------------------------------------------------------

def is_two_transitive(G: PermGroup) -> bool:
    n = G.degree
    if n < 2:
        return False
    start = (0, 1)
    seen, stack = {start}, [start]
    while stack:
        a, b = stack.pop()
        for g in G.generators:
            img = (g[a], g[b])
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return len(seen) == n * (n - 1)


def is_normal_in(N: PermGroup, G: PermGroup):
    """Return ``(True, None)`` or ``(False, witness)`` for N normal in G.

    The witness records a generator ``g`` of G, a generator ``x`` of N and the
    conjugate ``g x g^-1`` that falls outside N.
    """
    if N.degree != G.degree:
        raise DegreeMismatch("groups act on different degrees")
    for x in N.generators:
        if not G.contains(x):
            raise NotASubgroup(f"generator {list(x)} of N is not in G")
    for g in G.generators:
        for x in N.generators:
            c = conjugate(g, x)
            if not N.contains(c):
                return False, {"g": list(g), "x": list(x), "conjugated": list(c)}
    return True, None


def is_internal_semidirect(N: PermGroup, Q: PermGroup, G: PermGroup) -> bool | None:
    """N normal in G, |N||Q| = |G| and N meet Q trivial.

    Returns None when Q is too large to enumerate for the intersection test.
    """
    for H, name in ((N, "N"), (Q, "Q")):
        if not H.is_subgroup_of(G):
            raise NotASubgroup(f"{name} is not a subgroup of G")
    normal, _ = is_normal_in(N, G)
    if not normal or N.order * Q.order != G.order:
        return False
    if Q.order > INTERSECTION_ENUM_CAP:
        return None
    return not any(N.contains(q) for q in Q.elements() if not is_identity(q))


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(n)
    return PermGroup(n, [cycle_perm(n, 0, 1), cycle_perm(n, *range(n))])


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [cycle_perm(n, *range(n))] if n > 1 else [])
