"""Slow, obviously-correct reference implementations used only by the tests."""

from itertools import permutations
from pathlib import Path

from dihedral_cayley.graphs import parse_graph6

DATA = Path(__file__).parent / "data"


def brute_force_automorphisms(g):
    """Every automorphism, by backtracking over partial vertex maps."""
    n = g.order
    deg = [g.degree(v) for v in range(n)]
    out = []
    image = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[i]:
                continue
            if all(g.has_edge(i, j) == g.has_edge(w, image[j]) for j in range(i)):
                image[i], used[w] = w, True
                extend(i + 1)
                used[w] = False
        image[i] = None

    extend(0)
    return out


def all_isomorphisms_exist(g, h):
    """True iff some bijection maps E(g) onto E(h); exhaustive."""
    if g.order != h.order or g.num_edges() != h.num_edges():
        return False
    edges = g.edges()
    return any(all(h.has_edge(p[u], p[v]) for u, v in edges) for p in permutations(range(g.order)))


def load_corpus():
    out = []
    for line in (DATA / "corpus_small.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        name, code = line.split()
        out.append((name, parse_graph6(code)))
    return out


def dihedral_as_polygon_maps(n):
    """D_2n acting on Z_n by x -> (-1)^a x + e for the element s^a r^e.

    With this action a product g h acts as "g first, then h", so the map of
    g h is the composite of the two maps in that order.  Independent of the
    normal-form product rule it is compared against.
    """
    return {(a, e): tuple(((-1) ** a * x + e) % n for x in range(n)) for a in (0, 1) for e in range(n)}
