"""Colour refinement and individualization-refinement search.

Colourings are lists ``colors[v]`` of contiguous integers.  Refinement sorts
the signatures ``(colour, sorted neighbour colours)``, so cells split in place
and the resulting ordered partition does not depend on vertex labels.  Each
refinement also returns a hash of its trace (the signature census of every
round); two nodes of a search tree can only be related by an isomorphism when
their traces agree.

The automorphism search follows the first path of the tree to a discrete
leaf, then walks the path bottom-up.  At each level it tries every vertex of
the target cell that is not yet in the orbit of the first-path vertex under
the automorphisms already found (all of which fix the earlier path vertices),
and looks in that subtree for a leaf equivalent to the first leaf.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


def refine(nbrs, colors):
    """Equitable refinement of ``colors``; returns ``(colors, trace_hash)``."""
    ncol = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(colors))]
        census = sorted(Counter(sigs).items())
        rank = {sig: i for i, (sig, _) in enumerate(census)}
        trace.append(hash(tuple(census)))
        colors = [rank[s] for s in sigs]
        if len(census) == ncol:
            return colors, hash(tuple(trace))
        ncol = len(census)


def individualize(colors, v):
    c = colors[v]
    return [2 * x + (1 if x == c and u != v else 0) for u, x in enumerate(colors)]


def target_cell(colors):
    """Smallest non-singleton cell, lowest colour first; None when discrete."""
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


@dataclass
class _Node:
    colors: list
    trace: int
    cell: list | None


def first_path(nbrs, colors):
    """Nodes along the leftmost path; the last node is the discrete leaf."""
    colors, trace = refine(nbrs, colors)
    path = []
    while True:
        cell = target_cell(colors)
        path.append(_Node(colors, trace, cell))
        if cell is None:
            return path
        colors, trace = refine(nbrs, individualize(colors, cell[0]))


def _leaf_map(ref_leaf, leaf):
    """Vertex map sending the vertex of colour c in ``ref_leaf`` to that of ``leaf``."""
    where = [0] * len(leaf)
    for v, c in enumerate(leaf):
        where[c] = v
    return [where[c] for c in ref_leaf]


def _match_below(nbrs, colors, trace, depth, path, accept):
    """DFS for a leaf below (colors, trace) equivalent to the leaf of ``path``.

    ``depth`` is the index in ``path`` the node corresponds to.
    """
    ref = path[depth]
    if trace != ref.trace:
        return None
    cell = target_cell(colors)
    if cell is None:
        if ref.cell is not None:
            return None
        perm = _leaf_map(ref.colors, colors)
        return perm if accept(perm) else None
    if ref.cell is None or len(cell) != len(ref.cell):
        return None
    for x in cell:
        child, child_trace = refine(nbrs, individualize(colors, x))
        found = _match_below(nbrs, child, child_trace, depth + 1, path, accept)
        if found is not None:
            return found
    return None


def _orbit(point, gens):
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class SearchResult:
    generators: list
    base: list
    orbit_sizes: list
    nodes_visited: int = 0

    @property
    def order(self) -> int:
        out = 1
        for k in self.orbit_sizes:
            out *= k
        return out


def search_automorphisms(g, colors=None) -> SearchResult:
    """Generators of the colour-preserving automorphism group of ``g``."""
    nbrs = [g.neighbors(v) for v in range(g.order)]
    colors = [0] * g.order if colors is None else list(colors)
    path = first_path(nbrs, colors)
    inner = path[:-1]
    base = [node.cell[0] for node in inner]
    gens = []
    orbit_sizes = [1] * len(inner)

    def accept(perm):
        return g.is_automorphism(perm)

    for level in range(len(inner) - 1, -1, -1):
        node = inner[level]
        b = node.cell[0]
        orbit = _orbit(b, gens)
        for w in node.cell[1:]:
            if w in orbit:
                continue
            child, child_trace = refine(nbrs, individualize(node.colors, w))
            perm = _match_below(nbrs, child, child_trace, level + 1, path, accept)
            if perm is not None:
                gens.append(tuple(perm))
                orbit = _orbit(b, gens)
        orbit_sizes[level] = len(orbit)
    return SearchResult(gens, base, orbit_sizes)


def find_isomorphism(g, h):
    """Vertex map m with E(h) = m(E(g)), or None."""
    nbrs_g = [g.neighbors(v) for v in range(g.order)]
    nbrs_h = [h.neighbors(v) for v in range(h.order)]
    path = first_path(nbrs_g, [0] * g.order)
    colors, trace = refine(nbrs_h, [0] * h.order)

    def accept(perm):
        return all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())

    perm = _match_below(nbrs_h, colors, trace, 0, path, accept)
    return None if perm is None else list(perm)
