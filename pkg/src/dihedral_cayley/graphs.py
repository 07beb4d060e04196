"""Simple undirected graphs on vertices 0..N-1 with bit-row adjacency.

Cayley graphs of D_2n are *layered*: vertex ``i < n`` is the rotation ``r^i``
and vertex ``n + i`` is the reflection ``s r^i``.  Edges follow the
right-multiplication convention: ``g`` is adjacent to ``g x`` for ``x`` in S.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .connset import ConnectionSet
from .dihedral import element_from_index, format_element
from .errors import AsymmetricConnectionSet, SizeCapExceeded

ISO_CAP = int(os.environ.get("DIHEDRAL_CAYLEY_ISO_CAP", "128"))


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]
    # when set, the graph is a layered Cayley graph on D_2n with this n
    layer_n: int | None = None

    def __post_init__(self):
        if len(self.adj) != self.order:
            raise ValueError("adjacency must have one row per vertex")
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            if row >> self.order:
                raise ValueError(f"row {i} references a vertex outside the graph")
        for i in range(self.order):
            for j in self.neighbors(i):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")
        if self.layer_n is not None and self.order != 2 * self.layer_n:
            raise ValueError("layered graphs must have 2n vertices")

    @classmethod
    def from_edges(cls, order: int, edges, layer_n: int | None = None) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows), layer_n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row, out = self.adj[v], []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in self.neighbors(i) if i < j]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.order)) // 2

    def regular_degree(self) -> int | None:
        degs = {self.degree(v) for v in range(self.order)}
        return degs.pop() if len(degs) == 1 else (0 if not degs else None)

    def induced(self, vertices) -> Graph:
        """Induced subgraph, relabelled 0..len(vertices)-1 in the given order."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u in vertices for v in self.neighbors(u) if v in pos and pos[u] < pos[v]]
        return Graph.from_edges(len(vertices), edges)

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(self.order, tuple(full ^ row ^ (1 << i) for i, row in enumerate(self.adj)))

    def relabel(self, perm) -> Graph:
        """Image of the graph under the vertex map i -> perm[i]."""
        return Graph.from_edges(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def vertex_label(self, v: int) -> str:
        if self.layer_n is None:
            return str(v)
        return format_element(element_from_index(v, self.layer_n))

    def is_automorphism(self, perm) -> bool:
        return all(self.has_edge(perm[u], perm[v]) for u, v in self.edges())

    def to_json(self) -> dict:
        return {"order": self.order, "adj": [self.neighbors(v) for v in range(self.order)]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        edges = [(u, v) for u, nbrs in enumerate(data["adj"]) for v in nbrs if u < v]
        return cls.from_edges(data["order"], edges)


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, pairs) -> Matching:
        edges = frozenset((min(u, v), max(u, v)) for u, v in pairs)
        seen = set()
        for u, v in edges:
            if u in seen or v in seen:
                raise ValueError(f"edges sharing vertex in matching at ({u}, {v})")
            seen.update((u, v))
        return cls(edges)

    def covered(self) -> set[int]:
        return {x for e in self.edges for x in e}

    def is_perfect(self, order: int) -> bool:
        return len(self.edges) * 2 == order and self.covered() == set(range(order))

    def __len__(self):
        return len(self.edges)


# -- construction ------------------------------------------------------------

def cayley(cs: ConnectionSet) -> Graph:
    n = cs.n
    rows = [0] * (2 * n)
    for i in range(2 * n):
        g = element_from_index(i, n)
        for x in cs.elems:
            rows[i] |= 1 << (g * x).index()
    return Graph(2 * n, tuple(rows), layer_n=n)


def circulant(n: int, T) -> Graph:
    T = {t % n for t in T}
    if 0 in T:
        raise AsymmetricConnectionSet("0 may not belong to a circulant connection set")
    bad = sorted(t for t in T if (-t) % n not in T)
    if bad:
        raise AsymmetricConnectionSet(f"T is not symmetric mod {n}: {-bad[0] % n} missing")
    return Graph.from_edges(n, [(i, (i + t) % n) for i in range(n) for t in T if i < (i + t) % n])


def union_disjoint(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.adj + tuple(row << shift for row in h.adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m1: int, m2: int) -> Graph:
    return Graph.from_edges(m1 + m2, [(i, m1 + j) for i in range(m1) for j in range(m2)])


def complete_multipartite(*parts: int) -> Graph:
    labels = [p for p, size in enumerate(parts) for _ in range(size)]
    return Graph.from_edges(len(labels), [(i, j) for i, j in combinations(range(len(labels)), 2)
                                          if labels[i] != labels[j]])


def crown(n: int) -> Graph:
    if n < 3:
        raise ValueError("crown graphs need n >= 3")
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


# -- decomposition -----------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.order
    out = []
    for start in range(g.order):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [start], deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    color = [-1] * g.order
    for start in range(g.order):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return ([v for v in range(g.order) if color[v] == 0], [v for v in range(g.order) if color[v] == 1])


def matching_of_reflection(n: int, a: int) -> Matching:
    """M_a = {{r^i, s r^(a - i)}}: the edges contributed by the generator s r^a."""
    return Matching.of((i, n + (a - i) % n) for i in range(n))


def antipodal_matchings(n: int) -> tuple[Matching, Matching]:
    if n % 2:
        raise ValueError(f"antipodal matchings need n even, got {n}")
    h = n // 2
    return (Matching.of((i, i + h) for i in range(h)),
            Matching.of((n + i, n + i + h) for i in range(h)))


def circulant_layer_edges(n: int, T, reflections: bool = False) -> frozenset[tuple[int, int]]:
    """Edges of Circ(n; T) placed on the rotation layer or the reflection layer."""
    off = n if reflections else 0
    return frozenset((off + min(i, (i + t) % n), off + max(i, (i + t) % n))
                     for i in range(n) for t in T if t % n)


def edge_partition_check(g: Graph, parts) -> tuple[bool, dict | None]:
    """True iff ``parts`` are pairwise disjoint edge sets whose union is E(g)."""
    owner = {}
    for idx, part in enumerate(parts):
        edges = part.edges if isinstance(part, Matching) else part
        for u, v in sorted(edges):
            e = (min(u, v), max(u, v))
            if e in owner:
                return False, {"problem": "duplicate", "edge": list(e), "parts": [owner[e], idx]}
            owner[e] = idx
            if not g.has_edge(*e):
                return False, {"problem": "extra", "edge": list(e), "parts": [idx]}
    for e in g.edges():
        if e not in owner:
            return False, {"problem": "missing", "edge": list(e)}
    return True, None


# -- isomorphism -------------------------------------------------------------

def isomorphic(g: Graph, h: Graph, cap: int | None = None) -> list[int] | None:
    """An explicit bijection ``m`` with ``g.has_edge(u, v) == h.has_edge(m[u], m[v])``, or None."""
    from .refine import find_isomorphism

    cap = ISO_CAP if cap is None else cap
    if g.order + h.order > cap:
        raise SizeCapExceeded(g.order + h.order, cap, "isomorphism instance")
    if g.order != h.order or g.num_edges() != h.num_edges():
        return None
    if sorted(map(g.degree, range(g.order))) != sorted(map(h.degree, range(h.order))):
        return None
    return find_isomorphism(g, h)


# -- serialization -----------------------------------------------------------

def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        lines.append(f'  {v} [label="{g.vertex_label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def export_graph6(g: Graph) -> str:
    bits = [g.has_edge(i, j) for j in range(1, g.order) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join("1" if b else "0" for b in bits[k:k + 6]), 2))
                   for k in range(0, len(bits), 6))
    return _graph6_size(g.order) + body


def parse_graph6(text: str) -> Graph:
    data = [ord(c) - 63 for c in text.strip()]
    if data[0] != 63:
        n, pos = data[0], 1
    elif data[1] != 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    bits = [(x >> s) & 1 for x in data[pos:] for s in range(5, -1, -1)]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
