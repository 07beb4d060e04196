"""Predicted structural decompositions of Cay(D_2n, S), checked edge by edge."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import graphs as gr
from .connset import ConnectionSet, Kind, rotation_representatives
from .graphs import Graph, Matching


@dataclass
class Check:
    name: str
    passed: bool
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class StructureReport:
    cs: ConnectionSet
    description: str
    params: dict
    # named edge sets that should partition E(Gamma)
    parts: list[tuple[str, frozenset]]
    matchings: list[tuple[str, Matching]] = field(default_factory=list)
    # (label, reference graph, expected count) for every predicted component
    component_target: tuple[str, Graph, int] | None = None
    # reference graph each layer should be isomorphic to
    layer_target: tuple[str, Graph] | None = None
    special: str | None = None
    checks: list[Check] = field(default_factory=list)
    isomorphisms: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        p = self.params
        if self.component_target is not None:
            label, ref, count = self.component_target
            name = name_graph(ref)
            shown = f"{label} = {name}" if name and name != label else label
            return f"{count} components ≅ {shown}"
        if self.description == "MatchingDecomposition":
            extra = f", ≅ {self.special}" if self.special else ""
            return f"bipartite (R, F), {p['k']} perfect matchings{extra}"
        return f"two layers ≅ {self.layer_target[0]} joined by {len(self.cs.A)} perfect matching(s)"

    def to_json(self) -> dict:
        out = {"case": self.cs.kind.value, "n": self.cs.n, "elements": self.cs.element_strings(),
               "description": self.description}
        out.update(self.params)
        if self.component_target is not None:
            label, ref, count = self.component_target
            out["components"] = count
            out["component_iso"] = label
            out["component_name"] = name_graph(ref)
        if self.layer_target is not None:
            out["layer_iso"] = self.layer_target[0]
        if self.special is not None:
            out["special"] = self.special
        out["summary"] = self.summary()
        out["checks"] = [c.to_json() for c in self.checks]
        out["verified"] = self.verified
        return out


def circ_label(n: int, T) -> str:
    return f"Circ({n};[{','.join(map(str, rotation_representatives(T, n)))}])"


def name_graph(g: Graph) -> str | None:
    """Recognize a few reference graphs by explicit isomorphism."""
    n = g.order
    deg = g.regular_degree()
    if deg is None or n == 0:
        return None
    candidates = []
    if deg == n - 1:
        candidates.append((f"K_{n}", gr.complete(n)))
    if deg == 2 and n >= 3:
        candidates.append((f"C_{n}", gr.cycle(n)))
    if n % 2 == 0:
        h = n // 2
        if deg == h:
            candidates.append((f"K_{{{h},{h}}}", gr.complete_bipartite(h, h)))
        if deg == h - 1 and h >= 3:
            candidates.append((f"crown({h})", gr.crown(h)))
        if deg == n - 2 and h >= 2:
            name = "K_{" + ",".join(["2"] * h) + "}"
            candidates.append((name, gr.complete_multipartite(*[2] * h)))
    for name, ref in candidates:
        if gr.isomorphic(g, ref) is not None:
            return name
    return None


_LABEL_RE = re.compile(r"^(?:K_\{?(?P<parts>[\d,]+)\}?|C_(?P<cyc>\d+)|crown\((?P<crown>\d+)\)"
                       r"|Circ\((?P<cn>\d+);\s*[\[{](?P<ct>[\d,\s]*)[\]}]\))$")


def reference_graph(label: str) -> Graph:
    """Build the graph named by ``K_m``, ``K_{a,b,...}``, ``C_m``, ``crown(m)`` or ``Circ(n;[t,...])``."""
    m = _LABEL_RE.match(label.replace(" ", ""))
    if m is None:
        raise ValueError(f"unrecognized graph label {label!r}")
    if m["parts"]:
        parts = [int(x) for x in m["parts"].split(",")]
        return gr.complete(parts[0]) if len(parts) == 1 else gr.complete_multipartite(*parts)
    if m["cyc"]:
        return gr.cycle(int(m["cyc"]))
    if m["crown"]:
        return gr.crown(int(m["crown"]))
    n = int(m["cn"])
    reps = [int(x) for x in m["ct"].split(",") if x.strip()]
    return gr.circulant(n, {x % n for t in reps for x in (t, -t)})


def _reflection_matchings(cs: ConnectionSet) -> list[tuple[str, Matching]]:
    return [(f"M_{a}", gr.matching_of_reflection(cs.n, a)) for a in cs.A]


def predict(cs: ConnectionSet) -> StructureReport:
    n = cs.n
    if cs.kind in (Kind.CASE_I, Kind.ROTATIONS):
        d = cs.d
        n1 = n // d
        T1 = frozenset((t // d) % n1 for t in cs.T)
        label = circ_label(n1, T1)
        parts = [("Gamma[R]", gr.circulant_layer_edges(n, cs.T)),
                 ("Gamma[F]", gr.circulant_layer_edges(n, cs.T, reflections=True))]
        params = {"d": d, "n_prime": n1, "T_prime": sorted(T1), "T": sorted(cs.T)}
        return StructureReport(cs, "DisjointCirculants", params, parts,
                               component_target=(label, gr.circulant(n1, T1), 2 * d),
                               layer_target=(circ_label(n, cs.T), gr.circulant(n, cs.T)))

    if cs.kind in (Kind.CASE_II, Kind.REFLECTIONS):
        matchings = _reflection_matchings(cs)
        k = len(cs.A)
        special = "K_{%d,%d}" % (n, n) if k == n else ("crown(%d)" % n if k == n - 1 and n >= 3 else None)
        params = {"k": k, "A": list(cs.A), "d": cs.d, "bipartite": True}
        return StructureReport(cs, "MatchingDecomposition", params,
                               [(name, m.edges) for name, m in matchings], matchings, special=special)

    # mixed cases: two circulant layers plus inter-layer matchings
    matchings = _reflection_matchings(cs)
    parts = [("Gamma[R]", gr.circulant_layer_edges(n, cs.T)),
             ("Gamma[F]", gr.circulant_layer_edges(n, cs.T, reflections=True))]
    if cs.kind == Kind.CASE_V:
        N_R, N_F = gr.antipodal_matchings(n)
        parts = [("N_R", N_R.edges), ("N_F", N_F.edges)]
        # each antipodal matching covers one layer; together they cover both
        matchings = [("N_R+N_F", Matching(N_R.edges | N_F.edges))] + matchings
    parts += [(name, m.edges) for name, m in _reflection_matchings(cs)]
    description = "TwoLayersPlusMatchings" if cs.kind == Kind.CASE_III else "LayersWithAntipode"
    params = {"T": sorted(cs.T), "A": list(cs.A)}
    return StructureReport(cs, description, params, parts, matchings,
                           layer_target=(circ_label(n, cs.T), gr.circulant(n, cs.T)))


def verify_structure(rep: StructureReport, g: Graph) -> StructureReport:
    n = rep.cs.n
    checks = []
    ok, cert = gr.edge_partition_check(g, [edges for _, edges in rep.parts])
    if cert is not None and "parts" in cert:
        cert["parts"] = [rep.parts[i][0] for i in cert["parts"]]
    checks.append(Check("edge_partition", ok, cert))

    for name, m in rep.matchings:
        checks.append(Check(f"{name}_perfect", m.is_perfect(2 * n),
                            None if m.is_perfect(2 * n) else {"uncovered": sorted(set(range(2 * n)) - m.covered())}))

    inter = [e for e in g.edges() if (e[0] < n) != (e[1] < n)]
    n_refl = len(rep.cs.A)
    checks.append(Check("inter_layer_census", len(inter) == n * n_refl,
                        {"inter_layer_edges": len(inter), "expected": n * n_refl}))

    if rep.layer_target is not None:
        label, ref = rep.layer_target
        for layer, verts in (("R", range(n)), ("F", range(n, 2 * n))):
            m = gr.isomorphic(g.induced(verts), ref)
            rep.isomorphisms[f"Gamma[{layer}]"] = m
            checks.append(Check(f"Gamma[{layer}]_iso_{label}", m is not None))

    if rep.component_target is not None:
        label, ref, count = rep.component_target
        comps = gr.components(g)
        checks.append(Check("component_count", len(comps) == count,
                            {"observed": len(comps), "expected": count}))
        for idx, comp in enumerate(comps):
            m = gr.isomorphic(g.induced(comp), ref)
            rep.isomorphisms[f"component_{idx}"] = None if m is None else {comp[i]: m[i] for i in range(len(comp))}
            checks.append(Check(f"component_{idx}_iso_{label}", m is not None,
                                None if m is not None else {"vertices": comp}))

    if rep.description == "MatchingDecomposition":
        parts = gr.is_bipartite(g)
        R, F = list(range(n)), list(range(n, 2 * n))
        checks.append(Check("bipartition_R_F", parts == (R, F),
                            None if parts == (R, F) else {"observed": parts}))
        complete = all(g.has_edge(i, j) for i in R for j in F)
        k = len(rep.cs.A)
        # complete bipartite exactly when all n reflections are present
        checks.append(Check("complete_bipartite_iff_k_eq_n", complete == (k == n),
                            {"complete_bipartite": complete, "k": k}))
        if rep.special is not None:
            ref = gr.complete_bipartite(n, n) if k == n else gr.crown(n)
            m = gr.isomorphic(g, ref)
            rep.isomorphisms[rep.special] = m
            checks.append(Check(f"iso_{rep.special}", m is not None))

    rep.checks = checks
    return rep


def analyze(cs: ConnectionSet) -> StructureReport:
    return verify_structure(predict(cs), gr.cayley(cs))
