import dataclasses

from hypothesis import given, settings, strategies as st

from dihedral_cayley import graphs as gr
from dihedral_cayley.connset import Kind, parse_connection_set, reflections_set, rotations_set
from dihedral_cayley.errors import DihedralCayleyError
from dihedral_cayley.structure import analyze, name_graph, predict, reference_graph, verify_structure


def test_rotation_examples():
    rep = analyze(rotations_set(4, [1, 2]))
    assert rep.verified and rep.component_target[2] == 2 and name_graph(rep.component_target[1]) == "K_4"
    rep = analyze(rotations_set(10, [2, 4]))
    data = rep.to_json()
    assert data["case"] == "I" and data["d"] == 2 and data["n_prime"] == 5
    assert data["components"] == 4 and data["component_iso"] == "Circ(5;[1,2])"
    assert data["component_name"] == "K_5" and data["verified"]


def test_reflection_examples():
    rep = analyze(reflections_set(5, range(5)))
    assert rep.verified and rep.special == "K_{5,5}"
    rep = analyze(reflections_set(7, [0, 1, 2, 4]))
    assert rep.verified and len(rep.parts) == 4 and rep.special is None
    rep = analyze(reflections_set(5, [0, 1, 2, 3]))
    assert rep.verified and rep.special == "crown(5)"


def test_mixed_examples():
    rep = analyze(parse_connection_set(6, "r,r^5,r^3,s"))
    assert rep.cs.kind == Kind.CASE_IV and rep.verified
    assert [name for name, _ in rep.parts] == ["Gamma[R]", "Gamma[F]", "M_0"]
    rep = analyze(parse_connection_set(7, "r,r^6,s,s*r^3"))
    assert rep.description == "TwoLayersPlusMatchings" and rep.verified
    rep = analyze(parse_connection_set(6, "r^3,s,s*r,s*r^4"))
    assert rep.description == "LayersWithAntipode" and rep.verified
    assert [name for name, _ in rep.parts] == ["N_R", "N_F", "M_0", "M_1", "M_4"]


def test_corrupted_report_names_an_edge():
    cs = reflections_set(7, [0, 1, 2, 4])
    rep = predict(cs)
    name, edges = rep.parts[1]
    rep.parts[1] = (name, gr.matching_of_reflection(7, 3).edges)
    out = verify_structure(rep, gr.cayley(cs))
    assert not out.verified
    bad = out.failures()[0]
    assert bad.name == "edge_partition"
    assert bad.certificate["problem"] in {"extra", "missing"}
    u, v = bad.certificate["edge"]
    assert (u, v) in edges or (u, v) in gr.matching_of_reflection(7, 3).edges


def test_wrong_component_prediction_fails():
    cs = rotations_set(10, [2, 4])
    rep = predict(cs)
    label, ref, count = rep.component_target
    rep = dataclasses.replace(rep, component_target=(label, ref, 2), checks=[], isomorphisms={})
    out = verify_structure(rep, gr.cayley(cs))
    assert [c.name for c in out.failures()] == ["component_count"]


def test_reference_labels():
    assert name_graph(reference_graph("Circ(6;{1,3})")) == "K_{3,3}"
    assert reference_graph("K_{2,2,2}").num_edges() == 12
    assert name_graph(gr.cycle(5)) == "C_5"


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 24), st.data())
def test_case_i_components(n, data):
    reps = data.draw(st.lists(st.integers(1, (n - 1) // 2), min_size=2, max_size=2, unique=True))
    try:
        cs = rotations_set(n, reps)
    except DihedralCayleyError:
        return
    rep = analyze(cs)
    assert rep.verified
    assert len(gr.components(gr.cayley(cs))) == 2 * cs.d


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 16), st.data())
def test_reflection_sets_decompose(n, data):
    A = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    rep = analyze(reflections_set(n, A))
    assert rep.verified
    checks = {c.name: c for c in rep.checks}
    assert checks["bipartition_R_F"].passed
    assert checks["complete_bipartite_iff_k_eq_n"].certificate["complete_bipartite"] == (len(A) == n)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 20), st.data())
def test_mixed_cases_layer_census(n, data):
    a = data.draw(st.integers(1, n - 1))
    b1, b2 = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    try:
        cs = parse_connection_set(n, f"r^{a},r^{-a},s*r^{b1},s*r^{b2}")
    except DihedralCayleyError:
        return
    rep = analyze(cs)
    assert rep.verified
    intra = {e for name, e in rep.parts if name.startswith("Gamma")}
    g = gr.cayley(cs)
    assert set().union(*intra) == {e for e in g.edges() if (e[0] < n) == (e[1] < n)}
