import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromabounds.graph import (EdgeOrdering, Graph, Graph6Error, GraphError, all_pairs,
                                contract_edge, delete_edge, enumerate_labeled_graphs, generate,
                                girth, is_claw_free, is_connected, make_graph, parse_graph6,
                                read_graph6_file, structural_queries, to_graph6)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = all_pairs(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


def test_make_graph_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g == generate("complete", 3)
    assert g.m == 3


def test_make_graph_empty_and_dedup():
    assert make_graph(4, []).m == 0
    assert make_graph(3, [(0, 1), (1, 0), (0, 1)]).m == 1


@pytest.mark.parametrize("n, edges, needle", [
    (2, [(0, 0)], "(0, 0)"),
    (3, [(0, 3)], "(0, 3)"),
    (3, [(-1, 2)], "(-1, 2)"),
])
def test_make_graph_errors_name_the_pair(n, edges, needle):
    with pytest.raises(GraphError, match=needle.replace("(", r"\(").replace(")", r"\)")):
        make_graph(n, edges)


def test_make_graph_negative_n():
    with pytest.raises(GraphError):
        make_graph(-1, [])


def test_generate_families():
    assert generate("cycle", 4).m == 4
    assert generate("complete", 4).m == 6
    one = generate("empty", 1)
    assert (one.n, one.m) == (1, 0)
    assert generate("path", 5).edge_list == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert generate("star", 4).edge_list == [(0, 1), (0, 2), (0, 3)]
    with pytest.raises(GraphError):
        generate("cycle", 2)
    with pytest.raises(GraphError):
        generate("wheel", 5)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts_and_uniqueness(n, expected):
    seen = {g.edges for g in enumerate_labeled_graphs(n)}
    assert len(seen) == expected


def test_connected_enumeration_n3():
    conn = list(enumerate_labeled_graphs(3, connected_only=True))
    # oracle: filter all 8 subsets with networkx connectivity
    brute = []
    for g in enumerate_labeled_graphs(3):
        h = nx.empty_graph(3)
        h.add_edges_from(g.edges)
        if nx.is_connected(h):
            brute.append(g)
    assert len(conn) == 4 == len(brute)
    assert sum(1 for g in conn if g.m == 2) == 3


def test_enumeration_cap():
    with pytest.raises(GraphError):
        list(enumerate_labeled_graphs(8))
    with pytest.raises(GraphError):
        list(enumerate_labeled_graphs(0))


def test_structural_queries_examples():
    k3 = structural_queries(generate("complete", 3))
    assert (k3.max_degree, k3.edge_count, k3.triangle_count) == (2, 3, 1)
    assert k3.is_connected and not k3.is_tree and k3.girth == 3 and k3.is_claw_free

    claw = structural_queries(generate("star", 4))
    assert (claw.max_degree, claw.edge_count, claw.triangle_count) == (3, 3, 0)
    assert not claw.is_claw_free and claw.is_tree and claw.girth is None

    c5 = structural_queries(generate("cycle", 5))
    assert (c5.max_degree, c5.edge_count, c5.triangle_count, c5.girth) == (2, 5, 0, 5)
    assert c5.is_claw_free

    empty = structural_queries(generate("empty", 3))
    assert empty.max_degree == 0 and empty.component_count == 3 and empty.girth is None


@given(graphs())
def test_structural_queries_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    s = structural_queries(g)
    assert s.triangle_count == sum(nx.triangles(h).values()) // 3
    assert s.component_count == nx.number_connected_components(h)
    assert s.max_degree == max((d for _, d in h.degree), default=0)
    expected_girth = nx.girth(h)
    assert s.girth == (None if expected_girth == float("inf") else expected_girth)
    if max(g.degrees, default=0) <= 2:
        assert s.is_claw_free


@given(graphs(max_n=8))
def test_claw_free_against_induced_subgraph_search(g):
    from itertools import combinations
    claw = False
    for v in range(g.n):
        for a, b, c in combinations([w for w in range(g.n) if g.has_edge(v, w)], 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                claw = True
    assert is_claw_free(g) == (not claw)


def test_delete_and_contract_examples():
    k3 = generate("complete", 3)
    for e in k3.edge_list:
        assert contract_edge(k3, e) == generate("complete", 2)
    c4 = generate("cycle", 4)
    for e in c4.edge_list:
        d = delete_edge(c4, e)
        assert d.m == 3 and is_connected(d) and max(d.degrees) == 2
    assert delete_edge(c4, (0, 1)) == make_graph(4, [(1, 2), (2, 3), (0, 3)])
    p3 = generate("path", 3)
    assert contract_edge(p3, (0, 1)) == generate("complete", 2)


def test_contract_relabeling_is_deterministic():
    g = make_graph(5, [(1, 3), (3, 4), (0, 4)])
    # merge 3 into 1; 4 shifts down to 3
    assert contract_edge(g, (1, 3)) == make_graph(4, [(1, 3), (0, 3)])


def test_missing_edge_errors():
    with pytest.raises(GraphError):
        delete_edge(generate("path", 3), (0, 2))
    with pytest.raises(GraphError):
        contract_edge(generate("path", 3), (0, 2))


@given(graphs(), st.data())
def test_contract_has_n_minus_1_vertices(g, data):
    if not g.m:
        return
    e = data.draw(st.sampled_from(g.edge_list))
    h = contract_edge(g, e)
    assert h.n == g.n - 1
    assert all(u < v < h.n for u, v in h.edges)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, frozenset({(1, 1)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 2)}))


def test_edge_ordering_bijection():
    g = generate("path", 3)
    EdgeOrdering({(0, 1): 2, (1, 2): 1}).check_graph(g)
    with pytest.raises(GraphError):
        EdgeOrdering({(0, 1): 1, (1, 2): 1})
    with pytest.raises(GraphError):
        EdgeOrdering({(0, 1): 1, (1, 2): 3})
    with pytest.raises(GraphError):
        EdgeOrdering({(0, 1): 1}).check_graph(g)


# graph6 -------------------------------------------------------------------------

def test_graph6_examples_match_reference_decoder():
    for line, expected in [("A_", generate("complete", 2)), ("C~", generate("complete", 4))]:
        g = parse_graph6(line)
        assert g == expected
        ref = nx.from_graph6_bytes(line.encode())
        assert {tuple(sorted(e)) for e in ref.edges} == set(g.edges)


def test_graph6_roundtrip_all_n4():
    for g in enumerate_labeled_graphs(4):
        line = to_graph6(g)
        assert parse_graph6(line) == g
        assert to_graph6(parse_graph6(line)) == line


@given(graphs(max_n=62))
def test_graph6_matches_networkx_encoder(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ref = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert to_graph6(g) == ref
    assert parse_graph6(ref) == g


@pytest.mark.parametrize("line, offset", [
    ("C~ ", 2),        # byte 32 below range
    ("C", 1),          # truncated
    ("C~~", 2),        # trailing byte
    ("B@", 1),         # padding bit set: n=3 uses 3 bits, '@' = 000001
    ("~??", 0),        # long form
    ("", 0),
])
def test_graph6_errors_carry_offsets(line, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(line)
    assert info.value.offset == offset


def test_read_graph6_file_reports_line(tmp_path):
    path = tmp_path / "cat.g6"
    path.write_text("A_\nC~\nC!!\n")
    with pytest.raises(Graph6Error, match="line 3"):
        read_graph6_file(path)
    path.write_text("A_\n\nC~\n")
    assert [g.n for g in read_graph6_file(path)] == [2, 4]


def test_girth_of_forest_is_none():
    assert girth(generate("path", 6)) is None
    assert girth(generate("cycle", 6)) == 6
