import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from projknot.errors import DomainError
from projknot.knots import KnotCombo, parse_combo, twist_jump_cosine
from projknot.metric import ball_classification
from projknot.rips import build_rips, maximal_cliques, twist_clique


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_cliques_match_networkx(data):
    n, pairs = data
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((a, b) for a, b in pairs if a != b)
    adj = {v: set(g[v]) for v in range(n)}
    ours = sorted(maximal_cliques(n, adj))
    theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(g))
    assert ours == theirs


def test_four_class_simplex():
    verts = [parse_combo(s) for s in ("T(2,3)", "T(2,5)", "T(2,7)", "T(2,3) + T(2,5)")]
    rc = build_rips(verts)
    assert rc.maximal_simplices == ((0, 1, 2, 3),)
    assert rc.dimension == 3
    assert not rc.excluded_pairs


def test_single_vertex():
    rc = build_rips([KnotCombo.torus(3)])
    assert rc.maximal_simplices == ((0,),) and rc.dimension == 0


def test_torus_edges_follow_classification():
    qs = list(range(3, 23, 2))
    rc = build_rips([KnotCombo.torus(q) for q in qs])
    ms = [(q - 1) // 2 for q in qs]
    expected = {(i, j) for i in range(len(ms)) for j in range(i + 1, len(ms))
                if ms[j] in ball_classification(ms[i], 100)}
    assert set(rc.edges) == expected


def test_undecided_pairs_are_excluded():
    def oracle(u, v):
        return None if {u, v} == {"a", "c"} else 1

    rc = build_rips(["a", "b", "c"], oracle)
    assert rc.excluded_pairs == ((0, 2),)
    assert rc.maximal_simplices == ((0, 1), (1, 2))


def test_twist_cliques():
    rc = twist_clique(range(1, 12))
    assert rc.dimension == 10 and len(rc.maximal_simplices) == 1
    assert len({twist_jump_cosine(n) for n in range(1, 12)}) == 11
    assert all(lab.startswith("axiom:") for lab in rc.edge_labels.values())
    assert twist_clique([1]).dimension == 0
    with pytest.raises(DomainError):
        twist_clique([1, 2, 2])


def test_json_shape():
    js = twist_clique([1, 2]).to_json()
    assert js["dimension"] == 1 and js["vertices"] == ["W(1)", "W(2)"]
