import itertools

import pytest

from sufread import Graph, build_vc_dfa, default_theta, reduction_size_check, vc_sts_correspondence
from sufread.dfa_ops import nerode_partition
from sufread.hardness import GraphError, edge_symbol, kept_states, reduction_k

TRIANGLE = Graph(("u", "v", "w"), (("u", "v"), ("v", "w"), ("u", "w")))
PATH = Graph(("x", "y", "z"), (("x", "y"), ("y", "z")))


def test_graph_checks():
    assert TRIANGLE.problems() == []
    assert Graph(("a", "b", "c"), (("a", "b"),)).problems() == ["graph is not connected"]
    with pytest.raises(GraphError):
        Graph(("a", "b"), (("a", "b"),)).check()
    with pytest.raises(GraphError):
        Graph(("a", "b", "c"), (("a", "a"), ("b", "c"))).check()


def test_covers():
    assert TRIANGLE.vertex_covers()[0] == frozenset({"u", "v"})
    assert PATH.is_vertex_cover({"y"})
    assert not PATH.is_vertex_cover({"x"})


def test_dfa_shape():
    m = build_vc_dfa(TRIANGLE, 2)
    assert m.names == ("q_init", "u", "v", "w", "q_sink", "q_acc")
    assert m.is_complete
    assert set(m.alphabet) == {"u", "v", "w", "$", "1", "2", edge_symbol("u", "v"),
                               edge_symbol("v", "w"), edge_symbol("u", "w")}
    step = lambda q, x: m.names[m.delta[(m.state(q), x)]]
    assert step("q_init", "v") == "v"
    assert step("u", "e.u.v") == "v" and step("v", "e.u.v") == "u"
    assert step("u", "$") == "q_acc"
    assert step("u", "e.v.w") == "q_sink"
    assert step("q_acc", "1") == "q_sink"


def test_symbol_clash_detected():
    g = Graph(("e.a.b", "a", "b"), (("a", "b"), ("a", "e.a.b")))
    with pytest.raises(GraphError):
        build_vc_dfa(g, 1)
    with pytest.raises(GraphError):
        build_vc_dfa(Graph(("1", "a", "b"), (("1", "a"), ("a", "b"))), 2)


def test_reduction_parameters():
    assert default_theta(TRIANGLE) == 6 ** 4
    assert reduction_k(2, 3) == 4 * 6 + 5


def test_vc_dfa_is_minimal():
    for g in (TRIANGLE, PATH):
        m = build_vc_dfa(g, 2)
        assert len(set(nerode_partition(m))) == m.n_states


@pytest.mark.parametrize("g", [TRIANGLE, PATH])
def test_correspondence_small(g):
    report = vc_sts_correspondence(g, 2)
    assert report.agreement, report.mismatches()
    assert len(report.rows) == 2 ** len(g.vertices)


def test_two_adjacent_suppressed_vertices_break_compatibility():
    from sufread import is_suffix_tracking
    m = build_vc_dfa(PATH, 1)
    report = is_suffix_tracking(m, kept_states(m, {"z"}))
    assert not report


def test_size_check_on_path():
    r = reduction_size_check(PATH, 1, cap=10 ** 6)
    assert r.theta == default_theta(PATH) and r.k == reduction_k(1, r.theta)
    assert r.min_cover == 1 and r.forward_holds and r.backward_holds
    assert [set(row.subset) for row in r.backward] == [{"y"}]


def test_size_bound_needs_large_theta():
    r = reduction_size_check(PATH, 1, theta=2)
    assert r.forward_holds is False


def test_size_check_without_small_cover():
    r = reduction_size_check(TRIANGLE, 1, theta=2)
    assert r.forward is None and r.forward_holds is None
    assert r.backward_holds


def test_all_subsets_listed():
    rows = vc_sts_correspondence(PATH, 1).rows
    subsets = {r.subset for r in rows}
    assert subsets == {frozenset(c) for k in range(4) for c in itertools.combinations("xyz", k)}
