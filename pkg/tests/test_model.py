"""Graph ingestion and the combinatorial layout model."""

import json
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from hiveplot.graph import GraphInputError, build_graph, load_edgelist, load_graph_json
from hiveplot.layout import (
    INTRA,
    LONG,
    PROPER,
    AxisArrangement,
    HiveLayout,
    class_counts,
    classify_edge,
    layout_from_groups,
    long_edge_route,
    span,
    subdivide_long_edges,
    validate_layout,
)


def bundled_coauthors():
    text = resources.files("hiveplot.data").joinpath("coauthors.json").read_text()
    return load_graph_json(text)


class TestBuildGraph:
    def test_duplicate_edges_collapse(self):
        g, _ = build_graph([("a", "b"), ("b", "c"), ("a", "b")])
        assert g.n == 3 and g.m == 2
        assert g.duplicates_dropped == 1

    def test_self_loop_dropped(self):
        g, _ = build_graph([("a", "a")])
        assert g.n == 1 and g.m == 0
        assert g.self_loops_dropped == 1

    def test_reversed_duplicate_collapses(self):
        g, _ = build_graph([("a", "b"), ("b", "a")])
        assert g.m == 1

    def test_unknown_label_with_explicit_vertices(self):
        with pytest.raises(GraphInputError):
            build_graph([("a", "z")], vertices=["a", "b"])

    def test_partition_hint_must_cover(self):
        with pytest.raises(GraphInputError):
            build_graph([("a", "b")], partition_hint={"a": 0})

    def test_partition_hint_returned_dense(self):
        _, groups = build_graph([("a", "b")], partition_hint={"a": 5, "b": 9})
        assert groups == [0, 1]

    def test_edgelist_comments(self):
        g, _ = load_edgelist("# header\na b\nb c # trailing\n\n")
        assert g.n == 3 and g.m == 2

    def test_bundled_case_study_size(self):
        g, groups = bundled_coauthors()
        assert g.n == 75
        assert g.m == 190
        assert groups is not None and len(set(groups)) == 7


class TestSpan:
    def test_k6_wraps(self):
        layout = layout_from_groups([0, 1, 2, 3, 4, 5])
        assert span(layout, 0, 4) == 2

    def test_same_axis(self):
        layout = layout_from_groups([0, 1])
        assert span(layout, 1, 1) == 0

    def test_k5(self):
        layout = layout_from_groups([0, 1, 2, 3, 4])
        assert span(layout, 0, 3) == 2

    def test_unknown_axis_rejected(self):
        layout = layout_from_groups([0, 1])
        with pytest.raises(ValueError):
            span(layout, 0, 7)

    @given(st.integers(2, 9), st.data())
    def test_symmetry_and_bound(self, k, data):
        order = data.draw(st.permutations(range(k)))
        layout = layout_from_groups(list(range(k)), axis_order=tuple(order))
        i = data.draw(st.integers(0, k - 1))
        j = data.draw(st.integers(0, k - 1))
        assert span(layout, i, j) == span(layout, j, i)
        assert span(layout, i, i) == 0
        assert span(layout, i, j) <= k // 2


class TestClassify:
    def test_adjacent_is_proper(self):
        layout = layout_from_groups([0, 1, 2])
        assert classify_edge(layout, (0, 1)) .kind == PROPER

    def test_same_axis_is_intra(self):
        layout = layout_from_groups([0, 0, 1, 2])
        assert classify_edge(layout, (0, 1)).kind == INTRA

    def test_long_carries_span(self):
        layout = layout_from_groups([0, 1, 2, 3, 4])
        cls = classify_edge(layout, (0, 2))
        assert cls.kind == LONG and cls.span == 2

    def test_counts_partition_all_edges(self):
        g, groups = bundled_coauthors()
        layout = layout_from_groups(groups)
        counts = class_counts(layout, g)
        assert sum(counts.values()) == g.m

    def test_case_study_split(self):
        from hiveplot.axisorder import brute_force_order, inter_group_weights
        from hiveplot.partition import partition_from_membership

        g, groups = bundled_coauthors()
        p = partition_from_membership(groups)
        order = brute_force_order(inter_group_weights(g, p))
        layout = layout_from_groups(groups, axis_order=order)
        counts = class_counts(layout, g)
        assert counts == {INTRA: 172, PROPER: 12, LONG: 6}


class TestSubdivision:
    def test_span3_makes_two_dummies(self):
        g, _ = build_graph([(str(i), str((i + 1) % 7)) for i in range(7)] + [("0", "3")])
        layout = layout_from_groups([0, 1, 2, 3, 4, 5, 6])
        al = subdivide_long_edges(g, layout)
        assert len(al.dummies) == 2
        assert sorted(d.axis for d in al.dummies) == [1, 2]

    def test_proper_edge_untouched(self):
        g, _ = build_graph([("a", "b")])
        layout = layout_from_groups([0, 1])
        al = subdivide_long_edges(g, layout)
        assert not al.dummies
        assert al.chain_edges == ((0, 1),)

    def test_half_circle_tie_is_deterministic(self):
        # span exactly k/2: both routes have the same dummy count; the
        # chosen one starts clockwise from the lower-position endpoint
        g, _ = build_graph([("0", "3")], vertices=[str(i) for i in range(6)])
        for order in [tuple(range(6)), (3, 1, 2, 0, 4, 5)]:
            layout = layout_from_groups([0, 1, 2, 3, 4, 5], axis_order=order)
            route = long_edge_route(layout, 0, 3)
            assert len(route) == 2
            al = subdivide_long_edges(g, layout)
            assert len(al.dummies) == 2
        # identity order: route walks positions 1, 2
        layout = layout_from_groups([0, 1, 2, 3, 4, 5])
        assert long_edge_route(layout, 0, 3) == [1, 2]

    def test_chain_edge_bookkeeping(self):
        # total proper edges after = original proper + sum of long spans
        g, groups = bundled_coauthors()
        from hiveplot.axisorder import brute_force_order, inter_group_weights
        from hiveplot.partition import partition_from_membership

        p = partition_from_membership(groups)
        order = brute_force_order(inter_group_weights(g, p))
        layout = layout_from_groups(groups, axis_order=order)
        spans = [classify_edge(layout, e) for e in g.edges]
        proper = sum(1 for c in spans if c.kind == PROPER)
        long_spans = sum(c.span for c in spans if c.kind == LONG)
        expected_dummies = sum(c.span - 1 for c in spans if c.kind == LONG)
        al = subdivide_long_edges(g, layout)
        assert len(al.dummies) == expected_dummies
        assert len(al.chain_edges) == proper + long_spans
        assert validate_layout(al) == []


class TestValidate:
    def test_valid_layout_ok(self):
        layout = layout_from_groups([0, 0, 1, 1, 2])
        assert validate_layout(layout) == []

    def test_repeated_rank_flagged(self):
        layout = HiveLayout(
            k=2, axis_of=(0, 0, 1), axis_order=(0, 1), rank=(0, 0, 0), gaps=1
        )
        problems = validate_layout(layout)
        assert any("rank not bijective" in p for p in problems)

    def test_dummy_before_real_flagged(self):
        g, _ = build_graph([("a", "c")], vertices=["a", "b", "c", "d"])
        layout = layout_from_groups([0, 1, 2, 3])
        # edge (a, c) spans two hops, one dummy lands on axis 1 next to b
        al = subdivide_long_edges(g, layout)
        assert len(al.dummies) == 1
        dummy = al.dummies[0].id
        bad = al.with_arrangement(
            al.dummies[0].axis,
            AxisArrangement(gaps=((),), segments=((dummy, 1),)),
        )
        problems = validate_layout(bad)
        assert any("dummy" in p for p in problems)

    def test_nonsurjective_alpha_flagged(self):
        layout = HiveLayout(
            k=3, axis_of=(0, 1), axis_order=(0, 1, 2), rank=(0, 0), gaps=1
        )
        problems = validate_layout(layout)
        assert any("surjective" in p for p in problems)
