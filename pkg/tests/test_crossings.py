"""Crossing counters against brute-force oracles."""

import random

from hypothesis import given, settings, strategies as st

from hiveplot import _kernels_py
from hiveplot.crossings import (
    count_inter_axis_crossings,
    count_intra_axis_crossings,
)
from hiveplot.graph import Graph, build_graph
from hiveplot.kernels import BACKEND, count_inversions
from hiveplot.layout import HiveLayout, layout_from_groups, subdivide_long_edges

from oracles import (
    brute_inversions,
    pairwise_inter_crossings,
    pairwise_intra_crossings,
    random_layout_instance,
)


class TestKernel:
    @given(st.lists(st.integers(0, 50), max_size=200))
    def test_matches_brute_force(self, values):
        assert count_inversions(values) == brute_inversions(values)

    @given(st.lists(st.integers(0, 50), max_size=200))
    def test_pure_backend_agrees(self, values):
        assert _kernels_py.count_inversions(values) == brute_inversions(values)

    def test_backend_selected(self):
        assert BACKEND in ("cython", "python")


def two_axis_layout(rank):
    return HiveLayout(
        k=2, axis_of=(0, 0, 1, 1), axis_order=(0, 1), rank=tuple(rank), gaps=1
    )


class TestInterAxis:
    def test_single_crossing(self):
        # (u1,v2) and (u2,v1) interleave
        g, _ = build_graph([("u1", "v2"), ("u2", "v1")],
                           vertices=["u1", "u2", "v1", "v2"])
        al = subdivide_long_edges(g, two_axis_layout([0, 1, 0, 1]))
        assert count_inter_axis_crossings(al) == 1

    def test_parallel_edges(self):
        g, _ = build_graph([("u1", "v1"), ("u2", "v2")],
                           vertices=["u1", "u2", "v1", "v2"])
        al = subdivide_long_edges(g, two_axis_layout([0, 1, 0, 1]))
        assert count_inter_axis_crossings(al) == 0

    def test_shared_endpoint_never_crosses(self):
        g, _ = build_graph([("u1", "v1"), ("u1", "v2")],
                           vertices=["u1", "u2", "v1", "v2"])
        al = subdivide_long_edges(g, two_axis_layout([0, 1, 0, 1]))
        assert count_inter_axis_crossings(al) == 0

    def test_fifty_random_layouts_match_oracle(self):
        rng = random.Random(2024)
        for _ in range(50):
            _, al = random_layout_instance(rng, n_max=30)
            assert count_inter_axis_crossings(al) == pairwise_inter_crossings(al)


class TestIntraAxis:
    def one_axis(self, n, edges, rank=None):
        g = Graph([str(i) for i in range(n)], edges)
        layout = HiveLayout(
            k=1,
            axis_of=(0,) * n,
            axis_order=(0,),
            rank=tuple(rank or range(n)),
            gaps=1,
        )
        return layout, g

    def test_nested_intervals_cross(self):
        layout, g = self.one_axis(4, [(0, 3), (1, 2)])
        assert count_intra_axis_crossings(layout, g) == 1

    def test_single_edge(self):
        layout, g = self.one_axis(2, [(0, 1)])
        assert count_intra_axis_crossings(layout, g) == 0

    def test_disjoint_intervals(self):
        layout, g = self.one_axis(4, [(0, 1), (2, 3)])
        assert count_intra_axis_crossings(layout, g) == 0

    def test_interleaved_intervals_do_not_cross(self):
        # drawn with identical orders on both copies the curves stay parallel
        layout, g = self.one_axis(4, [(0, 2), (1, 3)])
        assert count_intra_axis_crossings(layout, g) == 0

    def test_random_instances_match_oracle(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randrange(4, 16)
            k = rng.randrange(1, 4)
            membership = [rng.randrange(k) for _ in range(n)]
            for a in range(k):
                if a not in membership:
                    membership[rng.randrange(n)] = a
            from hiveplot.partition import partition_from_membership

            p = partition_from_membership(membership)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
            g = Graph([str(i) for i in range(n)], edges)
            rank = [0] * n
            counters = [0] * p.k
            order = list(range(n))
            rng.shuffle(order)
            for v in order:
                rank[v] = counters[p.membership[v]]
                counters[p.membership[v]] += 1
            layout = HiveLayout(
                k=p.k,
                axis_of=tuple(p.membership),
                axis_order=tuple(range(p.k)),
                rank=tuple(rank),
                gaps=1,
            )
            assert count_intra_axis_crossings(layout, g) == pairwise_intra_crossings(
                layout, g
            )
