"""Crossing minimization: the third pipeline stage.

Runs in two phases on the subdivided layout.  Phase 1 sweeps the axes in
alternating clockwise/counter-clockwise order, re-sorting each axis by the
barycenter of neighbor positions on the two adjacent axes while the gap
procedure keeps dummies legal.  Phase 2 reduces intra-axis crossings per
axis with the extra constraint that vertices touching inter-axis edges
(and all dummies) keep their relative order.

Barycenter sweeps can oscillate, so both phases snapshot the best layout
seen (by their own crossing kind) and return that; results are therefore
never worse than the initial random order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .crossings import CrossingReport, count_inter_axis_crossings, crossing_report
from .graph import Graph
from .layout import (
    AugmentedLayout,
    AxisArrangement,
    HiveLayout,
    segment_capacity,
    subdivide_long_edges,
)

DEFAULT_PHASE1_CYCLES = 20
DEFAULT_PHASE2_ITER = 10


class _SweepState:
    """Mutable working copy of an augmented layout used by the sweeps."""

    def __init__(self, al: AugmentedLayout):
        base = al.base
        self.source = al
        self.k = base.k
        self.g = base.gaps
        self.n_real = al.n_real
        self.n_items = al.n_items
        self.axis_of = list(base.axis_of) + [d.axis for d in al.dummies]
        self.gaps = [[list(gap) for gap in arr.gaps] for arr in al.arrangements]
        self.segments = [[list(seg) for seg in arr.segments] for arr in al.arrangements]
        self.chain_adj: list[list[int]] = [[] for _ in range(self.n_items)]
        for a, b in al.chain_edges:
            self.chain_adj[a].append(b)
            self.chain_adj[b].append(a)
        self.intra_adj: list[list[int]] = [[] for _ in range(self.n_items)]
        for a, b in al.intra_edges:
            self.intra_adj[a].append(b)
            self.intra_adj[b].append(a)
        self.pos = [0] * self.n_items
        self.count = [0] * self.k
        for axis in range(self.k):
            self._refresh(axis)

    def drawing_order(self, axis: int) -> list[int]:
        gaps, segments = self.gaps[axis], self.segments[axis]
        if self.g == 1:
            return segments[0] + gaps[0]
        order: list[int] = []
        for i, gap in enumerate(gaps):
            order.extend(gap)
            if i < len(segments):
                order.extend(segments[i])
        return order

    def _refresh(self, axis: int) -> None:
        order = self.drawing_order(axis)
        self.count[axis] = len(order)
        for i, item in enumerate(order):
            self.pos[item] = i

    def normalized_pos(self, item: int) -> float:
        axis = self.axis_of[item]
        return self.pos[item] / self.count[axis] if self.count[axis] else 0.0

    def chain_barycenter(self, item: int) -> float:
        """Mean normalized neighbor position over the adjacent axes; items
        without proper edges keep their own position."""
        nbrs = self.chain_adj[item]
        if not nbrs:
            return self.normalized_pos(item)
        return sum(self.normalized_pos(v) for v in nbrs) / len(nbrs)

    def intra_barycenter(self, item: int) -> float:
        nbrs = self.intra_adj[item]
        if not nbrs:
            return self.normalized_pos(item)
        return sum(self.normalized_pos(v) for v in nbrs) / len(nbrs)

    def _gap_side_costs(self, dummy: int, others: list[int]) -> tuple[int, int]:
        """Crossings of the dummy's edges against the others' edges when the
        dummy is drawn before all of them vs after all of them."""
        before = after = 0
        for x in self.chain_adj[dummy]:
            ax, px = self.axis_of[x], self.pos[x]
            for s in others:
                for y in self.chain_adj[s]:
                    if self.axis_of[y] != ax:
                        continue
                    py = self.pos[y]
                    if px > py:
                        before += 1
                    elif px < py:
                        after += 1
        return before, after

    def assign_axis(self, axis: int, ranked: list[int]) -> bool:
        """Distribute a sorted item sequence into segments and gaps.

        Reals fill segments evenly (capacity ceil(|reals| / (g-1))); each
        dummy goes to the gap flanking the current segment that induces
        fewer crossings against the items the choice actually reorders:
        the reals already in the segment and the dummies already in the
        right-hand gap (left-gap occupants precede the dummy either way).
        Ties go left.  Once a dummy of the current segment went right,
        later ones follow, which keeps the dummy order intact.
        """
        g = self.g
        if g == 1:
            new_segments = [[v for v in ranked if v < self.n_real]]
            new_gaps = [[v for v in ranked if v >= self.n_real]]
        else:
            reals = sum(1 for v in ranked if v < self.n_real)
            cap = segment_capacity(reals, g)
            new_segments = [[] for _ in range(g - 1)]
            new_gaps = [[] for _ in range(g)]
            j = 0
            right_locked = False
            for item in ranked:
                if item < self.n_real:
                    if cap and len(new_segments[j]) >= cap and j < g - 2:
                        j += 1
                        right_locked = False
                    new_segments[j].append(item)
                else:
                    if right_locked:
                        new_gaps[j + 1].append(item)
                        continue
                    others = new_segments[j] + new_gaps[j + 1]
                    cost_left, cost_right = self._gap_side_costs(item, others)
                    if cost_right < cost_left:
                        new_gaps[j + 1].append(item)
                        right_locked = True
                    else:
                        new_gaps[j].append(item)
        changed = new_gaps != self.gaps[axis] or new_segments != self.segments[axis]
        if changed:
            self.gaps[axis] = new_gaps
            self.segments[axis] = new_segments
            self._refresh(axis)
        return changed

    def sort_axis(self, axis: int, values: dict[int, float]) -> bool:
        """Stable sort of the axis drawing order by value, then gap
        assignment; ties keep the previous drawing order."""
        ranked = sorted(self.drawing_order(axis), key=lambda item: values[item])
        return self.assign_axis(axis, ranked)

    def arrangement(self, axis: int) -> AxisArrangement:
        return AxisArrangement(
            gaps=tuple(tuple(gap) for gap in self.gaps[axis]),
            segments=tuple(tuple(seg) for seg in self.segments[axis]),
        )

    def restore(self, axis: int, arrangement: AxisArrangement) -> None:
        self.gaps[axis] = [list(gap) for gap in arrangement.gaps]
        self.segments[axis] = [list(seg) for seg in arrangement.segments]
        self._refresh(axis)

    def axis_intra_crossings(self, axis: int) -> int:
        """Nested-interval count over this axis's intra edges."""
        intervals = []
        for u, v in self.source.intra_edges:
            if self.axis_of[u] != axis:
                continue
            pu, pv = self.pos[u], self.pos[v]
            intervals.append((pu, pv) if pu < pv else (pv, pu))
        intervals.sort()
        total = 0
        for i in range(len(intervals)):
            for j in range(i + 1, len(intervals)):
                if intervals[i][0] < intervals[j][0] and intervals[j][1] < intervals[i][1]:
                    total += 1
        return total

    def snapshot(self) -> AugmentedLayout:
        al = self.source
        arrangements = tuple(self.arrangement(axis) for axis in range(self.k))
        rank = [0] * self.n_real
        for axis in range(self.k):
            i = 0
            for item in self.drawing_order(axis):
                if item < self.n_real:
                    rank[item] = i
                    i += 1
        base = al.base
        return AugmentedLayout(
            base=HiveLayout(
                k=base.k,
                axis_of=base.axis_of,
                axis_order=base.axis_order,
                rank=tuple(rank),
                gaps=base.gaps,
            ),
            n_real=al.n_real,
            dummies=al.dummies,
            arrangements=arrangements,
            chain_edges=al.chain_edges,
            intra_edges=al.intra_edges,
        )


def barycenter_position(item: int, al: AugmentedLayout) -> float:
    """Mean of neighbor positions over the adjacent axes, each normalized
    by its axis item count; items without proper edges keep their own
    normalized position."""
    return _SweepState(al).chain_barycenter(item)


def sort_axis_with_gaps(
    axis: int, positions: dict[int, float], al: AugmentedLayout
) -> AxisArrangement:
    """One gap-constrained axis sort as a pure function: sort the axis items
    by the given target positions, re-bucket, and return the arrangement."""
    state = _SweepState(al)
    state.sort_axis(axis, positions)
    return state.arrangement(axis)


def _phase1(state: _SweepState, max_cycles: int) -> int:
    """Alternating-direction barycenter sweeps; restores the best-seen
    arrangement by inter-axis crossing count.  Returns cycles executed."""
    by_pos = [0] * state.k
    for axis, p in enumerate(state.source.base.axis_order):
        by_pos[p] = axis
    best = [state.arrangement(a) for a in range(state.k)]
    best_cost = count_inter_axis_crossings(state.snapshot())
    cycles = 0
    for cycle in range(max_cycles):
        positions = range(state.k) if cycle % 2 == 0 else range(state.k - 1, -1, -1)
        changed = False
        for p in positions:
            axis = by_pos[p]
            values = {
                item: state.chain_barycenter(item)
                for item in state.drawing_order(axis)
            }
            if state.sort_axis(axis, values):
                changed = True
        cycles += 1
        cost = count_inter_axis_crossings(state.snapshot())
        if cost < best_cost:
            best_cost = cost
            best = [state.arrangement(a) for a in range(state.k)]
        if not changed:
            break
    for axis in range(state.k):
        state.restore(axis, best[axis])
    return cycles


def _phase2(state: _SweepState, max_iter: int) -> None:
    """Per-axis constrained barycenter over intra-axis edges.

    Vertices incident to inter-axis edges and all dummies form a frozen
    subsequence; free vertices are merged among them by barycenter value
    (two-pointer merge, frozen item first on ties).  Axes without free
    vertices have nothing to optimize and are skipped.
    """
    for axis in range(state.k):
        order = state.drawing_order(axis)
        free = [
            item
            for item in order
            if item < state.n_real and not state.chain_adj[item]
        ]
        if not free:
            continue
        free_set = set(free)
        best = state.arrangement(axis)
        best_cost = state.axis_intra_crossings(axis)
        for _ in range(max_iter):
            order = state.drawing_order(axis)
            frozen = [item for item in order if item not in free_set]
            movable = sorted(
                (item for item in order if item in free_set),
                key=lambda item: (state.intra_barycenter(item), state.pos[item]),
            )
            frozen_vals = [state.normalized_pos(item) for item in frozen]
            movable_vals = [state.intra_barycenter(item) for item in movable]
            merged: list[int] = []
            i = j = 0
            while i < len(frozen) and j < len(movable):
                if frozen_vals[i] <= movable_vals[j]:
                    merged.append(frozen[i])
                    i += 1
                else:
                    merged.append(movable[j])
                    j += 1
            merged.extend(frozen[i:])
            merged.extend(movable[j:])
            if not state.assign_axis(axis, merged):
                break
            cost = state.axis_intra_crossings(axis)
            if cost < best_cost:
                best_cost = cost
                best = state.arrangement(axis)
        if state.axis_intra_crossings(axis) > best_cost:
            state.restore(axis, best)


def phase1_minimize(al: AugmentedLayout, max_iter: int = DEFAULT_PHASE1_CYCLES) -> AugmentedLayout:
    """Phase-1 sweeps on an already subdivided layout."""
    state = _SweepState(al)
    _phase1(state, max_iter)
    return state.snapshot()


def phase2_intra(al: AugmentedLayout, max_iter: int = DEFAULT_PHASE2_ITER) -> AugmentedLayout:
    """Phase-2 constrained intra-axis pass on an already subdivided layout."""
    state = _SweepState(al)
    _phase2(state, max_iter)
    return state.snapshot()


@dataclass(frozen=True)
class MinimizeResult:
    layout: AugmentedLayout
    report: CrossingReport
    phase1_cycles: int


def minimize_crossings(
    layout: HiveLayout,
    graph: Graph,
    max_iter: int = DEFAULT_PHASE1_CYCLES,
    max_iter_intra: int = DEFAULT_PHASE2_ITER,
    seed: int = 0,
) -> MinimizeResult:
    """Full stage-3 driver: random initial per-axis orders from the seed,
    subdivision, phase 1, phase 2, final crossing report."""
    rng = random.Random(seed)
    members = [[] for _ in range(layout.k)]
    for v in range(len(layout.axis_of)):
        members[layout.axis_of[v]].append(v)
    rank = [0] * len(layout.axis_of)
    for axis in range(layout.k):
        rng.shuffle(members[axis])
        for i, v in enumerate(members[axis]):
            rank[v] = i
    seeded = HiveLayout(
        k=layout.k,
        axis_of=layout.axis_of,
        axis_order=layout.axis_order,
        rank=tuple(rank),
        gaps=layout.gaps,
    )
    al = subdivide_long_edges(graph, seeded)
    state = _SweepState(al)
    cycles = _phase1(state, max_iter)
    _phase2(state, max_iter_intra)
    final = state.snapshot()
    return MinimizeResult(
        layout=final,
        report=crossing_report(final, graph),
        phase1_cycles=cycles,
    )
