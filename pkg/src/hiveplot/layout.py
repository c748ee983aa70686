"""Combinatorial hive-plot layout model.

A layout assigns every vertex to one of k radial axes (``axis_of``), gives
the axes a cyclic order (``axis_order``) and ranks the vertices within each
axis (``rank``).  Edges are classified by the cyclic distance (span) of
their endpoint axes: same axis (intra), adjacent axes (proper), further
apart (long).  Long edges are subdivided into chains of proper edges via
dummy vertices confined to per-axis gaps; the resulting per-axis
interleaving of gap and segment lists is the drawing order everything
downstream (crossing counts, geometry) works on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graph import Graph


class LayoutError(ValueError):
    """Raised when an operation receives a structurally invalid layout."""


@dataclass(frozen=True)
class HiveLayout:
    """Vertex-to-axis assignment plus cyclic axis order and per-axis ranks.

    axis_of[v]    axis id of vertex v (0..k-1)
    axis_order[a] cyclic position of axis a (bijection onto 0..k-1)
    rank[v]       position of v among the vertices of its axis
    gaps          number of gaps per axis (>= 1)
    """

    k: int
    axis_of: tuple[int, ...]
    axis_order: tuple[int, ...]
    rank: tuple[int, ...]
    gaps: int = 1

    def axes_by_position(self) -> list[int]:
        """Axis ids listed clockwise, i.e. inverse of axis_order."""
        inverse = [0] * self.k
        for axis, pos in enumerate(self.axis_order):
            inverse[pos] = axis
        return inverse

    def axis_members(self) -> list[list[int]]:
        """Vertices of each axis, listed in rank order."""
        members: list[list[int]] = [[] for _ in range(self.k)]
        for v, a in enumerate(self.axis_of):
            members[a].append(v)
        for a in range(self.k):
            members[a].sort(key=lambda v: self.rank[v])
        return members


def layout_from_groups(
    groups: list[int] | tuple[int, ...],
    axis_order: tuple[int, ...] | None = None,
    gaps: int = 1,
) -> HiveLayout:
    """Assemble a layout from a per-vertex group list.

    Axis order defaults to the identity; ranks default to vertex-id order
    within each group.
    """
    k = max(groups) + 1 if groups else 0
    if sorted(set(groups)) != list(range(k)):
        raise LayoutError("groups must be dense 0..k-1")
    if axis_order is None:
        axis_order = tuple(range(k))
    counters = [0] * k
    rank = [0] * len(groups)
    for v, a in enumerate(groups):
        rank[v] = counters[a]
        counters[a] += 1
    return HiveLayout(
        k=k,
        axis_of=tuple(groups),
        axis_order=tuple(axis_order),
        rank=tuple(rank),
        gaps=gaps,
    )


def cyclic_span(k: int, pos_a: int, pos_b: int) -> int:
    """Cyclic distance between two ring positions: min of both directions."""
    d = (pos_a - pos_b) % k
    return min(d, k - d)


def span(layout: HiveLayout, axis_a: int, axis_b: int) -> int:
    """Span of two axes under the layout's cyclic order."""
    if not (0 <= axis_a < layout.k and 0 <= axis_b < layout.k):
        raise LayoutError(f"unknown axis id ({axis_a}, {axis_b}) for k={layout.k}")
    return cyclic_span(layout.k, layout.axis_order[axis_a], layout.axis_order[axis_b])


PROPER = "proper"
LONG = "long"
INTRA = "intra"


@dataclass(frozen=True)
class EdgeClass:
    kind: str  # one of PROPER/LONG/INTRA
    span: int


def classify_edge(layout: HiveLayout, edge: tuple[int, int]) -> EdgeClass:
    u, v = edge
    if not (0 <= u < len(layout.axis_of) and 0 <= v < len(layout.axis_of)):
        raise LayoutError(f"edge ({u}, {v}) endpoint not in layout")
    s = span(layout, layout.axis_of[u], layout.axis_of[v])
    if s == 0:
        return EdgeClass(INTRA, 0)
    if s == 1:
        return EdgeClass(PROPER, 1)
    return EdgeClass(LONG, s)


def class_counts(layout: HiveLayout, graph: Graph) -> dict[str, int]:
    counts = {INTRA: 0, PROPER: 0, LONG: 0}
    for edge in graph.edges:
        counts[classify_edge(layout, edge).kind] += 1
    return counts


def long_edge_route(layout: HiveLayout, u: int, v: int) -> list[int]:
    """Axis ids strictly between the endpoints along the routing direction.

    Routing always follows the shorter cyclic direction; an exact half-circle
    tie is broken by walking clockwise from the endpoint on the lower-position
    axis, which is deterministic and seed-free.
    """
    k = layout.k
    pu = layout.axis_order[layout.axis_of[u]]
    pv = layout.axis_order[layout.axis_of[v]]
    d_fwd = (pv - pu) % k  # clockwise hops u -> v
    d_bwd = (pu - pv) % k
    if d_fwd < d_bwd:
        start, hops = pu, d_fwd
    elif d_bwd < d_fwd:
        start, hops = pv, d_bwd
    else:
        start, hops = (pu, d_fwd) if pu < pv else (pv, d_bwd)
    by_pos = layout.axes_by_position()
    return [by_pos[(start + step) % k] for step in range(1, hops)]


@dataclass(frozen=True)
class DummyVertex:
    """Subdivision point of a long edge, confined to a gap on ``axis``."""

    id: int
    axis: int
    edge: tuple[int, int]
    chain_index: int  # 0-based index along the edge's dummy chain


@dataclass(frozen=True)
class AxisArrangement:
    """Gap and segment lists of one axis.

    With g gaps the drawing order is gap0, seg0, gap1, seg1, ..., gap(g-1);
    the single-gap case degenerates to seg0 followed by one trailing gap.
    Segments hold real vertices, gaps hold dummies.
    """

    gaps: tuple[tuple[int, ...], ...]
    segments: tuple[tuple[int, ...], ...]

    def drawing_order(self) -> tuple[int, ...]:
        if len(self.gaps) == 1:
            return self.segments[0] + self.gaps[0]
        order: list[int] = []
        for i, gap in enumerate(self.gaps):
            order.extend(gap)
            if i < len(self.segments):
                order.extend(self.segments[i])
        return tuple(order)


def segment_capacity(real_count: int, g: int) -> int:
    """Max real vertices per axis segment under the even-split rule."""
    if g <= 1:
        return real_count
    return ceil(real_count / (g - 1))


def even_split_arrangement(
    real_order: list[int], dummy_order: list[int], g: int
) -> AxisArrangement:
    """Bucket reals into segments evenly and append all dummies to the last
    gap, preserving both given orders."""
    if g == 1:
        return AxisArrangement(
            gaps=(tuple(dummy_order),), segments=(tuple(real_order),)
        )
    cap = segment_capacity(len(real_order), g)
    segments: list[list[int]] = [[] for _ in range(g - 1)]
    j = 0
    for v in real_order:
        if cap and len(segments[j]) >= cap and j < g - 2:
            j += 1
        segments[j].append(v)
    gaps: list[list[int]] = [[] for _ in range(g)]
    gaps[g - 1] = list(dummy_order)
    return AxisArrangement(
        gaps=tuple(tuple(x) for x in gaps),
        segments=tuple(tuple(x) for x in segments),
    )


@dataclass(frozen=True)
class AugmentedLayout:
    """Layout after long-edge subdivision.

    ``chain_edges`` is the full proper-edge set: original proper edges plus
    the chain pieces replacing each long edge.  Items (reals and dummies)
    share one id space: reals 0..n-1, dummies n..n+d-1.
    """

    base: HiveLayout
    n_real: int
    dummies: tuple[DummyVertex, ...]
    arrangements: tuple[AxisArrangement, ...]
    chain_edges: tuple[tuple[int, int], ...]
    intra_edges: tuple[tuple[int, int], ...]

    @property
    def n_items(self) -> int:
        return self.n_real + len(self.dummies)

    def axis_of_item(self, item: int) -> int:
        if item < self.n_real:
            return self.base.axis_of[item]
        return self.dummies[item - self.n_real].axis

    def drawing_positions(self) -> list[int]:
        """Global item -> position-in-axis-drawing-order array."""
        pos = [0] * self.n_items
        for arr in self.arrangements:
            for i, item in enumerate(arr.drawing_order()):
                pos[item] = i
        return pos

    def axis_item_counts(self) -> list[int]:
        counts = [0] * self.base.k
        for a, arr in enumerate(self.arrangements):
            counts[a] = len(arr.drawing_order())
        return counts

    def real_ranks(self) -> tuple[int, ...]:
        """Per-vertex ranks induced by the current drawing order."""
        rank = [0] * self.n_real
        for arr in self.arrangements:
            i = 0
            for item in arr.drawing_order():
                if item < self.n_real:
                    rank[item] = i
                    i += 1
        return tuple(rank)

    def with_arrangement(self, axis: int, arrangement: AxisArrangement) -> "AugmentedLayout":
        arrangements = list(self.arrangements)
        arrangements[axis] = arrangement
        base = HiveLayout(
            k=self.base.k,
            axis_of=self.base.axis_of,
            axis_order=self.base.axis_order,
            rank=self.base.rank,
            gaps=self.base.gaps,
        )
        out = AugmentedLayout(
            base=base,
            n_real=self.n_real,
            dummies=self.dummies,
            arrangements=tuple(arrangements),
            chain_edges=self.chain_edges,
            intra_edges=self.intra_edges,
        )
        return resync_ranks(out)


def resync_ranks(al: AugmentedLayout) -> AugmentedLayout:
    """Rebuild base.rank from the drawing order so both views agree."""
    base = al.base
    new_rank = al.real_ranks()
    if new_rank == base.rank:
        return al
    return AugmentedLayout(
        base=HiveLayout(
            k=base.k,
            axis_of=base.axis_of,
            axis_order=base.axis_order,
            rank=new_rank,
            gaps=base.gaps,
        ),
        n_real=al.n_real,
        dummies=al.dummies,
        arrangements=al.arrangements,
        chain_edges=al.chain_edges,
        intra_edges=al.intra_edges,
    )


def subdivide_long_edges(graph: Graph, layout: HiveLayout) -> AugmentedLayout:
    """Replace every long edge by a chain of proper edges through dummies.

    Each long edge contributes span-1 dummies, one per intermediate axis
    along the routing direction.  Real ranks are preserved; reals are
    bucketed evenly into segments and all dummies start in the outermost
    gap of their axis (any gap is equally valid at this point, the sweeps
    re-place them).
    """
    n = graph.n
    dummies: list[DummyVertex] = []
    chain_edges: list[tuple[int, int]] = []
    intra_edges: list[tuple[int, int]] = []
    for u, v in graph.edges:
        cls = classify_edge(layout, (u, v))
        if cls.kind == INTRA:
            intra_edges.append((u, v))
            continue
        if cls.kind == PROPER:
            chain_edges.append((u, v))
            continue
        route = long_edge_route(layout, u, v)
        # route runs from one endpoint to the other; orient the chain from
        # the endpoint adjacent to route[0].
        first, last = route[0], route[-1]
        if span(layout, layout.axis_of[u], first) == 1:
            head, tail = u, v
        else:
            head, tail = v, u
        assert span(layout, layout.axis_of[tail], last) == 1
        prev = head
        for idx, axis in enumerate(route):
            dummy_id = n + len(dummies)
            dummies.append(DummyVertex(id=dummy_id, axis=axis, edge=(u, v), chain_index=idx))
            chain_edges.append((prev, dummy_id))
            prev = dummy_id
        chain_edges.append((prev, tail))

    members = layout.axis_members()
    dummies_per_axis: list[list[int]] = [[] for _ in range(layout.k)]
    for d in dummies:
        dummies_per_axis[d.axis].append(d.id)
    arrangements = tuple(
        even_split_arrangement(members[a], dummies_per_axis[a], layout.gaps)
        for a in range(layout.k)
    )
    return AugmentedLayout(
        base=layout,
        n_real=n,
        dummies=tuple(dummies),
        arrangements=arrangements,
        chain_edges=tuple(chain_edges),
        intra_edges=tuple(intra_edges),
    )


def validate_layout(layout: HiveLayout | AugmentedLayout) -> list[str]:
    """Check every structural invariant; returns all violations (empty = ok)."""
    if isinstance(layout, AugmentedLayout):
        return _validate_augmented(layout)
    return _validate_base(layout)


def _validate_base(layout: HiveLayout) -> list[str]:
    problems: list[str] = []
    k = layout.k
    if k <= 0:
        problems.append("k must be positive")
        return problems
    if layout.gaps < 1:
        problems.append("gap count must be >= 1")
    if sorted(layout.axis_order) != list(range(k)):
        problems.append("axis_order not a bijection onto 0..k-1")
    seen_axes = set(layout.axis_of)
    if not seen_axes.issubset(range(k)):
        problems.append("axis_of maps outside 0..k-1")
    elif seen_axes != set(range(k)):
        problems.append("axis_of not surjective: some axis has no vertices")
    members: list[list[int]] = [[] for _ in range(k)]
    for v, a in enumerate(layout.axis_of):
        if 0 <= a < k:
            members[a].append(v)
    for a in range(k):
        ranks = sorted(layout.rank[v] for v in members[a])
        if ranks != list(range(len(members[a]))):
            problems.append(f"rank not bijective on axis {a}")
    return problems


def _validate_augmented(al: AugmentedLayout) -> list[str]:
    problems = _validate_base(al.base)
    base = al.base
    g = base.gaps
    expected_gaps = g
    expected_segments = 1 if g == 1 else g - 1
    dummy_axis = {d.id: d.axis for d in al.dummies}

    # dummy counts per long edge
    by_edge: dict[tuple[int, int], list[DummyVertex]] = {}
    for d in al.dummies:
        by_edge.setdefault(d.edge, []).append(d)
    for edge, ds in by_edge.items():
        u, v = edge
        s = span(base, base.axis_of[u], base.axis_of[v])
        if len(ds) != s - 1:
            problems.append(f"edge {edge} has {len(ds)} dummies, expected {s - 1}")
        route = long_edge_route(base, u, v)
        axes = [d.axis for d in sorted(ds, key=lambda d: d.chain_index)]
        if axes != route and axes != route[::-1]:
            problems.append(f"edge {edge} dummies not on the route axes")

    all_items: set[int] = set()
    for a, arr in enumerate(al.arrangements):
        if len(arr.gaps) != expected_gaps or len(arr.segments) != expected_segments:
            problems.append(f"axis {a}: arrangement has wrong gap/segment shape")
            continue
        reals = [v for seg in arr.segments for v in seg]
        cap = segment_capacity(len(reals), g)
        for seg in arr.segments:
            bad = [v for v in seg if v >= al.n_real]
            if bad:
                problems.append(f"axis {a}: dummy placement — dummy in a segment")
            if g > 1 and len(seg) > cap:
                problems.append(f"axis {a}: segment holds {len(seg)} > cap {cap}")
        for gap in arr.gaps:
            bad = [v for v in gap if v < al.n_real]
            if bad:
                problems.append(f"axis {a}: real vertex in a gap")
        for item in arr.drawing_order():
            if item in all_items:
                problems.append(f"item {item} appears on multiple axes")
            all_items.add(item)
            if item < al.n_real:
                if base.axis_of[item] != a:
                    problems.append(f"vertex {item} drawn on wrong axis {a}")
            elif dummy_axis.get(item) != a:
                problems.append(f"dummy {item} drawn on wrong axis {a}")

    expected_items = set(range(al.n_real)) | set(dummy_axis)
    if all_items != expected_items:
        problems.append("arrangements do not cover exactly all items")

    # drawing order must agree with base ranks
    if al.real_ranks() != base.rank:
        problems.append("base ranks out of sync with drawing order")

    for a, b in al.chain_edges:
        pa = base.axis_order[al.axis_of_item(a)]
        pb = base.axis_order[al.axis_of_item(b)]
        if cyclic_span(base.k, pa, pb) != 1:
            problems.append(f"chain edge ({a}, {b}) is not proper")
    return problems
