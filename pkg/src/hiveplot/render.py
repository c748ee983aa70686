"""Geometry resolution and static SVG rendering.

Axes are straight lines from a common center at equal angles (vertical-up
is angle 0, angles grow clockwise).  A vertex's radial slot is its drawing
order index over the axis item count, so occupied gaps consume radial
space and empty gaps none; the visible axis line is split into solid
pieces around occupied gap slots, which is what lets long-edge curves
pass without touching any drawn axis segment.

Expanded axes become two parallel radial lines: the corridor between them
takes ``intra_inter_split`` of the axis's angular band and hosts the
intra-axis edges; inter-axis edges attach to whichever copy faces their
neighbor.  Edges are cubic Bezier chains with control handles
perpendicular to the host lines; long edges pass through their dummy
anchors, one cubic per hop.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from importlib import resources

from .crossings import CrossingReport
from .layout import INTRA, LONG, PROPER, AugmentedLayout, span as axis_span

HANDLE_FRACTION = 0.35  # control-handle length as a fraction of the chord
INNER_RADIUS_FRACTION = 0.08


@dataclass(frozen=True)
class RenderStyle:
    canvas_size: int = 900
    axis_length: float = 0.84
    expanded_axes: frozenset[int] = field(default_factory=frozenset)
    intra_inter_split: float = 0.4
    symmetric_intra: bool = False
    label_band_deg: float = 25.0
    label_rotation_deg: float = 45.0
    vertex_radius: float = 0.008
    scale_degree: bool = False
    show_labels: bool = True

    def __post_init__(self) -> None:
        if not (0.0 < self.intra_inter_split < 1.0):
            raise ValueError("intra_inter_split must be in (0, 1)")
        if not (0.0 <= self.label_band_deg <= 90.0):
            raise ValueError("label_band_deg must be in [0, 90]")
        if not (0.0 <= self.label_rotation_deg <= 90.0):
            raise ValueError("label_rotation_deg must be in [0, 90]")


def _load_colormap() -> list[str]:
    with resources.files("hiveplot.data").joinpath("cyclic_colormap.json").open() as fh:
        return json.load(fh)


_COLORMAP: list[str] | None = None


def axis_color(angle: float) -> str:
    """Color for an axis angle from the cyclic 256-entry lookup table;
    angle 0 and 2*pi map to the same entry."""
    global _COLORMAP
    if _COLORMAP is None:
        _COLORMAP = _load_colormap()
    frac = (angle / (2.0 * math.pi)) % 1.0
    return _COLORMAP[round(frac * 256) % 256]


def _direction(angle: float) -> tuple[float, float]:
    # y-up normalized coordinates; vertical-up at angle 0, clockwise positive
    return (math.sin(angle), math.cos(angle))


@dataclass(frozen=True)
class AxisGeometry:
    axis: int
    angle: float
    expanded: bool
    # solid radial intervals of the (collapsed) axis line
    solid: tuple[tuple[float, float], ...]
    # angles of the counter-clockwise / clockwise copies when expanded
    copy_angles: tuple[float, float]


@dataclass(frozen=True)
class VertexMark:
    vertex: int
    axis: int
    index: int
    radius: float
    points: tuple[tuple[float, float], ...]  # one point, or both copies when expanded
    color: str
    size: float


@dataclass(frozen=True)
class EdgePath:
    source: int
    target: int
    kind: str
    # cubic chain control polygon: start, then (c1, c2, end) per piece
    points: tuple[tuple[float, float], ...]
    color: str


@dataclass(frozen=True)
class LabelSpec:
    vertex: int
    text: str
    anchor: tuple[float, float]
    rotation_deg: float


@dataclass(frozen=True)
class GeometryDoc:
    k: int
    gaps: int
    axes: tuple[AxisGeometry, ...]
    vertices: tuple[VertexMark, ...]
    dummy_anchors: tuple[tuple[int, int, int, float, float, float], ...]
    # (dummy id, axis, index, radius, x, y)
    edges: tuple[EdgePath, ...]
    labels: tuple[LabelSpec, ...]
    inner_radius: float
    tip_radius: float


def _axis_angles(al: AugmentedLayout) -> dict[int, float]:
    k = al.base.k
    return {a: 2.0 * math.pi * al.base.axis_order[a] / k for a in range(k)}


def _slot_radius(index: int, count: int, inner: float, length: float) -> float:
    return inner + length * (index / count) if count else inner


def compute_geometry(
    al: AugmentedLayout,
    style: RenderStyle = RenderStyle(),
    labels: tuple[str, ...] | None = None,
) -> GeometryDoc:
    """Resolve the combinatorial layout into coordinates, curves and colors."""
    base = al.base
    k = base.k
    angles = _axis_angles(al)
    inner = INNER_RADIUS_FRACTION * style.axis_length
    length = style.axis_length
    tip = inner + length
    delta = style.intra_inter_split * math.pi / max(k, 1)

    counts = al.axis_item_counts()
    positions = al.drawing_positions()
    is_dummy = [False] * al.n_items
    for d in al.dummies:
        is_dummy[d.id] = True

    # per-item radius and gap-slot bookkeeping
    radius = [0.0] * al.n_items
    gap_slot: list[list[bool]] = []
    for axis in range(k):
        order = al.arrangements[axis].drawing_order()
        flags = [False] * len(order)
        for i, item in enumerate(order):
            radius[item] = _slot_radius(i, counts[axis], inner, length)
            flags[i] = is_dummy[item]
        gap_slot.append(flags)

    axes_geo = []
    for axis in range(k):
        count = counts[axis]
        expanded = axis in style.expanded_axes
        solids: list[tuple[float, float]] = []
        if count == 0:
            solids.append((inner, tip))
        else:
            step = length / count
            run_start: int | None = None
            for i in range(count + 1):
                in_segment = i < count and not gap_slot[axis][i]
                if in_segment and run_start is None:
                    run_start = i
                elif not in_segment and run_start is not None:
                    lo = max(inner, _slot_radius(run_start, count, inner, length) - 0.4 * step)
                    hi = min(tip, _slot_radius(i - 1, count, inner, length) + 0.4 * step)
                    if i == count:
                        hi = tip  # extend the outermost solid run to the tip
                    solids.append((lo, hi))
                    run_start = None
            if not solids:
                solids.append((inner, inner))  # all-dummy axis: degenerate stub
        angle = angles[axis]
        axes_geo.append(
            AxisGeometry(
                axis=axis,
                angle=angle,
                expanded=expanded,
                solid=tuple(solids),
                copy_angles=(angle - delta, angle + delta),
            )
        )

    def item_point(item: int, toward_axis: int | None = None) -> tuple[float, float]:
        """Drawing point of an item; on expanded axes inter-axis attachment
        picks the copy facing the neighbor axis."""
        axis = al.axis_of_item(item)
        geo = axes_geo[axis]
        angle = geo.angle
        if geo.expanded and toward_axis is not None:
            pa = base.axis_order[axis]
            pb = base.axis_order[toward_axis]
            clockwise = (pa + 1) % k == pb if k > 2 else pb > pa
            angle = geo.copy_angles[1] if clockwise else geo.copy_angles[0]
        d = _direction(angle)
        r = radius[item]
        return (r * d[0], r * d[1])

    # adjacency (inter/intra degrees) for sizing and export
    inter_deg = [0] * al.n_real
    intra_deg = [0] * al.n_real
    for a, b in al.chain_edges:
        if a < al.n_real:
            inter_deg[a] += 1
        if b < al.n_real:
            inter_deg[b] += 1
    for a, b in al.intra_edges:
        intra_deg[a] += 1
        intra_deg[b] += 1
    degree = [inter_deg[v] + intra_deg[v] for v in range(al.n_real)]
    max_degree = max(degree, default=0)

    marks = []
    for v in range(al.n_real):
        axis = base.axis_of[v]
        geo = axes_geo[axis]
        r = radius[v]
        if geo.expanded:
            pts = tuple(
                (r * _direction(a)[0], r * _direction(a)[1]) for a in geo.copy_angles
            )
        else:
            d = _direction(geo.angle)
            pts = ((r * d[0], r * d[1]),)
        size = style.vertex_radius
        if style.scale_degree and max_degree > 0:
            size = style.vertex_radius * (0.6 + 1.6 * degree[v] / max_degree)
        marks.append(
            VertexMark(
                vertex=v,
                axis=axis,
                index=positions[v],
                radius=r,
                points=pts,
                color=axis_color(geo.angle),
                size=size,
            )
        )

    anchors = []
    for d in al.dummies:
        geo = axes_geo[d.axis]
        dirv = _direction(geo.angle)
        r = radius[d.id]
        anchors.append((d.id, d.axis, positions[d.id], r, r * dirv[0], r * dirv[1]))

    def host_angle(item: int, toward_axis: int | None) -> float:
        axis = al.axis_of_item(item)
        geo = axes_geo[axis]
        if not geo.expanded or toward_axis is None:
            return geo.angle
        pa, pb = base.axis_order[axis], base.axis_order[toward_axis]
        clockwise = (pa + 1) % k == pb if k > 2 else pb > pa
        return geo.copy_angles[1] if clockwise else geo.copy_angles[0]

    def capped_handles(p1, p2, start_angle: float, end_angle: float):
        """Perpendicular handles pointing into the sector [start, end],
        capped so each control point stays strictly inside it.  The whole
        control hull then lies in the convex sector, which is what keeps
        curves off every axis ray except at their own endpoints."""
        half = math.pi / 2.0
        beta = (end_angle - start_angle) % (2.0 * math.pi)
        h = HANDLE_FRACTION * math.dist(p1, p2)
        h1 = h2 = h
        if 0.0 < beta < half:
            reach = 0.9 * math.tan(beta)
            h1 = min(h, math.hypot(*p1) * reach)
            h2 = min(h, math.hypot(*p2) * reach)
        n1 = _direction(start_angle + half)
        n2 = _direction(end_angle - half)
        return (p1[0] + h1 * n1[0], p1[1] + h1 * n1[1]), (
            p2[0] + h2 * n2[0],
            p2[1] + h2 * n2[1],
        )

    def hop(p1, p2, ha: float, hb: float, pos_a: int, pos_b: int) -> tuple:
        """Control quad for one curved hop between adjacent ring positions."""
        a_is_ccw_end = (pos_a + 1) % k == pos_b if k > 2 else pos_a == 0
        if a_is_ccw_end:
            c1, c2 = capped_handles(p1, p2, ha, hb)
        else:
            c2, c1 = capped_handles(p2, p1, hb, ha)
        return p1, c1, c2, p2

    def piece(a: int, b: int) -> tuple:
        """Control quad of one proper edge, endpoints in (a, b) order;
        with two axes every edge bows to the same fixed side."""
        a_axis, b_axis = al.axis_of_item(a), al.axis_of_item(b)
        return hop(
            item_point(a, toward_axis=b_axis),
            item_point(b, toward_axis=a_axis),
            host_angle(a, b_axis),
            host_angle(b, a_axis),
            base.axis_order[a_axis],
            base.axis_order[b_axis],
        )

    def chain_waypoints(items: list[int]) -> list[tuple]:
        """(point, host angle, ring position) per chain stop; a dummy on an
        expanded axis contributes entry and exit points on the two copies so
        the curve traverses the corridor straight through its gap."""
        stops: list[tuple] = []
        for idx, item in enumerate(items):
            axis = al.axis_of_item(item)
            geo = axes_geo[axis]
            prev_axis = al.axis_of_item(items[idx - 1]) if idx > 0 else None
            next_axis = al.axis_of_item(items[idx + 1]) if idx < len(items) - 1 else None
            ring = base.axis_order[axis]
            if geo.expanded and prev_axis is not None and next_axis is not None:
                stops.append(
                    (item_point(item, prev_axis), host_angle(item, prev_axis), ring)
                )
                stops.append(
                    (item_point(item, next_axis), host_angle(item, next_axis), ring)
                )
            else:
                toward = next_axis if prev_axis is None else prev_axis
                stops.append((item_point(item, toward), host_angle(item, toward), ring))
        return stops

    # reassemble long-edge chains: original edge -> item waypoint sequence
    grouped: dict[tuple[int, int], list] = {}
    for d in al.dummies:
        grouped.setdefault(d.edge, []).append(d)
    chains: dict[tuple[int, int], list[int]] = {}
    for edge, ds in grouped.items():
        ds.sort(key=lambda d: d.chain_index)
        u, v = edge
        head = u if axis_span(base, base.axis_of[u], ds[0].axis) == 1 else v
        tail = v if head == u else u
        chains[edge] = [head] + [d.id for d in ds] + [tail]

    chain_member: set[tuple[int, int]] = set()
    for edge, items in chains.items():
        for a, b in zip(items, items[1:]):
            chain_member.add((a, b) if a < b else (b, a))

    def ccw_endpoint(u: int, v: int) -> int:
        """Endpoint met first when traveling counter-clockwise along the
        edge's (shorter) arc; its axis colors the edge."""
        pu, pv = base.axis_order[base.axis_of[u]], base.axis_order[base.axis_of[v]]
        if pu == pv:
            return min(u, v)
        fwd = (pv - pu) % k
        bwd = (pu - pv) % k
        if fwd < bwd or (fwd == bwd and pu < pv):
            return u
        return v

    edges_geo: list[EdgePath] = []

    for edge, items in sorted(chains.items()):
        u, v = edge
        stops = chain_waypoints(items)
        pts: list[tuple[float, float]] = [stops[0][0]]
        for (p1, h1, r1), (p2, h2, r2) in zip(stops, stops[1:]):
            if r1 == r2:
                # straight corridor traversal between the two copies
                c1 = (p1[0] + (p2[0] - p1[0]) / 3.0, p1[1] + (p2[1] - p1[1]) / 3.0)
                c2 = (p1[0] + 2.0 * (p2[0] - p1[0]) / 3.0, p1[1] + 2.0 * (p2[1] - p1[1]) / 3.0)
                pts.extend((c1, c2, p2))
            else:
                _, c1, c2, _ = hop(p1, p2, h1, h2, r1, r2)
                pts.extend((c1, c2, p2))
        color = axis_color(axes_geo[base.axis_of[ccw_endpoint(u, v)]].angle)
        edges_geo.append(EdgePath(source=u, target=v, kind=LONG, points=tuple(pts), color=color))

    for a, b in al.chain_edges:
        key = (a, b) if a < b else (b, a)
        if key in chain_member:
            continue  # piece of a long edge, drawn above
        color = axis_color(axes_geo[base.axis_of[ccw_endpoint(a, b)]].angle)
        edges_geo.append(
            EdgePath(source=a, target=b, kind=PROPER, points=piece(a, b), color=color)
        )

    for u, v in al.intra_edges:
        lo, hi = (u, v) if base.rank[u] <= base.rank[v] else (v, u)
        axis = base.axis_of[u]
        geo = axes_geo[axis]
        ccw_angle, cw_angle = geo.copy_angles
        d_cw, d_ccw = _direction(cw_angle), _direction(ccw_angle)
        # canonical single drawing: lower-ranked endpoint on the clockwise copy
        p1 = (radius[lo] * d_cw[0], radius[lo] * d_cw[1])
        p2 = (radius[hi] * d_ccw[0], radius[hi] * d_ccw[1])
        c2, c1 = capped_handles(p2, p1, ccw_angle, cw_angle)
        color = axis_color(geo.angle)
        edges_geo.append(
            EdgePath(source=lo, target=hi, kind=INTRA, points=(p1, c1, c2, p2), color=color)
        )

    doc = GeometryDoc(
        k=k,
        gaps=base.gaps,
        axes=tuple(axes_geo),
        vertices=tuple(marks),
        dummy_anchors=tuple(anchors),
        edges=tuple(edges_geo),
        labels=(),
        inner_radius=inner,
        tip_radius=tip,
    )
    if labels is not None:
        doc = place_labels(doc, style, labels)
    return doc


def _label_rotation(angle: float, style: RenderStyle) -> float:
    """Rotate labels near the horizontal reference; horizontal otherwise."""
    deg = math.degrees(angle) % 360.0
    to_horizontal = min(
        min(abs(deg - h), 360.0 - abs(deg - h)) for h in (90.0, 270.0)
    )
    return style.label_rotation_deg if to_horizontal <= style.label_band_deg else 0.0


def place_labels(
    geom: GeometryDoc, style: RenderStyle, labels: tuple[str, ...] | None = None
) -> GeometryDoc:
    """Attach a label to each vertex on the clockwise side of its axis."""
    offset = 0.018
    specs = []
    for mark in geom.vertices:
        geo = geom.axes[mark.axis]
        # label sits next to the clockwise-most drawn line of the axis
        angle = geo.copy_angles[1] if geo.expanded else geo.angle
        d = _direction(angle)
        nx, ny = d[1], -d[0]  # clockwise side
        px, py = mark.points[-1]
        text = labels[mark.vertex] if labels is not None else str(mark.vertex)
        specs.append(
            LabelSpec(
                vertex=mark.vertex,
                text=text,
                anchor=(px + offset * nx, py + offset * ny),
                rotation_deg=_label_rotation(geo.angle, style),
            )
        )
    return replace(geom, labels=tuple(specs))


def _svg_xy(p: tuple[float, float], canvas: int) -> tuple[float, float]:
    half = canvas / 2.0
    return (half + p[0] * half, half - p[1] * half)


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_svg(geom: GeometryDoc, style: RenderStyle = RenderStyle()) -> str:
    """Emit the hive plot as a standalone SVG document."""
    c = style.canvas_size
    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" '
        f'viewBox="0 0 {c} {c}">'
    )
    out.append(f'<rect width="{c}" height="{c}" fill="#ffffff"/>')

    def pt(p):
        x, y = _svg_xy(p, c)
        return f"{_fmt(x)},{_fmt(y)}"

    # expanded-axis backdrops first
    for geo in geom.axes:
        if not geo.expanded:
            continue
        a0, a1 = geo.copy_angles
        d0, d1 = _direction(a0), _direction(a1)
        quad = [
            (geom.inner_radius * d0[0], geom.inner_radius * d0[1]),
            (geom.tip_radius * d0[0], geom.tip_radius * d0[1]),
            (geom.tip_radius * d1[0], geom.tip_radius * d1[1]),
            (geom.inner_radius * d1[0], geom.inner_radius * d1[1]),
        ]
        points = " ".join(pt(q) for q in quad)
        out.append(f'<polygon points="{points}" fill="#d9d9d9" fill-opacity="0.35"/>')

    # axis lines: solid pieces only, so gaps stay visually open
    for geo in geom.axes:
        line_angles = geo.copy_angles if geo.expanded else (geo.angle,)
        for angle in line_angles:
            d = _direction(angle)
            for lo, hi in geo.solid:
                p1 = _svg_xy((lo * d[0], lo * d[1]), c)
                p2 = _svg_xy((hi * d[0], hi * d[1]), c)
                out.append(
                    f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
                    f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" '
                    f'stroke="#444444" stroke-width="1.5"/>'
                )

    def path_d(points: tuple[tuple[float, float], ...]) -> str:
        x0, y0 = _svg_xy(points[0], c)
        parts = [f"M {_fmt(x0)} {_fmt(y0)}"]
        for i in range(1, len(points), 3):
            cs = [_svg_xy(p, c) for p in points[i : i + 3]]
            coords = " ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in cs)
            parts.append(f"C {coords}")
        return " ".join(parts)

    for edge in geom.edges:
        if edge.kind == INTRA:
            if not geom.axes[geom.vertices[edge.source].axis].expanded:
                continue  # intra edges hidden while the axis is collapsed
            out.append(
                f'<path d="{path_d(edge.points)}" fill="none" '
                f'stroke="{edge.color}" stroke-width="1.0" stroke-opacity="0.8"/>'
            )
            if style.symmetric_intra:
                mirrored = tuple(edge.points[::-1])
                out.append(
                    f'<path d="{path_d(mirrored)}" fill="none" '
                    f'stroke="{edge.color}" stroke-width="1.0" stroke-opacity="0.8"/>'
                )
        else:
            out.append(
                f'<path d="{path_d(edge.points)}" fill="none" '
                f'stroke="{edge.color}" stroke-width="1.2"/>'
            )

    for mark in geom.vertices:
        for p in mark.points:
            x, y = _svg_xy(p, c)
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(mark.size * c / 2)}" '
                f'fill="{mark.color}" stroke="#333333" stroke-width="0.5"/>'
            )

    if style.show_labels:
        font = max(7.0, c / 110.0)
        for spec in geom.labels:
            x, y = _svg_xy(spec.anchor, c)
            transform = (
                f' transform="rotate({_fmt(spec.rotation_deg)} {_fmt(x)} {_fmt(y)})"'
                if spec.rotation_deg
                else ""
            )
            text = (
                spec.text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            )
            out.append(
                f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(font)}" '
                f'font-family="sans-serif" fill="#222222"{transform}>{text}</text>'
            )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _round6(x: float) -> float:
    value = round(x, 6)
    return 0.0 if value == 0 else value


def export_layout_json(
    al: AugmentedLayout,
    geom: GeometryDoc,
    seed: int = 0,
    report: CrossingReport | None = None,
) -> str:
    """Serialize the layout document consumed by the interactive viewer.

    Canonical form: sorted keys, compact separators, floats rounded to six
    decimals, so identical layouts export byte-identically.
    """
    base = al.base
    label_by_vertex = {spec.vertex: spec.text for spec in geom.labels}
    inter_deg = [0] * al.n_real
    for a, b in al.chain_edges:
        if a < al.n_real:
            inter_deg[a] += 1
        if b < al.n_real:
            inter_deg[b] += 1
    deg = [0] * al.n_real
    for a, b in al.intra_edges:
        deg[a] += 1
        deg[b] += 1
    for v in range(al.n_real):
        deg[v] += inter_deg[v]

    doc = {
        "meta": {
            "k": base.k,
            "g": base.gaps,
            "seed": seed,
            "crossings": {
                "inter": report.inter_axis if report else None,
                "intra": report.intra_axis if report else None,
            },
        },
        "axes": [
            {
                "id": geo.axis,
                "order": base.axis_order[geo.axis],
                "angle": _round6(geo.angle),
            }
            for geo in geom.axes
        ],
        "vertices": [
            {
                "id": mark.vertex,
                "label": label_by_vertex.get(mark.vertex, str(mark.vertex)),
                "axis": mark.axis,
                "index": mark.index,
                "r": _round6(mark.radius),
                "degree": deg[mark.vertex],
                "interAxisDegree": inter_deg[mark.vertex],
            }
            for mark in geom.vertices
        ],
        "dummies": [
            {"id": d.id, "axis": d.axis, "index": index, "edge": [d.edge[0], d.edge[1]]}
            for d, (_d_id, _axis, index, _r, _x, _y) in zip(al.dummies, geom.dummy_anchors)
        ],
        "edges": [
            {
                "source": edge.source,
                "target": edge.target,
                "class": edge.kind,
                "path": [[_round6(x), _round6(y)] for x, y in edge.points],
            }
            for edge in geom.edges
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
