"""Hive-plot layout engine.

Pipeline: partition vertices into axis groups, order the axes on the
circle to shorten inter-group connections, then order the vertices per
axis to minimize edge crossings under gap constraints; render the result
as SVG and a layout JSON document for the interactive viewer.
"""

from .axisorder import (
    AnnealSchedule,
    AxisOrder,
    WeightMatrix,
    anneal_order,
    brute_force_order,
    inter_group_weights,
    optimize_order,
    order_cost,
)
from .crossings import (
    CrossingReport,
    count_inter_axis_crossings,
    count_intra_axis_crossings,
    crossing_report,
)
from .graph import Graph, GraphInputError, build_graph, load_edgelist, load_graph_json
from .layout import (
    AugmentedLayout,
    AxisArrangement,
    DummyVertex,
    EdgeClass,
    HiveLayout,
    classify_edge,
    class_counts,
    layout_from_groups,
    span,
    subdivide_long_edges,
    validate_layout,
)
from .minimize import (
    MinimizeResult,
    barycenter_position,
    minimize_crossings,
    phase1_minimize,
    phase2_intra,
    sort_axis_with_gaps,
)
from .partition import Partition, modularity, partition_auto, partition_with_k
from .render import (
    GeometryDoc,
    RenderStyle,
    axis_color,
    compute_geometry,
    export_layout_json,
    place_labels,
    render_svg,
)

__version__ = "0.1.0"

__all__ = [
    "AnnealSchedule",
    "AugmentedLayout",
    "AxisArrangement",
    "AxisOrder",
    "CrossingReport",
    "DummyVertex",
    "EdgeClass",
    "GeometryDoc",
    "Graph",
    "GraphInputError",
    "HiveLayout",
    "MinimizeResult",
    "Partition",
    "RenderStyle",
    "WeightMatrix",
    "anneal_order",
    "axis_color",
    "barycenter_position",
    "brute_force_order",
    "build_graph",
    "class_counts",
    "classify_edge",
    "compute_geometry",
    "count_inter_axis_crossings",
    "count_intra_axis_crossings",
    "crossing_report",
    "export_layout_json",
    "inter_group_weights",
    "layout_from_groups",
    "load_edgelist",
    "load_graph_json",
    "minimize_crossings",
    "modularity",
    "optimize_order",
    "order_cost",
    "partition_auto",
    "partition_with_k",
    "phase1_minimize",
    "phase2_intra",
    "place_labels",
    "render_svg",
    "sort_axis_with_gaps",
    "span",
    "subdivide_long_edges",
    "validate_layout",
]
