"""Undirected simple graph with dense integer vertex ids and label table.

Input labels (strings) are mapped to dense vertex ids at ingestion; all
downstream stages work on integer ids only.  Two ingestion formats are
supported: whitespace-separated edge lists and a structured JSON document
that may carry a precomputed vertex partition.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graph input (unknown labels, bad documents)."""


class Graph:
    """Immutable undirected simple graph.

    Vertices are 0..n-1; ``labels[v]`` is the display label of vertex v.
    Edges are stored as sorted (u, v) pairs with u < v, deduplicated.
    Self-loops and duplicate edges found at construction are dropped and
    counted in ``self_loops_dropped`` / ``duplicates_dropped``.
    """

    __slots__ = (
        "labels",
        "edges",
        "self_loops_dropped",
        "duplicates_dropped",
        "_adjacency",
    )

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        n = len(self.labels)
        seen: set[tuple[int, int]] = set()
        kept: list[tuple[int, int]] = []
        self_loops = 0
        duplicates = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) references an unknown vertex")
            if u == v:
                self_loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                duplicates += 1
                continue
            seen.add(key)
            kept.append(key)
        kept.sort()
        self.edges: tuple[tuple[int, int], ...] = tuple(kept)
        self.self_loops_dropped = self_loops
        self.duplicates_dropped = duplicates
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adjacency
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(
    edge_pairs: Iterable[tuple[str, str]],
    vertices: Sequence[str] | None = None,
    partition_hint: Mapping[str, int] | None = None,
) -> tuple[Graph, list[int] | None]:
    """Build a graph from label pairs, assigning dense integer ids.

    When ``vertices`` is given it fixes the id order and any edge label
    outside it is an error; otherwise vertices are collected from the edge
    list in order of first appearance.  ``partition_hint`` maps labels to
    group indices and must cover every vertex; it is returned as a dense
    per-vertex group list (or None when absent).
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    explicit = vertices is not None
    if explicit:
        for label in vertices:
            label = str(label)
            if label in index:
                raise GraphInputError(f"duplicate vertex label {label!r}")
            index[label] = len(labels)
            labels.append(label)

    edges: list[tuple[int, int]] = []
    for a, b in edge_pairs:
        a, b = str(a), str(b)
        for label in (a, b):
            if label not in index:
                if explicit:
                    raise GraphInputError(
                        f"edge references label {label!r} absent from the vertex list"
                    )
                index[label] = len(labels)
                labels.append(label)
        edges.append((index[a], index[b]))

    graph = Graph(labels, edges)

    groups: list[int] | None = None
    if partition_hint is not None:
        remap: dict[int, int] = {}
        groups = []
        for label in labels:
            if str(label) not in partition_hint:
                raise GraphInputError(f"partition hint missing vertex {label!r}")
            raw = int(partition_hint[str(label)])
            if raw not in remap:
                remap[raw] = len(remap)
            groups.append(remap[raw])
    return graph, groups


def parse_edgelist(text: str) -> list[tuple[str, str]]:
    """Parse edge-list text: one whitespace-separated label pair per line,
    '#' starts a comment, blank lines ignored."""
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two labels, got {len(parts)}")
        pairs.append((parts[0], parts[1]))
    return pairs


def load_edgelist(text: str) -> tuple[Graph, None]:
    graph, _ = build_graph(parse_edgelist(text))
    return graph, None


def load_graph_json(text: str) -> tuple[Graph, list[int] | None]:
    """Load the structured JSON graph document.

    Expected shape: ``{"vertices": [{"id", "label"?, "group"?}, ...],
    "edges": [["u", "v"], ...]}`` where edge entries reference vertex ids.
    If any vertex carries a "group", all of them must; groups become the
    input partition (stage 1 is then skipped by the pipeline).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphInputError('graph document must have "vertices" and "edges"')

    ids: list[str] = []
    labels: list[str] = []
    raw_groups: dict[str, int] = {}
    for entry in doc["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise GraphInputError('each vertex needs an "id"')
        vid = str(entry["id"])
        ids.append(vid)
        labels.append(str(entry.get("label", vid)))
        if "group" in entry:
            raw_groups[vid] = int(entry["group"])

    index = {vid: i for i, vid in enumerate(ids)}
    if len(index) != len(ids):
        raise GraphInputError("duplicate vertex ids in document")

    pairs: list[tuple[int, int]] = []
    for entry in doc["edges"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise GraphInputError("each edge must be a [u, v] pair")
        a, b = str(entry[0]), str(entry[1])
        if a not in index or b not in index:
            bad = a if a not in index else b
            raise GraphInputError(f"edge references unknown vertex id {bad!r}")
        pairs.append((index[a], index[b]))

    groups: list[int] | None = None
    if raw_groups:
        missing = [vid for vid in ids if vid not in raw_groups]
        if missing:
            raise GraphInputError(f"partition hint missing vertex {missing[0]!r}")
        # Normalize group values to dense 0..k-1 in order of first appearance.
        remap: dict[int, int] = {}
        groups = []
        for vid in ids:
            grp = raw_groups[vid]
            if grp not in remap:
                remap[grp] = len(remap)
            groups.append(remap[grp])

    return Graph(labels, pairs), groups
