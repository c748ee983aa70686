"""Vertex partitioning: the first pipeline stage.

Three routes produce the vertex-to-axis assignment: greedy modularity
merging when the axis count k is fixed, Louvain when it is not, or a
partition supplied with the input (in which case this module is skipped
entirely).  Both algorithms are deterministic: greedy merging breaks
equal-gain ties on the lowest (group, group) index pair, Louvain shuffles
its vertex visit order with a caller-provided seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex groups covering the whole graph."""

    groups: tuple[tuple[int, ...], ...]
    membership: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.groups)


def partition_from_membership(membership: list[int]) -> Partition:
    """Canonical partition: groups renumbered by their smallest member."""
    by_group: dict[int, list[int]] = {}
    for v, g in enumerate(membership):
        by_group.setdefault(g, []).append(v)
    ordered = sorted(by_group.values(), key=lambda vs: vs[0])
    dense = [0] * len(membership)
    for gi, vs in enumerate(ordered):
        for v in vs:
            dense[v] = gi
    return Partition(
        groups=tuple(tuple(vs) for vs in ordered),
        membership=tuple(dense),
    )


def validate_partition(graph: Graph, p: Partition) -> list[str]:
    problems = []
    seen: set[int] = set()
    for gi, vs in enumerate(p.groups):
        if not vs:
            problems.append(f"group {gi} is empty")
        for v in vs:
            if v in seen:
                problems.append(f"vertex {v} in multiple groups")
            seen.add(v)
            if p.membership[v] != gi:
                problems.append(f"membership[{v}] disagrees with groups")
    if seen != set(range(graph.n)):
        problems.append("groups do not cover all vertices")
    return problems


def modularity(graph: Graph, p: Partition) -> float:
    """Newman-Girvan quality of a partition; 0 for the one-group split.

    Defined as 0 on an edgeless graph, where the usual formula degenerates.
    """
    m = graph.m
    if m == 0:
        return 0.0
    intra = [0] * p.k
    degsum = [0] * p.k
    for u, v in graph.edges:
        if p.membership[u] == p.membership[v]:
            intra[p.membership[u]] += 1
    for v in range(graph.n):
        degsum[p.membership[v]] += graph.degree(v)
    return sum(
        intra[g] / m - (degsum[g] / (2 * m)) ** 2 for g in range(p.k)
    )


def partition_with_k(graph: Graph, k: int) -> Partition:
    """Agglomerative greedy modularity merging down to exactly k groups.

    Starts from singletons and repeatedly merges the pair with the highest
    modularity gain -- even a negative one -- until k groups remain, so k is
    honored unconditionally (merges may join disconnected components).
    Equal gains resolve to the lowest (i, j) pair over current group
    indices; a merge keeps index i and drops j, shifting later groups down.
    """
    n = graph.n
    if n == 0:
        raise ValueError("graph has no vertices")
    if not (1 <= k <= n):
        raise ValueError(f"k must be in 1..{n}, got {k}")

    m = graph.m
    # Per-group state: total degree, and inter-group edge counts.
    groups: list[list[int]] = [[v] for v in range(n)]
    degsum: list[int] = [graph.degree(v) for v in range(n)]
    between: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v in graph.edges:
        between[u][v] = between[u].get(v, 0) + 1
        between[v][u] = between[v].get(u, 0) + 1

    def gain(i: int, j: int) -> float:
        # Modularity change of merging groups i and j.
        if m == 0:
            return 0.0
        e_ij = between[i].get(j, 0)
        return 2.0 * (e_ij / (2 * m) - (degsum[i] / (2 * m)) * (degsum[j] / (2 * m)))

    while len(groups) > k:
        best: tuple[int, int] | None = None
        best_gain = float("-inf")
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                dq = gain(i, j)
                if dq > best_gain:
                    best_gain = dq
                    best = (i, j)
        assert best is not None
        i, j = best
        groups[i].extend(groups[j])
        degsum[i] += degsum[j]
        merged = dict(between[i])
        for other, cnt in between[j].items():
            merged[other] = merged.get(other, 0) + cnt
        merged.pop(i, None)
        merged.pop(j, None)
        between[i] = merged
        del groups[j], degsum[j], between[j]
        for row in between:
            if j in row:
                row[i] = row.get(i, 0) + row.pop(j)
            # groups above j shift down by one
            for old in sorted(key for key in row if key > j):
                row[old - 1] = row.pop(old)

    membership = [0] * n
    for gi, vs in enumerate(groups):
        for v in vs:
            membership[v] = gi
    return partition_from_membership(membership)


def partition_auto(graph: Graph, seed: int = 0) -> Partition:
    """Louvain community detection; the group count emerges from the data.

    Deterministic for a fixed seed (the seed drives the vertex visit
    shuffle).  Resolution is fixed at 1.0.
    """
    n = graph.n
    if n == 0:
        raise ValueError("graph has no vertices")
    if graph.m == 0:
        return partition_from_membership(list(range(n)))

    rng = random.Random(seed)
    # Weighted working graph: adj[u][v] = weight, selfw[u] = internal weight.
    adj: list[dict[int, float]] = [dict() for _ in range(n)]
    for u, v in graph.edges:
        adj[u][v] = adj[u].get(v, 0.0) + 1.0
        adj[v][u] = adj[v].get(u, 0.0) + 1.0
    selfw = [0.0] * n
    node_members: list[list[int]] = [[v] for v in range(n)]
    membership = [0] * n
    two_m = float(2 * graph.m)

    while True:
        size = len(adj)
        degree = [sum(adj[u].values()) + 2.0 * selfw[u] for u in range(size)]
        community = list(range(size))
        comm_total = degree[:]

        improved = False
        moved = True
        while moved:
            moved = False
            order = list(range(size))
            rng.shuffle(order)
            for u in order:
                cu = community[u]
                comm_total[cu] -= degree[u]
                # Edge weight from u to each neighboring community.
                links: dict[int, float] = {cu: 0.0}
                for v, w in adj[u].items():
                    links[community[v]] = links.get(community[v], 0.0) + w
                best_comm = cu
                best_gain = links.get(cu, 0.0) - degree[u] * comm_total[cu] / two_m
                for c in sorted(links):
                    if c == cu:
                        continue
                    dq = links[c] - degree[u] * comm_total[c] / two_m
                    # strictly-better moves only: float-noise ties must not
                    # trigger moves or symmetric graphs oscillate forever
                    if dq > best_gain + 1e-12:
                        best_gain = dq
                        best_comm = c
                community[u] = best_comm
                comm_total[best_comm] += degree[u]
                if best_comm != cu:
                    moved = True
                    improved = True

        if not improved:
            break

        # Aggregate: each community becomes one node of the next level.
        remap: dict[int, int] = {}
        for u in range(size):
            c = community[u]
            if c not in remap:
                remap[c] = len(remap)
        new_size = len(remap)
        new_members: list[list[int]] = [[] for _ in range(new_size)]
        new_selfw = [0.0] * new_size
        new_adj: list[dict[int, float]] = [dict() for _ in range(new_size)]
        for u in range(size):
            cu = remap[community[u]]
            new_members[cu].extend(node_members[u])
            new_selfw[cu] += selfw[u]
            for v, w in adj[u].items():
                cv = remap[community[v]]
                if cu == cv:
                    if u < v:
                        new_selfw[cu] += w
                else:
                    new_adj[cu][cv] = new_adj[cu].get(cv, 0.0) + w
        adj, selfw, node_members = new_adj, new_selfw, new_members
        if new_size == size:
            break

    for gi, vs in enumerate(node_members):
        for v in vs:
            membership[v] = gi
    return partition_from_membership(membership)
