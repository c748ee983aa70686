"""Cyclic axis ordering: the second pipeline stage.

Axes are arranged on a circle so that strongly connected groups sit close
together, minimizing the sum over group pairs of (edge count) x (cyclic
distance).  Small instances are solved exactly by enumerating all cyclic
orders with one axis pinned; larger ones fall back to simulated annealing
with position-swap moves and geometric cooling.

Orders are canonicalized (axis 0 at position 0, reflection resolved
lexicographically) so repeated runs and different platforms agree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations

from .graph import Graph
from .layout import cyclic_span
from .partition import Partition

# AxisOrder: tuple mapping axis id -> cyclic position (a candidate order).
AxisOrder = tuple[int, ...]

BRUTE_FORCE_MAX_K = 8


@dataclass(frozen=True)
class WeightMatrix:
    """Symmetric inter-group edge counts; the diagonal is unused."""

    k: int
    w: tuple[tuple[int, ...], ...]

    def max_weight(self) -> int:
        return max((x for row in self.w for x in row), default=0)


def inter_group_weights(graph: Graph, p: Partition) -> WeightMatrix:
    k = p.k
    w = [[0] * k for _ in range(k)]
    for u, v in graph.edges:
        gu, gv = p.membership[u], p.membership[v]
        if gu != gv:
            w[gu][gv] += 1
            w[gv][gu] += 1
    return WeightMatrix(k=k, w=tuple(tuple(row) for row in w))


def order_cost(weights: WeightMatrix, order: AxisOrder) -> int:
    """Total weighted span of the order."""
    k = weights.k
    if len(order) != k or sorted(order) != list(range(k)):
        raise ValueError("order must be a bijection onto 0..k-1")
    total = 0
    for i in range(k):
        row = weights.w[i]
        for j in range(i + 1, k):
            if row[j]:
                total += row[j] * cyclic_span(k, order[i], order[j])
    return total


def _order_from_sequence(sequence: tuple[int, ...]) -> AxisOrder:
    """Positions from an axes-by-position sequence."""
    order = [0] * len(sequence)
    for pos, axis in enumerate(sequence):
        order[axis] = pos
    return tuple(order)


def canonical_order(weights: WeightMatrix, order: AxisOrder) -> AxisOrder:
    """Rotate axis 0 to position 0 and pick the lexicographically smaller
    of the two reflections; cost is invariant under both."""
    k = weights.k
    if k == 1:
        return (0,)
    by_pos = [0] * k
    for axis, pos in enumerate(order):
        by_pos[pos] = axis
    shift = by_pos.index(0)
    rotated = tuple(by_pos[(shift + i) % k] for i in range(k))
    reflected = (0,) + rotated[1:][::-1]
    return _order_from_sequence(min(rotated, reflected))


def brute_force_order(weights: WeightMatrix, max_k: int = BRUTE_FORCE_MAX_K) -> AxisOrder:
    """Exact minimum-cost order by enumerating (k-1)! sequences with axis 0
    pinned at position 0; returns the lexicographically smallest minimizer."""
    k = weights.k
    if k > max_k:
        raise ValueError(f"brute force capped at k={max_k}, got {k}")
    if k == 1:
        return (0,)
    best_seq: tuple[int, ...] | None = None
    best_cost = math.inf
    for rest in permutations(range(1, k)):
        seq = (0,) + rest
        order = _order_from_sequence(seq)
        cost = order_cost(weights, order)
        if cost < best_cost:
            best_cost = cost
            best_seq = seq
    assert best_seq is not None
    return canonical_order(weights, _order_from_sequence(best_seq))


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric-cooling schedule for the order search.

    t_start of None means max weight x k.  Each restart runs an
    independent seeded chain; the best state ever visited wins.
    """

    t_start: float | None = None
    t_min: float = 1e-3
    cooling: float = 0.995
    moves_per_temp: int | None = None  # None -> k moves per temperature
    restarts: int = 3


def anneal_order(
    weights: WeightMatrix, seed: int = 0, schedule: AnnealSchedule = AnnealSchedule()
) -> AxisOrder:
    """Simulated annealing over cyclic orders; deterministic per seed.

    Proposal move swaps two positions; acceptance is Metropolis.  Tracks
    the best state across all restarts, so the result never costs more
    than any visited state (including the initial one).
    """
    k = weights.k
    if k < 2:
        return tuple(range(k))
    t_start = schedule.t_start
    if t_start is None:
        t_start = float(max(weights.max_weight(), 1) * k)
    moves = schedule.moves_per_temp or k

    master = random.Random(seed)
    restart_seeds = [master.randrange(2**32) for _ in range(max(1, schedule.restarts))]

    best_order: list[int] | None = None
    best_cost = math.inf

    def row_cost(order: list[int], axis: int) -> int:
        total = 0
        row = weights.w[axis]
        for other in range(k):
            if other != axis and row[other]:
                total += row[other] * cyclic_span(k, order[axis], order[other])
        return total

    for restart_seed in restart_seeds:
        rng = random.Random(restart_seed)
        sequence = list(range(k))
        rng.shuffle(sequence)
        order = [0] * k
        for pos, axis in enumerate(sequence):
            order[axis] = pos
        cost = order_cost(weights, tuple(order))
        if cost < best_cost:
            best_cost = cost
            best_order = order[:]

        t = t_start
        while t > schedule.t_min:
            for _ in range(moves):
                a = rng.randrange(k)
                b = rng.randrange(k)
                if a == b:
                    continue
                # span(a, b) is symmetric in the two positions, so the pair
                # term cancels and row deltas suffice
                before = row_cost(order, a) + row_cost(order, b)
                order[a], order[b] = order[b], order[a]
                after = row_cost(order, a) + row_cost(order, b)
                delta = after - before
                if delta <= 0 or rng.random() < math.exp(-delta / t):
                    cost += delta
                    if cost < best_cost:
                        best_cost = cost
                        best_order = order[:]
                else:
                    order[a], order[b] = order[b], order[a]
            t *= schedule.cooling
    assert best_order is not None
    return canonical_order(weights, tuple(best_order))


def optimize_order(
    weights: WeightMatrix,
    seed: int = 0,
    brute_force_max_k: int = BRUTE_FORCE_MAX_K,
    schedule: AnnealSchedule = AnnealSchedule(),
) -> AxisOrder:
    """Exact search for small k, annealing beyond the threshold."""
    if weights.k <= brute_force_max_k:
        return brute_force_order(weights, max_k=brute_force_max_k)
    return anneal_order(weights, seed=seed, schedule=schedule)
