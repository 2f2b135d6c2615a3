#!/usr/bin/env python3
"""
Graph Core
Undirected simple graphs over dense integer agent ids, generators and
all-pairs shortest-path hop counts
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from ..exceptions import SocialCloudInputError

logger = logging.getLogger(__name__)

Link = Tuple[int, int]

# Hop count marker for "no path"; never a large finite number so that
# 1/d can be taken as exactly 0 for unreachable agents.
UNREACHABLE = -1


def _normalize_pair(u: int, v: int) -> Link:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph; nodes are 0..node_count-1"""

    node_count: int
    edges: FrozenSet[Link]

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-node sorted neighbor ids"""
        neighbors: List[List[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(adj)) for adj in neighbors)

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.node_count, self.node_count), dtype=np.int64)
        for u, v in self.edges:
            matrix[u, v] = 1
            matrix[v, u] = 1
        matrix.flags.writeable = False
        return matrix

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_pair(u, v) in self.edges

    def sorted_edges(self) -> List[Link]:
        return sorted(self.edges)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; UNREACHABLE marks disconnected pairs"""

    dist: np.ndarray

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    def __getitem__(self, pair: Link) -> int:
        i, j = pair
        return int(self.dist[i, j])

    def is_reachable(self, i: int, j: int) -> bool:
        return self.dist[i, j] != UNREACHABLE

    def reciprocal(self) -> np.ndarray:
        """Matrix of 1/d with 0 on the diagonal and for unreachable pairs"""
        hops = self.dist.astype(float)
        inverse = np.zeros_like(hops)
        np.divide(1.0, hops, out=inverse, where=hops > 0)
        return inverse

    def as_float(self) -> np.ndarray:
        """Hop counts with UNREACHABLE mapped to +inf"""
        hops = self.dist.astype(float)
        hops[self.dist == UNREACHABLE] = np.inf
        return hops

    def diameter(self) -> int:
        """Largest finite hop count (0 for a graph without reachable pairs)"""
        reachable = self.dist[self.dist != UNREACHABLE]
        return int(reachable.max()) if reachable.size else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.dist.shape == other.dist.shape and bool(np.array_equal(self.dist, other.dist))

    def __hash__(self) -> int:
        return hash(self.dist.tobytes())


def make_graph(node_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph from an edge list

    Args:
        node_count: number of agents (>= 1)
        edges: node pairs; duplicates in either orientation collapse to one edge

    Returns:
        Graph
    """
    if node_count < 1:
        raise SocialCloudInputError(f"node_count must be at least 1, got {node_count}")

    normalized = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise SocialCloudInputError(
                f"edge ({u}, {v}) has an endpoint outside [0, {node_count})"
            )
        if u == v:
            raise SocialCloudInputError(f"edge ({u}, {v}) is a self-loop")
        normalized.add(_normalize_pair(u, v))

    return Graph(node_count=node_count, edges=frozenset(normalized))


def ring(n: int) -> Graph:
    """Cycle graph with edges {i, (i+1) mod n}"""
    if n < 3:
        raise SocialCloudInputError(f"a ring needs at least 3 nodes, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """
    Uniform edge-probability graph G(n, p)

    Pairs (i, j), i < j, are visited in lexicographic order and each is kept
    when the next draw from rng is below p, so a seeded generator replays
    the same graph.
    """
    if not (0.0 <= p <= 1.0):
        raise SocialCloudInputError(f"edge probability must be in [0, 1], got {p}")
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return make_graph(n, [pair for pair, draw in zip(pairs, draws) if draw < p])


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Rename node v to permutation[v]"""
    if sorted(permutation) != list(range(g.node_count)):
        raise SocialCloudInputError("permutation must be a rearrangement of 0..n-1")
    return make_graph(g.node_count, [(permutation[u], permutation[v]) for u, v in g.edges])


def non_edges(g: Graph) -> List[Link]:
    """All absent links (u, v), u < v, in lexicographic order"""
    return [pair for pair in combinations(range(g.node_count), 2) if pair not in g.edges]


def add_link(g: Graph, j: int, k: int) -> Graph:
    """Return g + <jk>; g itself is left untouched"""
    if j == k:
        raise SocialCloudInputError(f"cannot link agent {j} to itself")
    if not (0 <= j < g.node_count and 0 <= k < g.node_count):
        raise SocialCloudInputError(f"link ({j}, {k}) has an endpoint outside [0, {g.node_count})")
    if g.has_edge(j, k):
        raise SocialCloudInputError(f"link ({j}, {k}) already exists")
    return Graph(node_count=g.node_count, edges=g.edges | {_normalize_pair(j, k)})


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """
    Breadth-first hop counts from every source

    Row s of the frontier matrix is the current BFS layer from source s;
    all sources advance one layer per step.
    """
    n = g.node_count
    adjacency = g.adjacency_matrix
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(dist, 0)

    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    level = 0
    while frontier.any():
        level += 1
        layer = (frontier.astype(np.int64) @ adjacency > 0) & ~reached
        dist[layer] = level
        reached |= layer
        frontier = layer

    return DistanceMatrix(dist=dist)


def oracle_distances(g: Graph) -> DistanceMatrix:
    """Independent check: relaxation over every (i, k, j) triple"""
    n = g.node_count
    hops = np.full((n, n), np.inf)
    np.fill_diagonal(hops, 0.0)
    for u, v in g.edges:
        hops[u, v] = hops[v, u] = 1.0

    for k in range(n):
        hops = np.minimum(hops, hops[:, k, None] + hops[None, k, :])

    dist = np.where(np.isinf(hops), UNREACHABLE, hops).astype(np.int64)
    return DistanceMatrix(dist=dist)


def ring_distance(n: int, i: int, j: int) -> int:
    """Closed form hop count on ring(n)"""
    delta = abs(i - j) % n
    return min(delta, n - delta)
