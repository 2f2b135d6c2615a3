#!/usr/bin/env python3
"""
Conjecture Scan Corpora
Ring corpora with every absent link as a candidate, and seeded random
graph corpora with a replay manifest
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from ..exceptions import SocialCloudInputError
from ..models.externalities import CorpusEntry
from ..models.graph import non_edges, random_graph, ring

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1


def ring_corpus(n_min: int, n_max: int) -> List[CorpusEntry]:
    """ring(n) for n in [n_min, n_max], each with all of its non-edges"""
    if n_min < 4:
        raise SocialCloudInputError(f"ring corpus needs n_min >= 4, got {n_min}")
    if n_min > n_max:
        raise SocialCloudInputError(f"n_min ({n_min}) exceeds n_max ({n_max})")
    entries = []
    for n in range(n_min, n_max + 1):
        g = ring(n)
        entries.append(CorpusEntry(graph_id=f"ring-{n:03d}", graph=g, candidates=tuple(non_edges(g))))
    return entries


def random_corpus(
    count: int, nodes_min: int, nodes_max: int, edge_prob: float, seed: int
) -> Tuple[List[CorpusEntry], Dict[str, object]]:
    """
    Seeded uniform edge-probability graphs

    Node counts are drawn uniformly from [nodes_min, nodes_max]; the same
    generator then draws the edges, so (count, nodes_min, nodes_max,
    edge_prob, seed) replays the corpus exactly.

    Returns:
        tuple: (entries, manifest)
    """
    if count < 0:
        raise SocialCloudInputError(f"random graph count must be >= 0, got {count}")
    if not (2 <= nodes_min <= nodes_max):
        raise SocialCloudInputError(
            f"node range must satisfy 2 <= nodes_min <= nodes_max, got {nodes_min}..{nodes_max}"
        )
    if not (0.0 <= edge_prob <= 1.0):
        raise SocialCloudInputError(f"edge probability must be in [0, 1], got {edge_prob}")
    if not (0 <= seed <= MAX_SEED):
        raise SocialCloudInputError(f"seed must be an unsigned 64-bit integer, got {seed}")

    rng = np.random.default_rng(seed)
    entries = []
    graphs = []
    for index in range(count):
        n = int(rng.integers(nodes_min, nodes_max + 1))
        g = random_graph(n, edge_prob, rng)
        graph_id = f"random-{index:04d}"
        entries.append(CorpusEntry(graph_id=graph_id, graph=g, candidates=tuple(non_edges(g))))
        graphs.append({"graph_id": graph_id, "nodes": n, "edges": g.edge_count})

    manifest = {
        "generator": "uniform edge probability",
        "count": count,
        "nodes_min": nodes_min,
        "nodes_max": nodes_max,
        "edge_prob": edge_prob,
        "seed": seed,
        "graphs": graphs,
    }
    logger.info(f"Random corpus: {count} graphs, {nodes_min}-{nodes_max} nodes, p={edge_prob}, seed={seed}")
    return entries, manifest
