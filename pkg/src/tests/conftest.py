"""
Shared fixtures: exact rational oracle, cached 4-30 ring sweep, graph corpora
"""

from fractions import Fraction

import hypothesis
import numpy as np
import pytest

from social_cloud.models.graph import UNREACHABLE, non_edges, oracle_distances, random_graph, ring
from social_cloud.services.experiments import ring_sweep

np.seterr(all="warn")

hypothesis.settings.register_profile("social_cloud", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("social_cloud")


def rational_metrics(graph):
    """phi, alpha and gamma in exact arithmetic from the relaxation distances"""
    n = graph.node_count
    dist = oracle_distances(graph)
    inverse = [
        [Fraction(0) if i == j or dist[i, j] == UNREACHABLE else Fraction(1, dist[i, j]) for j in range(n)]
        for i in range(n)
    ]
    phi = [sum(row, Fraction(0)) for row in inverse]
    alpha = [
        [inverse[i][j] / phi[j] if phi[j] > 0 else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    gamma = []
    for i in range(n):
        failure = Fraction(1)
        for j in range(n):
            if j != i:
                failure *= 1 - alpha[i][j]
        gamma.append(1 - failure)
    return phi, alpha, gamma


@pytest.fixture
def rational_oracle():
    return rational_metrics


@pytest.fixture(scope="session")
def full_ring_sweep():
    """Full ring sweep over sizes 4..30 (computed once per session)"""
    return ring_sweep(4, 30)


@pytest.fixture(scope="session")
def seeded_random_graphs():
    """200 random graphs with 8-14 agents drawn from one seeded generator"""
    rng = np.random.default_rng(20240601)
    graphs = []
    for _ in range(200):
        n = int(rng.integers(8, 15))
        graphs.append(random_graph(n, 0.3, rng))
    return graphs


@pytest.fixture(scope="session")
def small_ring_links():
    """Every (ring, absent link) pair for rings of 4..12 agents"""
    return [(ring(n), link) for n in range(4, 13) for link in non_edges(ring(n))]
