#!/usr/bin/env python3
"""
Social Cloud Metrics
Harmonic closeness (phi), resource probability (alpha) and availability
(gamma) for a fixed network
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..config import get_normalization_tolerance
from ..exceptions import SocialCloudInputError
from .graph import UNREACHABLE, DistanceMatrix, Graph, all_pairs_distances

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MetricsBundle:
    """Per-agent closeness and availability plus the alpha matrix of one graph

    alpha[i, j] is the probability that agent i obtains the resource from
    agent j; the diagonal is fixed at 0.
    """

    phi: np.ndarray
    alpha: np.ndarray
    gamma: np.ndarray
    distances: DistanceMatrix

    @property
    def n(self) -> int:
        return int(self.phi.shape[0])

    def recipient_totals(self) -> np.ndarray:
        """Column sums of alpha; 1 for every supplier with phi > 0"""
        return self.alpha.sum(axis=0)

    def unnormalized_suppliers(self, tolerance: Optional[float] = None) -> List[int]:
        """Suppliers with phi > 0 whose alpha column does not sum to 1 within tolerance"""
        if tolerance is None:
            tolerance = get_normalization_tolerance()
        drift = np.abs(self.recipient_totals() - 1.0)
        return [int(j) for j in np.flatnonzero((self.phi > 0) & (drift > tolerance))]


def harmonic_closeness(g: Graph, d: DistanceMatrix) -> np.ndarray:
    """phi[i] = sum over j != i of 1/d(i, j); unreachable agents add 0"""
    if d.n != g.node_count:
        raise SocialCloudInputError(
            f"distance matrix covers {d.n} agents but the graph has {g.node_count}"
        )
    return d.reciprocal().sum(axis=1)


def resource_probability(phi: np.ndarray, d: DistanceMatrix, i: int, j: int) -> float:
    """Probability that agent i obtains the resource from agent j"""
    if i == j:
        raise SocialCloudInputError(f"resource probability of agent {i} from itself is undefined")
    hops = d[i, j]
    if hops == UNREACHABLE or phi[j] <= 0:
        return 0.0
    return float((1.0 / hops) / phi[j])


def availability(alpha: np.ndarray, i: int) -> float:
    """Probability that agent i obtains the resource from at least one agent"""
    failures = np.delete(1.0 - alpha[i], i)
    return float(1.0 - np.prod(failures))


def _alpha_matrix(phi: np.ndarray, d: DistanceMatrix) -> np.ndarray:
    # column j is scaled by 1/phi[j]; isolated suppliers (phi == 0) give 0
    inverse = d.reciprocal()
    alpha = np.zeros_like(inverse)
    suppliers = np.broadcast_to(phi[np.newaxis, :], inverse.shape)
    np.divide(inverse, suppliers, out=alpha, where=suppliers > 0)
    return alpha


def compute_metrics(g: Graph, d: Optional[DistanceMatrix] = None) -> MetricsBundle:
    """
    Compute phi, alpha and gamma for every agent of g

    Args:
        g: network
        d: precomputed distances for g (computed when omitted)

    Returns:
        MetricsBundle
    """
    if d is None:
        d = all_pairs_distances(g)
    phi = harmonic_closeness(g, d)
    alpha = _alpha_matrix(phi, d)
    # diagonal of alpha is 0, so each row product runs over j != i
    gamma = 1.0 - np.prod(1.0 - alpha, axis=1)
    bundle = MetricsBundle(phi=phi, alpha=alpha, gamma=gamma, distances=d)
    drifting = bundle.unnormalized_suppliers()
    if drifting:
        logger.warning(f"alpha columns of suppliers {drifting} do not sum to 1")
    return bundle
