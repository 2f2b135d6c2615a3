"""
Social Cloud Externalities
==========================

Library and command-line toolkit for the social-cloud resource-sharing
model: harmonic closeness, pairwise resource probability and network-level
availability, per-agent externalities of a single link addition, and the
ring-network sweep relating network size, link distance and the number of
beneficiaries.

Features:
- Graph core with breadth-first all-pairs distances and a relaxation oracle
- Closeness / resource probability / availability metrics
- Positive / negative / no externality classification per agent
- Exhaustive ring sweep with findings verdict and plot-ready data
- Counterexample scanner for the closeness-necessity conjecture
"""

__version__ = "1.0.0"
__author__ = "Social Cloud Research Team"

# Package metadata
__title__ = "Social Cloud Externalities"
__description__ = "Link-addition externalities in social cloud resource-sharing networks"

from .exceptions import EdgeListError, SocialCloudInputError

__all__ = [
    "__version__",
    "__title__",
    "__description__",
    "SocialCloudInputError",
    "EdgeListError",
]
