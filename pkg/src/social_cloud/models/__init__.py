"""
Social Cloud Models
===================

Graph core, model metrics and externality analysis.

Modules:
- graph: immutable graphs, generators, all-pairs hop counts
- metrics: harmonic closeness, resource probability, availability
- externalities: per-agent link effects, beneficiary counting, conjecture scan
"""

from .externalities import Externality, ExternalityReport, externality_report
from .graph import Graph, ring
from .metrics import MetricsBundle, compute_metrics

__all__ = [
    'Graph',
    'ring',
    'MetricsBundle',
    'compute_metrics',
    'Externality',
    'ExternalityReport',
    'externality_report',
]
