"""
Experiment Services
===================

Modules:
- experiments: ring sweep, aggregation and findings verdict
- corpus: ring and seeded random corpora for the conjecture scan
"""

from .corpus import random_corpus, ring_corpus
from .experiments import findings_check, ring_sweep, symmetry_reduced_sweep

__all__ = ['ring_sweep', 'symmetry_reduced_sweep', 'findings_check', 'ring_corpus', 'random_corpus']
