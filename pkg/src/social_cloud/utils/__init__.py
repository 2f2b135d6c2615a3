"""
Input / Output Utilities
========================

Modules:
- edge_list: edge-list text format reader and writer
- exporters: CSV / JSON result files and plot-ready sweep data
- plotting: matplotlib rendering of the sweep size bands
"""

from .edge_list import parse_edge_list, read_edge_list, write_edge_list

__all__ = ['parse_edge_list', 'read_edge_list', 'write_edge_list']
