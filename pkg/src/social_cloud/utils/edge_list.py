#!/usr/bin/env python3
"""
Edge-list text format

One edge per line as two whitespace-separated base-10 node ids. Blank
lines and lines starting with '#' are ignored. The node count is one more
than the largest id unless a header line "n <count>" sets it.
"""

import logging
import os
from typing import Iterable, List, Optional, Tuple

from ..exceptions import EdgeListError
from ..models.graph import Graph, make_graph

logger = logging.getLogger(__name__)


def _parse_id(token: str, line_number: int) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise EdgeListError(f"node id {token!r} is not a base-10 integer", line_number)
    if value < 0:
        raise EdgeListError(f"node id {value} is negative", line_number)
    return value


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse edge-list lines into a Graph"""
    header_count: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    edge_lines: List[int] = []

    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if tokens[0] == 'n':
            if len(tokens) != 2:
                raise EdgeListError("header must read 'n <count>'", line_number)
            if header_count is not None:
                raise EdgeListError("duplicate 'n <count>' header", line_number)
            header_count = _parse_id(tokens[1], line_number)
            if header_count < 1:
                raise EdgeListError("node count must be at least 1", line_number)
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"expected two node ids, found {len(tokens)} fields", line_number)
        u, v = _parse_id(tokens[0], line_number), _parse_id(tokens[1], line_number)
        if u == v:
            raise EdgeListError(f"self-loop on node {u}", line_number)
        edges.append((u, v))
        edge_lines.append(line_number)

    if header_count is None:
        if not edges:
            raise EdgeListError("edge list has no edges and no 'n <count>' header")
        node_count = 1 + max(max(u, v) for u, v in edges)
    else:
        node_count = header_count
        for (u, v), line_number in zip(edges, edge_lines):
            if max(u, v) >= node_count:
                raise EdgeListError(
                    f"edge ({u}, {v}) exceeds declared node count {node_count}", line_number
                )

    return make_graph(node_count, edges)


def read_edge_list(path: str) -> Graph:
    """Read and parse an edge-list file"""
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_number = data.count(b'\n', 0, e.start) + 1
        raise EdgeListError(f"byte 0x{data[e.start]:02x} is not valid UTF-8", line_number)
    graph = parse_edge_list(text.split('\n'))
    logger.info(f"Loaded {path}: {graph.node_count} agents, {graph.edge_count} links")
    return graph


def format_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.node_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, path: str) -> str:
    """Write graph with an explicit node-count header so isolated agents survive"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(format_edge_list(graph))
    return path
