"""
Hypothesis strategies for small undirected graphs
"""

from itertools import combinations

from hypothesis import strategies as st

from social_cloud.models.graph import make_graph, non_edges


@st.composite
def graphs(draw, min_nodes=1, max_nodes=9):
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


@st.composite
def graphs_with_absent_link(draw, min_nodes=3, max_nodes=9):
    """(graph, (j, k)) where {j, k} is not an edge of graph"""
    g = draw(graphs(min_nodes=min_nodes, max_nodes=max_nodes).filter(lambda g: non_edges(g)))
    j, k = draw(st.sampled_from(non_edges(g)))
    if draw(st.booleans()):
        j, k = k, j
    return g, (j, k)


@st.composite
def graphs_with_permutation(draw, min_nodes=1, max_nodes=9):
    g = draw(graphs(min_nodes=min_nodes, max_nodes=max_nodes))
    permutation = draw(st.permutations(list(range(g.node_count))))
    return g, list(permutation)
