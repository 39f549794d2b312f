"""b-colorings of claw-free block graphs (line graphs of trees)."""

from ._core import (
    BlockGraph,
    BudgetExceeded,
    Graph,
    InvalidGraph,
    ParseError,
    PreconditionError,
    b_chromatic,
    decide_k,
    dense_vertices,
    exists_coloring_realizing,
    is_flow_feasible,
    line_graph_of_tree,
    m_degree,
    max_basis_size,
    max_feasible_source_set,
    max_realized_colors,
    parse_graph,
    random_caterpillar,
    random_tree,
    verify_b_coloring,
)


def from_tree_edges(edges):
    """Block graph of the line graph of the tree with the given edge list."""
    edges = list(edges)
    n = 1 + max((max(e) for e in edges), default=0)
    return BlockGraph.from_tree(Graph(n, edges))


__all__ = [name for name in dir() if not name.startswith("_")]
