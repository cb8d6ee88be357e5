"""Graph constructions: complete graphs, orientations and underlying graphs."""

from __future__ import annotations

from antimagic.core.errors import InvalidPairError
from antimagic.core.labeling import OrderLike, as_order, iter_pairs
from antimagic.core.models import OrientedGraph, Pair, SimpleGraph


def complete_graph(order: OrderLike) -> SimpleGraph:
    """K_n on vertices 1..n with all C(n,2) edges."""
    o = as_order(order)
    return SimpleGraph(n=o.n, edges=frozenset(iter_pairs(o.n)))


def canonical_orientation(graph: SimpleGraph) -> OrientedGraph:
    """Direct every edge (i, j), i < j, as the arc i -> j."""
    return OrientedGraph(n=graph.n, arcs=graph.edges)


def orient(graph: SimpleGraph, mask: int) -> OrientedGraph:
    """Orientation number `mask` of a simple graph.

    Bit t of mask reverses the t-th edge in lexicographic order; mask 0 is
    the canonical orientation.
    """
    arcs: set[Pair] = set()
    for t, (i, j) in enumerate(graph.sorted_edges()):
        arcs.add((j, i) if mask >> t & 1 else (i, j))
    return OrientedGraph(n=graph.n, arcs=frozenset(arcs))


def underlying(digraph: OrientedGraph) -> SimpleGraph:
    """Forget arc directions.

    Raises:
        InvalidPairError: if two antiparallel arcs share an underlying edge.
    """
    edges: set[Pair] = set()
    for u, v in digraph.sorted_arcs():
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise InvalidPairError(f"arcs {u}->{v} and {v}->{u} share the edge {edge}")
        edges.add(edge)
    return SimpleGraph(n=digraph.n, edges=frozenset(edges))


def is_canonically_oriented(digraph: OrientedGraph) -> bool:
    return all(u < v for u, v in digraph.arcs)
