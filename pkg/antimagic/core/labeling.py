"""Canonical edge labeling of K_n: the lexicographic pair ranking and its inverse.

Edge (i, j) with i < j receives F(i, j) = (i-1)n - C(i,2) + j - i, its 1-based
rank among all pairs of {1..n} in lexicographic order. Restricting F to the
edges of a subgraph gives that subgraph's (injective, usually not onto)
labeling.
"""

from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Iterator, Union

from antimagic.core.errors import (
    InvalidPairError,
    LabelOutOfRangeError,
    OrderError,
)
from antimagic.core.models import (
    EdgePair,
    LabelAssignment,
    OrientedGraph,
    Order,
    Pair,
    SimpleGraph,
    binom2,
)

logger = logging.getLogger(__name__)

OrderLike = Union[Order, int]
PairLike = Union[EdgePair, Pair]


def as_order(order: OrderLike) -> Order:
    """Coerce an int or Order into an Order, rejecting n < 1."""
    if isinstance(order, Order):
        return order
    return Order(n=order_n(order))


def order_n(order: OrderLike) -> int:
    """The vertex count of an int or Order, validated without building a model."""
    if isinstance(order, Order):
        return order.n
    if isinstance(order, bool) or not isinstance(order, int):
        raise OrderError(f"vertex count must be an integer, got {order!r}")
    if order < 1:
        raise OrderError(f"vertex count must be at least 1, got {order}")
    return order


def as_pair(pair: PairLike) -> Pair:
    if isinstance(pair, EdgePair):
        return pair.as_tuple()
    i, j = pair
    return (int(i), int(j))


def _require_labelable(order: Order) -> None:
    if order.n < 2:
        raise OrderError(f"K_{order.n} has no edges to label; need n >= 2")


def _check_pair(n: int, i: int, j: int) -> None:
    if i < 1:
        raise InvalidPairError(f"pair ({i},{j}): vertex index {i} is below 1")
    if i >= j:
        raise InvalidPairError(f"pair ({i},{j}): need i < j")
    if j > n:
        raise InvalidPairError(f"pair ({i},{j}): vertex index {j} exceeds n={n}")


def _rows_before(n: int, i: int) -> int:
    """Number of pairs whose first index is below i: (i-1)n - C(i,2)."""
    return (i - 1) * n - binom2(i)


def rank_pair(n: int, i: int, j: int) -> int:
    """F(i, j) without validation; callers guarantee 1 <= i < j <= n."""
    return _rows_before(n, i) + j - i


def iter_pairs(n: int) -> Iterator[Pair]:
    """All pairs (i, j), 1 <= i < j <= n, in lexicographic order."""
    return combinations(range(1, n + 1), 2)


def label_index(order: OrderLike, pair: PairLike) -> int:
    """Return the label F(i, j) of edge (i, j) in K_n.

    Raises:
        OrderError: if n < 2.
        InvalidPairError: if the pair is not 1 <= i < j <= n.
    """
    n = order_n(order)
    if n < 2:
        raise OrderError(f"K_{n} has no edges to label; need n >= 2")
    i, j = as_pair(pair)
    _check_pair(n, i, j)
    return rank_pair(n, i, j)


def label_inverse(order: OrderLike, k: int) -> Pair:
    """Return the unique edge (i, j) of K_n with F(i, j) = k.

    The row i is the largest index with fewer than k pairs before it. It is
    estimated from the quadratic bound with an integer square root, then
    corrected by stepping until the bound holds exactly.

    Raises:
        OrderError: if n < 2.
        LabelOutOfRangeError: if k is outside 1..C(n,2).
    """
    o = as_order(order)
    _require_labelable(o)
    n = o.n
    if not 1 <= k <= o.size:
        raise LabelOutOfRangeError(f"label {k} outside 1..{o.size} for K_{n}")

    disc = (2 * n - 1) ** 2 - 8 * (k - 1)
    i = ((2 * n + 1) - math.isqrt(disc)) // 2
    i = min(max(i, 1), n - 1)
    while i < n - 1 and _rows_before(n, i + 1) < k:
        i += 1
    while i > 1 and _rows_before(n, i) >= k:
        i -= 1

    j = k - _rows_before(n, i) + i
    return (i, j)


def label_all(order: OrderLike) -> LabelAssignment:
    """Label every edge of K_n; a bijection onto 1..C(n,2).

    K_1 yields an empty assignment; n = 0 is rejected by `as_order`.
    """
    o = as_order(order)
    n = o.n
    entries = {(i, j): rank_pair(n, i, j) for i, j in iter_pairs(n)}
    logger.debug("labeled %d edges of K_%d", len(entries), n)
    return LabelAssignment(order=o, entries=entries)


def label_subgraph(graph: Union[SimpleGraph, OrientedGraph]) -> LabelAssignment:
    """Label each edge of a subgraph of K_n (or arc of the canonical K_n) by F.

    Isolated vertices are allowed; only existing edges are labeled. An
    oriented graph must use canonical arcs i -> j with i < j.

    Raises:
        InvalidPairError: on an endpoint outside 1..n or a non-canonical arc.
    """
    n = graph.n
    keys = graph.arcs if isinstance(graph, OrientedGraph) else graph.edges
    entries: dict[Pair, int] = {}
    for i, j in sorted(keys):
        if isinstance(graph, OrientedGraph) and i > j:
            raise InvalidPairError(
                f"arc {i}->{j} is not an arc of the canonical orientation of K_{n}"
            )
        _check_pair(n, i, j)
        entries[(i, j)] = rank_pair(n, i, j)
    return LabelAssignment(order=Order(n=n), entries=entries)


def is_canonical(assignment: LabelAssignment) -> bool:
    """True when every stored label equals F of its pair."""
    n = assignment.order.n
    return all(k == rank_pair(n, i, j) for (i, j), k in assignment.entries.items())
