"""Exact closed forms for the vertex sums and weights of the canonical K_n labeling.

Every polynomial with rational coefficients is evaluated as an integer
numerator over a fixed denominator (6 for the cubics), and the division
asserts a zero remainder. Python integers are unbounded, so no width limit
applies to n.

Under the canonical orientation (v_i -> v_j whenever i < j):

    S-(v_i) = (n+1)C(i,2) - n(i-1) - i(i-1)(i-2)/6       labels entering v_i
    S+(v_i) = C(n,2) + (n-(i+1))(n(i-1) - C(i,2))        labels leaving v_i
    S(v_i)  = i^3/3 - (n-1)i^2 + (n^2-n-4/3)i - n(n-3)/2
    S°(v_i) = -2/3 i^3 + (2n+1)i^2 - (n^2+2n+1/3)i + C(n+1,2)

The super total labeling f(v_i) = i, f(e_k) = n + k gives vertex-weight
w_f(v_i) = i + S(v_i) and edge-weight w(e) = ni + 2j - C(i,2).
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

from antimagic.config import resolve_limits
from antimagic.core.errors import (
    IntegralityError,
    OrderError,
    OrderLimitError,
    VertexIndexError,
)
from antimagic.core.labeling import (
    OrderLike,
    PairLike,
    as_order,
    as_pair,
    label_all,
    label_index,
    order_n,
)
from antimagic.core.models import (
    ExplicitLabeling,
    LabelKind,
    SumsReport,
    SumsRow,
    TotalWeights,
    VertexSums,
    binom2,
)

logger = logging.getLogger(__name__)


def _exact(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(f"{numerator}/{denominator} is not an integer")
    return quotient


def _check_vertex(order: OrderLike, i: int) -> int:
    n = order_n(order)
    if n < 2:
        raise OrderError(f"closed forms need n >= 2, got n={n}")
    if not 1 <= i <= n:
        raise VertexIndexError(f"vertex index {i} outside 1..{n}")
    return n


def in_sum(order: OrderLike, i: int) -> int:
    """S-(v_i): sum of the labels of the arcs entering v_i."""
    n = _check_vertex(order, i)
    return _exact(3 * (n + 1) * i * (i - 1) - 6 * n * (i - 1) - i * (i - 1) * (i - 2), 6)


def out_sum(order: OrderLike, i: int) -> int:
    """S+(v_i): sum of the labels of the arcs leaving v_i."""
    n = _check_vertex(order, i)
    return _exact(n * (n - 1) + (n - i - 1) * (2 * n * (i - 1) - i * (i - 1)), 2)


def vertex_sum(order: OrderLike, i: int) -> int:
    """S(v_i) from the cubic; equal to in_sum + out_sum."""
    n = _check_vertex(order, i)
    return _exact(
        2 * i**3 - 6 * (n - 1) * i**2 + (6 * n * n - 6 * n - 8) * i - 3 * n * (n - 3),
        6,
    )


def oriented_sum(order: OrderLike, i: int) -> int:
    """S°(v_i) = S- - S+ from the cubic."""
    n = _check_vertex(order, i)
    return _exact(
        -4 * i**3 + 6 * (2 * n + 1) * i**2 - (6 * n * n + 12 * n + 2) * i + 3 * n * (n + 1),
        6,
    )


def vertex_weight_cubic(order: OrderLike, i: int) -> int:
    """w_f(v_i) from its own cubic, independent of vertex_sum."""
    n = _check_vertex(order, i)
    return _exact(
        2 * i**3 - 6 * (n - 1) * i**2 + (6 * n * n - 6 * n - 2) * i - 3 * n * (n - 3),
        6,
    )


def vertex_weight(order: OrderLike, i: int) -> int:
    """w_f(v_i) = i + S(v_i), checked against the closed cubic."""
    weight = i + vertex_sum(order, i)
    cubic = vertex_weight_cubic(order, i)
    if weight != cubic:
        raise IntegralityError(f"vertex weight of v{i}: i + S = {weight} but cubic gives {cubic}")
    return weight


def edge_weight(order: OrderLike, pair: PairLike) -> int:
    """w(f(e)) = f(v_i) + f(v_j) + f(e) = ni + 2j - C(i,2) for e = (i, j)."""
    n = order_n(order)
    k = label_index(n, pair)
    i, j = as_pair(pair)
    weight = n * i + 2 * j - binom2(i)
    if weight != i + j + n + k:
        raise IntegralityError(f"edge weight of ({i},{j}) disagrees with i + j + n + F(i,j)")
    return weight


def vertex_sum_gap(order: OrderLike, i: int, j: int) -> int:
    """3(S(v_j) - S(v_i))/(j - i), the quadratic factor left after dividing out j - i."""
    n = order_n(order)
    return 3 * n * n - 3 * n - 4 - 3 * (n - 1) * (i + j) + i * i + i * j + j * j


def vertex_weight_gap(order: OrderLike, i: int, j: int) -> int:
    """3(w_f(v_j) - w_f(v_i))/(j - i)."""
    n = order_n(order)
    return 3 * n * n - 3 * n - 1 - 3 * (n - 1) * (i + j) + i * i + i * j + j * j


def oriented_gap(order: OrderLike, i: int, j: int) -> int:
    """3n^2 - 6n(i+j-1) + 2(i^2+ij+j^2) - 3(i+j) + 1.

    S°(v_j) - S°(v_i) = -(j - i) * oriented_gap / 3, so for i != j the
    oriented sums coincide exactly when this factor vanishes.
    """
    n = order_n(order)
    return 3 * n * n - 6 * n * (i + j - 1) + 2 * (i * i + i * j + j * j) - 3 * (i + j) + 1


def build_super_total(order: OrderLike) -> ExplicitLabeling:
    """The super total labeling f(v_i) = i, f(e) = n + F(e) of K_n."""
    o = as_order(order)
    if o.n < 2:
        raise OrderError(f"total labeling needs n >= 2, got n={o.n}")
    assignment = label_all(o)
    return ExplicitLabeling(
        kind=LabelKind.TOTAL,
        vertex_labels={v: v for v in o.vertices},
        edge_labels={pair: o.n + k for pair, k in assignment.entries.items()},
    )


def total_weights(order: OrderLike) -> TotalWeights:
    """Closed-form vertex- and edge-weights of the super total labeling."""
    o = as_order(order)
    n = o.n
    _check_vertex(o, 1)
    return TotalWeights(
        order=n,
        vertex_weights={i: vertex_weight(o, i) for i in o.vertices},
        edge_weights={
            (i, j): n * i + 2 * j - binom2(i) for i in range(1, n) for j in range(i + 1, n + 1)
        },
    )


def direct_sums(order: OrderLike) -> list[VertexSums]:
    """S-, S+, S and S° by summing labels of label_all(order) directly."""
    o = as_order(order)
    entering = {v: 0 for v in o.vertices}
    leaving = {v: 0 for v in o.vertices}
    for (i, j), k in label_all(o).entries.items():
        leaving[i] += k
        entering[j] += k
    return [
        VertexSums(
            vertex=v,
            in_sum=entering[v],
            out_sum=leaving[v],
            total_sum=entering[v] + leaving[v],
            oriented_sum=entering[v] - leaving[v],
        )
        for v in o.vertices
    ]


def _closed_row(n: int, i: int) -> SumsRow:
    s_in, s_out = in_sum(n, i), out_sum(n, i)
    total = vertex_sum(n, i)
    oriented = oriented_sum(n, i)
    if total != s_in + s_out or oriented != s_in - s_out:
        raise IntegralityError(f"v{i} of K_{n}: cubic forms disagree with S- and S+")
    return SumsRow(
        vertex=i,
        in_sum=s_in,
        out_sum=s_out,
        total_sum=total,
        oriented_sum=oriented,
        vertex_weight=vertex_weight(n, i),
    )


CLOSED_FORMS: dict[str, Callable[[int, int], int]] = {
    "in_sum": in_sum,
    "out_sum": out_sum,
    "total_sum": vertex_sum,
    "oriented_sum": oriented_sum,
}


def sums_report(order: OrderLike, max_order: Optional[int] = None) -> SumsReport:
    """Closed-form rows for every vertex of K_n, cross-checked by direct summation.

    Raises:
        OrderError: if n < 2.
        OrderLimitError: if n exceeds the work limit (default 2000).
    """
    o = as_order(order)
    if o.n < 2:
        raise OrderError(f"sums need n >= 2, got n={o.n}")
    limit = resolve_limits(max_order=max_order).max_order
    if o.n > limit:
        raise OrderLimitError(o.n, limit)
    n = o.n
    rows = [_closed_row(n, i) for i in o.vertices]
    direct = direct_sums(o)

    closed_ok = all(
        getattr(row, field) == getattr(d, field)
        for row, d in zip(rows, direct)
        for field in CLOSED_FORMS
    )
    if not closed_ok:
        logger.warning("closed forms disagree with direct summation for K_%d", n)

    totals = [r.total_sum for r in rows]
    big_n = o.size
    conservation = sum(totals) == big_n * (big_n + 1) and sum(r.oriented_sum for r in rows) == 0
    distinct = len(set(totals)) == len(totals)
    if not distinct:
        logger.debug("vertex sums of K_%d are not pairwise distinct", n)

    return SumsReport(
        order=n,
        rows=rows,
        closed_vs_direct_ok=closed_ok,
        sums_distinct=distinct,
        conservation_ok=conservation,
    )
