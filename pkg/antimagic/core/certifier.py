"""Per-n certification of the canonical K_n labelings.

Each check is exact integer arithmetic over the closed forms. Scope rule:
the distinctness theorems are stated for n >= 3, so at n = 2 their
verdicts are None (not applicable), except antimagicness, which is known
to fail for K_2.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations
from typing import Callable, Optional

from antimagic.config import resolve_limits
from antimagic.core.closed_forms import (
    oriented_gap,
    oriented_sum,
    total_weights,
    vertex_sum,
    vertex_sum_gap,
    vertex_weight,
    vertex_weight_gap,
)
from antimagic.core.errors import OrderError, OrderLimitError, ScanLimitError
from antimagic.core.labeling import OrderLike, as_order
from antimagic.core.models import (
    Certificate,
    CollisionWitness,
    DistinctnessCheck,
    ExceptionQuadruple,
    Pair,
    ScanSummary,
)
from antimagic.core.oracle import first_collision

logger = logging.getLogger(__name__)

NOT_APPLICABLE = "theorem stated for n >= 3"
K2_NOT_ANTIMAGIC = "K_2 is not antimagic: its two vertex sums are both 1"


def _require_order(order: OrderLike) -> int:
    n = as_order(order).n
    if n < 2:
        raise OrderError(f"certification needs n >= 2, got n={n}")
    return n


def _distinctness(
    n: int,
    value: Callable[[int, int], int],
    gap: Callable[[int, int, int], int],
) -> DistinctnessCheck:
    """Exact distinctness of value(n, .) plus strict increase in i.

    Strict increase is checked on consecutive values and, independently, by
    requiring the difference factor gap(n, i, j) to be positive for every
    pair i < j.
    """
    values = [value(n, i) for i in range(1, n + 1)]
    result = first_collision(list(range(1, n + 1)), values)
    increasing = all(a < b for a, b in zip(values, values[1:]))
    factor_positive = all(gap(n, i, j) > 0 for i, j in combinations(range(1, n + 1), 2))
    return DistinctnessCheck(
        holds=result.holds,
        witness=result.witness,
        witness_value=result.witness_value,
        strictly_increasing=increasing,
        methods_agree=increasing == factor_positive,
        values=values,
    )


def certify_vertex_sums(order: OrderLike) -> DistinctnessCheck:
    """Vertex sums S(v_1..v_n) of the canonical labeling are pairwise distinct."""
    n = _require_order(order)
    if n < 3:
        values = [vertex_sum(n, i) for i in range(1, n + 1)]
        return DistinctnessCheck(
            holds=False,
            witness=(1, 2),
            witness_value=values[0],
            strictly_increasing=False,
            values=values,
            note=K2_NOT_ANTIMAGIC,
        )
    return _distinctness(n, vertex_sum, vertex_sum_gap)


def certify_vertex_weights(order: OrderLike) -> DistinctnessCheck:
    """Vertex-weights of the super total labeling are pairwise distinct."""
    n = _require_order(order)
    if n < 3:
        return DistinctnessCheck(holds=None, note=NOT_APPLICABLE)
    return _distinctness(n, vertex_weight, vertex_weight_gap)


def certify_oriented_sums(order: OrderLike) -> DistinctnessCheck:
    """Oriented sums S°(v_1..v_n) of the canonical labeling are pairwise distinct.

    Two independent methods: grouping the S° values, and testing the
    integer factor oriented_gap(n, i, j) != 0 for every pair i < j. The
    witness is the first colliding pair found by direct comparison.
    """
    n = _require_order(order)
    if n < 3:
        return DistinctnessCheck(holds=None, note=NOT_APPLICABLE)
    values = [oriented_sum(n, i) for i in range(1, n + 1)]
    direct = first_collision(list(range(1, n + 1)), values)

    agree = True
    vanishing: Optional[Pair] = None
    for i, j in combinations(range(1, n + 1), 2):
        factor_zero = oriented_gap(n, i, j) == 0
        if factor_zero != (values[i - 1] == values[j - 1]):
            agree = False
        if factor_zero and vanishing is None:
            vanishing = (i, j)
    if vanishing != direct.witness:
        agree = False
    if not agree:
        logger.warning("oriented-sum methods disagree for K_%d", n)
    if not direct.holds:
        logger.debug("K_%d: oriented sums collide at %s", n, direct.witness)

    return DistinctnessCheck(
        holds=direct.holds,
        witness=direct.witness,
        witness_value=direct.witness_value,
        methods_agree=agree,
        values=values,
    )


def edge_weight_collisions(order: OrderLike) -> list[CollisionWitness]:
    """Every pair of distinct edges with equal super-total edge-weight, sorted."""
    n = _require_order(order)
    groups: dict[int, list[Pair]] = {}
    for pair, weight in total_weights(n).edge_weights.items():
        groups.setdefault(weight, []).append(pair)
    collisions = [
        CollisionWitness(first=a, second=b, weight=weight)
        for weight, pairs in groups.items()
        for a, b in combinations(sorted(pairs), 2)
    ]
    return sorted(collisions, key=lambda c: (c.first, c.second))


def theorem5_exceptions(order: OrderLike) -> list[ExceptionQuadruple]:
    """Quadruples 1 <= i < i' < j' < j <= n with 4(j - j') = (i' - i)(2n - i - i' + 1).

    For each (i, i') the right side fixes d = j - j' when it is divisible
    by 4; j' then ranges over i' + 1 .. n - d.
    """
    n = _require_order(order)
    found: list[ExceptionQuadruple] = []
    for i, i_prime in combinations(range(1, n + 1), 2):
        product = (i_prime - i) * (2 * n - i - i_prime + 1)
        if product % 4:
            continue
        d = product // 4
        for j_prime in range(i_prime + 1, n - d + 1):
            found.append(ExceptionQuadruple(i=i, i_prime=i_prime, j_prime=j_prime, j=j_prime + d))
    return sorted(found, key=lambda q: q.as_tuple())


def certify(order: OrderLike, max_order: Optional[int] = None) -> Certificate:
    """All verdicts for K_n under the canonical and super total labelings.

    Raises:
        OrderError: if n < 2.
        OrderLimitError: if n exceeds the work limit (default 2000).
    """
    n = _require_order(order)
    limit = resolve_limits(max_order=max_order).max_order
    if n > limit:
        raise OrderLimitError(n, limit)
    sums = certify_vertex_sums(n)
    weights = certify_vertex_weights(n)
    oriented = certify_oriented_sums(n)
    collisions = edge_weight_collisions(n)
    exceptions = theorem5_exceptions(n)

    pairs_from_exceptions = sorted(q.collision_pair for q in exceptions)
    pairs_from_collisions = sorted((c.first, c.second) for c in collisions)
    if pairs_from_exceptions != pairs_from_collisions:
        logger.warning("K_%d: exception scan and collision scan disagree", n)

    if n < 3:
        return Certificate(
            order=n,
            antimagic_ok=sums.holds,
            vertex_total_ok=None,
            edge_total_ok=None,
            totally_total_ok=None,
            oriented_ok=None,
            collisions=collisions,
            exceptions=exceptions,
            sums_check=sums,
            weights_check=weights,
            oriented_check=oriented,
        )

    edge_ok = not collisions
    return Certificate(
        order=n,
        antimagic_ok=sums.holds,
        vertex_total_ok=weights.holds,
        edge_total_ok=edge_ok,
        totally_total_ok=bool(weights.holds) and edge_ok,
        oriented_ok=oriented.holds,
        collisions=collisions,
        exceptions=exceptions,
        sums_check=sums,
        weights_check=weights,
        oriented_check=oriented,
    )


def scan_range(
    n_lo: int,
    n_hi: int,
    max_span: Optional[int] = None,
    workers: Optional[int] = None,
    max_order: Optional[int] = None,
) -> ScanSummary:
    """Certificates for every n in n_lo..n_hi, in ascending n.

    Raises:
        OrderError: if n_lo < 2 or n_lo > n_hi.
        ScanLimitError: if the range is wider than the configured span.
        OrderLimitError: if n_hi exceeds the work limit.
        InvalidLimitError: on a span, worker count or order limit out of range.
    """
    limits = resolve_limits(scan_span=max_span, workers=workers, max_order=max_order)
    if n_lo < 2:
        raise OrderError(f"scan must start at n >= 2, got {n_lo}")
    if n_lo > n_hi:
        raise OrderError(f"empty scan range {n_lo}..{n_hi}")
    span = n_hi - n_lo + 1
    if span > limits.scan_span:
        raise ScanLimitError(f"scan of {span} orders exceeds the limit of {limits.scan_span}")
    if n_hi > limits.max_order:
        raise OrderLimitError(n_hi, limits.max_order)

    orders = list(range(n_lo, n_hi + 1))
    one = partial(certify, max_order=limits.max_order)
    if limits.workers > 1 and span > 1:
        logger.debug("scanning %d orders on %d workers", span, limits.workers)
        with ProcessPoolExecutor(max_workers=limits.workers) as executor:
            rows = list(executor.map(one, orders))
    else:
        rows = [one(n) for n in orders]
    return ScanSummary(n_lo=n_lo, n_hi=n_hi, rows=rows)
