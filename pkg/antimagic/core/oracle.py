"""Definition-level checkers and exhaustive searches over labelings.

The checkers recompute every sum and weight from the definitions, with no
closed forms, so they serve as the independent oracle for the closed forms
and the certificates.

The exhaustive searches enumerate labelings in lexicographic permutation
order: the labeling with permutation p gives the t-th edge (lexicographic
edge order) the label p[t]. Permutations are split into blocks by their
first label; each block is scanned in vectorized chunks (labels @ incidence
matrix) and block results are merged by summing counts and keeping the
first hit of the lowest block, so a parallel run returns exactly what the
sequential scan returns.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from itertools import islice, permutations
from typing import Any, Callable, Iterator, Mapping, Optional, Sequence, Union

import numpy as np

from antimagic.config import resolve_limits
from antimagic.core.errors import NonBijectiveLabelingError, SearchCapExceededError
from antimagic.core.graphs import orient, underlying
from antimagic.core.labeling import label_subgraph
from antimagic.core.models import (
    CheckResult,
    ExplicitLabeling,
    Key,
    LabelAssignment,
    LabelKind,
    OrientedGraph,
    Pair,
    SearchOutcome,
    SimpleGraph,
    TotalCheck,
)

logger = logging.getLogger(__name__)

Graphish = Union[SimpleGraph, OrientedGraph]
LabelSource = Union[ExplicitLabeling, LabelAssignment, Mapping[Pair, int]]


# --- definition-level checkers ---


def _edge_keys(graph: Graphish) -> list[Pair]:
    if isinstance(graph, OrientedGraph):
        return graph.sorted_arcs()
    return graph.sorted_edges()


def _edge_label_map(labeling: LabelSource) -> dict[Pair, int]:
    if isinstance(labeling, ExplicitLabeling):
        return dict(labeling.edge_labels)
    if isinstance(labeling, LabelAssignment):
        return dict(labeling.entries)
    return dict(labeling)


def first_collision(keys: Sequence[Key], values: Sequence[int]) -> CheckResult:
    """Distinctness of `values`; the witness is the lexicographically first equal pair."""
    groups: dict[int, list[int]] = {}
    for index, value in enumerate(values):
        groups.setdefault(value, []).append(index)
    best: Optional[tuple[int, int]] = None
    for members in groups.values():
        if len(members) > 1 and (best is None or (members[0], members[1]) < best):
            best = (members[0], members[1])
    if best is None:
        return CheckResult(holds=True, values=list(values))
    a, b = best
    return CheckResult(
        holds=False,
        witness=(keys[a], keys[b]),
        witness_value=values[a],
        values=list(values),
    )


def _require_edge_bijection(keys: list[Pair], labels: dict[Pair, int]) -> None:
    if set(labels) != set(keys):
        missing = sorted(set(keys) - set(labels))
        extra = sorted(set(labels) - set(keys))
        raise NonBijectiveLabelingError(
            f"labeling does not match the edges (unlabeled {missing}, unknown {extra})"
        )
    image = sorted(labels.values())
    if image != list(range(1, len(keys) + 1)):
        raise NonBijectiveLabelingError(
            f"edge labels are not a bijection onto 1..{len(keys)}: {image}"
        )


def vertex_sums(graph: Graphish, labels: Mapping[Pair, int]) -> list[int]:
    """S_u = sum of the labels on edges (or arcs, either direction) at u."""
    sums = [0] * graph.n
    for (u, v), k in labels.items():
        sums[u - 1] += k
        sums[v - 1] += k
    return sums


def oriented_vertex_sums(digraph: OrientedGraph, labels: Mapping[Pair, int]) -> list[int]:
    """S°_u = labels entering u minus labels leaving u."""
    sums = [0] * digraph.n
    for (u, v), k in labels.items():
        sums[u - 1] -= k
        sums[v - 1] += k
    return sums


def check_antimagic(graph: Graphish, labeling: LabelSource) -> CheckResult:
    """All vertex sums pairwise distinct under a bijection E -> 1..l.

    For an oriented graph the vertex sum counts entering and leaving arcs.

    Raises:
        NonBijectiveLabelingError: before any check, if the labeling is not
            a bijection from the edges onto 1..l.
    """
    keys = _edge_keys(graph)
    labels = _edge_label_map(labeling)
    _require_edge_bijection(keys, labels)
    return first_collision(list(range(1, graph.n + 1)), vertex_sums(graph, labels))


def check_oriented_antimagic(digraph: OrientedGraph, labeling: LabelSource) -> CheckResult:
    """All oriented vertex sums pairwise distinct under a bijection on the arcs."""
    keys = _edge_keys(digraph)
    labels = _edge_label_map(labeling)
    _require_edge_bijection(keys, labels)
    return first_collision(list(range(1, digraph.n + 1)), oriented_vertex_sums(digraph, labels))


def subgraph_sums(graph: Graphish) -> CheckResult:
    """Vertex sums of the canonical labeling restricted to a subgraph of K_n.

    The labels are injective but usually not onto 1..l, so no bijection is
    required; the result reports whether the sums are pairwise distinct.
    """
    assignment = label_subgraph(graph)
    return first_collision(list(range(1, graph.n + 1)), vertex_sums(graph, assignment.entries))


def check_total(graph: Graphish, labeling: ExplicitLabeling) -> TotalCheck:
    """Evaluate a candidate total labeling against every total-labeling definition.

    Never raises on a bad labeling: every defect is listed and the flags it
    invalidates are False. Antimagic flags are only True for total labelings.
    """
    n = graph.n
    keys = _edge_keys(graph)
    size = len(keys)
    vertex_labels = dict(labeling.vertex_labels)
    edge_labels = dict(labeling.edge_labels)
    defects: list[str] = []

    for v in range(1, n + 1):
        if v not in vertex_labels:
            defects.append(f"v{v} has no label")
    for key in keys:
        if key not in edge_labels:
            defects.append(f"edge {key} has no label")
    for v in sorted(set(vertex_labels) - set(range(1, n + 1))):
        defects.append(f"v{v} is not a vertex")
    for key in sorted(set(edge_labels) - set(keys)):
        defects.append(f"{key} is not an edge")

    owners: dict[int, list[str]] = {}
    for v, k in sorted(vertex_labels.items()):
        owners.setdefault(k, []).append(f"v{v}")
    for key, k in sorted(edge_labels.items()):
        owners.setdefault(k, []).append(str(key))
    for k, who in sorted(owners.items()):
        if len(who) > 1:
            defects.append(f"label {k} used by {', '.join(who)}")
        if not 1 <= k <= n + size:
            defects.append(f"label {k} outside 1..{n + size}")

    is_total = not defects
    is_super = is_total and set(vertex_labels.values()) == set(range(1, n + 1))
    is_super_edge = is_super and set(edge_labels.values()) == set(range(n + 1, n + size + 1))

    vertex_check: Optional[CheckResult] = None
    edge_check: Optional[CheckResult] = None
    if is_total:
        sums = vertex_sums(graph, edge_labels)
        vertex_check = first_collision(
            list(range(1, n + 1)), [vertex_labels[v] + sums[v - 1] for v in range(1, n + 1)]
        )
        edge_check = first_collision(
            keys, [vertex_labels[u] + vertex_labels[v] + edge_labels[(u, v)] for u, v in keys]
        )

    vertex_ok = bool(vertex_check and vertex_check.holds)
    edge_ok = bool(edge_check and edge_check.holds)
    return TotalCheck(
        is_total=is_total,
        is_super=is_super,
        is_super_edge=is_super_edge,
        vertex_antimagic_total=vertex_ok,
        edge_antimagic_total=edge_ok,
        totally_antimagic_total=vertex_ok and edge_ok,
        super_edge_antimagic_total=is_super_edge and edge_ok,
        vertex_check=vertex_check,
        edge_check=edge_check,
        defects=defects,
    )


# --- exhaustive search ---


def _incidence(n: int, keys: Sequence[Pair], signed: bool) -> np.ndarray:
    """(l, n) matrix M with (labels @ M)[u] the (oriented) vertex sum of u."""
    matrix = np.zeros((len(keys), n), dtype=np.int64)
    for t, (u, v) in enumerate(keys):
        matrix[t, v - 1] += 1
        matrix[t, u - 1] += -1 if signed else 1
    return matrix


def _distinct_rows(sums: np.ndarray) -> np.ndarray:
    ordered = np.sort(sums, axis=1)
    return np.all(ordered[:, 1:] != ordered[:, :-1], axis=1)


def _block_permutations(size: int, first: Optional[int]) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..size starting with `first`, in lexicographic order."""
    if first is None:
        yield from permutations(range(1, size + 1))
        return
    rest = [x for x in range(1, size + 1) if x != first]
    for tail in permutations(rest):
        yield (first, *tail)


def _chunks(size: int, first: Optional[int], chunk_size: int) -> Iterator[tuple[list, np.ndarray]]:
    it = _block_permutations(size, first)
    while True:
        chunk = list(islice(it, chunk_size))
        if not chunk:
            return
        yield chunk, np.array(chunk, dtype=np.int64).reshape(len(chunk), size)


def _labeling_block(
    n: int, keys: list[Pair], first: Optional[int], chunk_size: int
) -> tuple[int, Optional[tuple[int, ...]]]:
    matrix = _incidence(n, keys, signed=False)
    count, hit = 0, None
    for chunk, labels in _chunks(len(keys), first, chunk_size):
        ok = np.flatnonzero(_distinct_rows(labels @ matrix))
        count += int(ok.size)
        if hit is None and ok.size:
            hit = chunk[int(ok[0])]
    return count, hit


def _orientation_block(
    n: int, edges: list[Pair], first: Optional[int], chunk_size: int
) -> tuple[list[int], list[Optional[tuple[int, ...]]]]:
    """Per-orientation counts and first hits for one block of labelings."""
    masks = range(2 ** len(edges))
    matrices = []
    for mask in masks:
        arcs = [(j, i) if mask >> t & 1 else (i, j) for t, (i, j) in enumerate(edges)]
        matrices.append(_incidence(n, arcs, signed=True))
    counts = [0 for _ in masks]
    hits: list[Optional[tuple[int, ...]]] = [None for _ in masks]
    for chunk, labels in _chunks(len(edges), first, chunk_size):
        for mask, matrix in zip(masks, matrices):
            ok = np.flatnonzero(_distinct_rows(labels @ matrix))
            counts[mask] += int(ok.size)
            if hits[mask] is None and ok.size:
                hits[mask] = chunk[int(ok[0])]
    return counts, hits


def _run_blocks(fn: Callable[..., Any], blocks: list[tuple], workers: int) -> list[Any]:
    """Evaluate blocks in order, in-process or on a process pool."""
    if workers <= 1 or len(blocks) <= 1:
        return [fn(*block) for block in blocks]
    logger.debug("dispatching %d blocks to %d workers", len(blocks), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, *zip(*blocks)))


def _firsts(size: int) -> list[Optional[int]]:
    return list(range(1, size + 1)) if size else [None]


def exhaustive_antimagic(
    graph: Graphish,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> SearchOutcome:
    """Try all l! bijections E -> 1..l; count the antimagic ones.

    Raises:
        SearchCapExceededError: if l exceeds the cap (default 10 edges).
        InvalidLimitError: on a negative cap, workers < 1 or chunk_size < 1.
    """
    limits = resolve_limits(search_cap=cap, workers=workers, chunk_size=chunk_size)
    cap, workers, chunk_size = limits.search_cap, limits.workers, limits.chunk_size
    keys = _edge_keys(graph)
    size = len(keys)
    if size > cap:
        raise SearchCapExceededError(size, cap)

    blocks = [(graph.n, keys, first, chunk_size) for first in _firsts(size)]
    results = _run_blocks(_labeling_block, blocks, workers)

    count = sum(c for c, _ in results)
    hit = next((h for _, h in results if h is not None), None)
    logger.debug("antimagic search on %d edges: %d of %d labelings", size, count, math.factorial(size))

    example = None
    if hit is not None:
        example = ExplicitLabeling(kind=LabelKind.EDGE, edge_labels=dict(zip(keys, hit)))
    return SearchOutcome(
        exists=hit is not None,
        count=count,
        examined=math.factorial(size),
        example=example,
    )


def exhaustive_orientation_antimagic(
    graph: Graphish,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> SearchOutcome:
    """Try all 2^l orientations x l! labelings for oriented antimagicness.

    `count` is the number of antimagic (orientation, labeling) pairs; the
    example is the first in (orientation number, labeling) order, with
    orientation numbers as in `graphs.orient`. The census fields report how
    many orientations admit some antimagic labeling.

    Raises:
        SearchCapExceededError: if l exceeds the cap (default 8 edges).
        InvalidLimitError: on a negative cap, workers < 1 or chunk_size < 1.
    """
    if isinstance(graph, OrientedGraph):
        graph = underlying(graph)
    limits = resolve_limits(orientation_cap=cap, workers=workers, chunk_size=chunk_size)
    cap, workers, chunk_size = limits.orientation_cap, limits.workers, limits.chunk_size
    edges = graph.sorted_edges()
    size = len(edges)
    if size > cap:
        raise SearchCapExceededError(size, cap)

    blocks = [(graph.n, edges, first, chunk_size) for first in _firsts(size)]
    results = _run_blocks(_orientation_block, blocks, workers)

    total_orientations = 2**size
    per_mask = [sum(counts[mask] for counts, _ in results) for mask in range(total_orientations)]
    example = None
    orientation = None
    for mask in range(total_orientations):
        hit = next((hits[mask] for _, hits in results if hits[mask] is not None), None)
        if hit is not None:
            orientation = orient(graph, mask)
            arcs = [(j, i) if mask >> t & 1 else (i, j) for t, (i, j) in enumerate(edges)]
            example = ExplicitLabeling(kind=LabelKind.EDGE, edge_labels=dict(zip(arcs, hit)))
            break

    return SearchOutcome(
        exists=example is not None,
        count=sum(per_mask),
        examined=total_orientations * math.factorial(size),
        example=example,
        orientation=orientation,
        orientations_total=total_orientations,
        orientations_antimagic=sum(1 for c in per_mask if c),
    )
