"""Edge-list text format for graphs, orientations and their labelings.

Format (UTF-8, LF line endings):

    [directed] n l        header; the `directed` token marks an arc list
    i j [k]               l edge lines, 1-based endpoints, optional label k
    v i k                 optional vertex-label lines (all n or none)
    # ...                 comment lines, ignored anywhere

Edge labels alone must form a bijection onto 1..l. With vertex lines the
labels together must form a bijection onto 1..n+l (a total labeling).
Undirected edges are stored with i < j; serialization sorts lines
lexicographically and never emits trailing whitespace.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel

from antimagic.core.errors import EdgeListFormatError, NonBijectiveLabelingError
from antimagic.core.models import (
    ExplicitLabeling,
    LabelAssignment,
    LabelKind,
    OrientedGraph,
    Pair,
    SimpleGraph,
)

DIRECTED_TOKEN = "directed"
VERTEX_TOKEN = "v"


class EdgeListDocument(BaseModel):
    """A parsed edge list: the (di)graph plus its labeling, if any."""

    graph: Union[SimpleGraph, OrientedGraph]
    labeling: Optional[ExplicitLabeling] = None

    @property
    def directed(self) -> bool:
        return isinstance(self.graph, OrientedGraph)


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListFormatError(f"{what} {token!r} is not an integer", line_no) from None


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((line_no, stripped.split()))
    return lines


def _parse_header(line_no: int, tokens: list[str]) -> tuple[bool, int, int]:
    directed = bool(tokens) and tokens[0] == DIRECTED_TOKEN
    if directed:
        tokens = tokens[1:]
    if len(tokens) != 2:
        raise EdgeListFormatError("header must be '[directed] n l'", line_no)
    n = _int(tokens[0], line_no, "vertex count")
    size = _int(tokens[1], line_no, "edge count")
    if n < 1:
        raise EdgeListFormatError(f"vertex count must be at least 1, got {n}", line_no)
    if size < 0:
        raise EdgeListFormatError(f"edge count must be non-negative, got {size}", line_no)
    return directed, n, size


def _check_labels(
    labels: dict[int, int], top: int, what: str
) -> None:
    """labels maps line number -> label; all must be distinct and in 1..top."""
    seen: dict[int, int] = {}
    for line_no, k in labels.items():
        if not 1 <= k <= top:
            raise EdgeListFormatError(f"label {k} outside 1..{top} ({what})", line_no)
        if k in seen:
            raise EdgeListFormatError(
                f"label {k} already used on line {seen[k]} ({what})", line_no
            )
        seen[k] = line_no


def parse_edge_list(text: str, directed: Optional[bool] = None) -> EdgeListDocument:
    """Parse edge-list text into a graph or orientation with optional labels.

    Args:
        text: The edge-list text.
        directed: Force arc semantics even without the header token.

    Raises:
        EdgeListFormatError: on any malformed line, with its line number.
    """
    lines = _content_lines(text)
    if not lines:
        raise EdgeListFormatError("missing header line", 1)

    header_no, header = lines[0]
    header_directed, n, size = _parse_header(header_no, header)
    is_directed = header_directed or bool(directed)

    edge_lines = [(no, toks) for no, toks in lines[1:] if toks[0] != VERTEX_TOKEN]
    vertex_lines = [(no, toks) for no, toks in lines[1:] if toks[0] == VERTEX_TOKEN]

    if len(edge_lines) != size:
        at = edge_lines[size][0] if len(edge_lines) > size else lines[-1][0]
        raise EdgeListFormatError(f"header declares {size} edges, found {len(edge_lines)}", at)

    keys: dict[Pair, int] = {}
    edge_labels: dict[int, int] = {}
    keyed_labels: dict[Pair, int] = {}
    width: Optional[int] = None
    for line_no, tokens in edge_lines:
        if len(tokens) not in (2, 3):
            raise EdgeListFormatError("edge line must be 'i j' or 'i j k'", line_no)
        if width is not None and len(tokens) != width:
            raise EdgeListFormatError("label column must be present on all edge lines or none", line_no)
        width = len(tokens)
        u = _int(tokens[0], line_no, "vertex")
        v = _int(tokens[1], line_no, "vertex")
        for x in (u, v):
            if not 1 <= x <= n:
                raise EdgeListFormatError(f"vertex {x} outside 1..{n}", line_no)
        if u == v:
            raise EdgeListFormatError(f"self-loop at vertex {u}", line_no)
        key = (u, v) if is_directed else (min(u, v), max(u, v))
        if key in keys:
            raise EdgeListFormatError(f"duplicate edge {key} (first on line {keys[key]})", line_no)
        if is_directed and (v, u) in keys:
            raise EdgeListFormatError(
                f"arc {u}->{v} reverses the arc on line {keys[(v, u)]}", line_no
            )
        keys[key] = line_no
        if len(tokens) == 3:
            k = _int(tokens[2], line_no, "label")
            edge_labels[line_no] = k
            keyed_labels[key] = k

    vertex_labels: dict[int, int] = {}
    vertex_label_lines: dict[int, int] = {}
    for line_no, tokens in vertex_lines:
        if len(tokens) != 3:
            raise EdgeListFormatError("vertex line must be 'v i k'", line_no)
        vertex = _int(tokens[1], line_no, "vertex")
        if not 1 <= vertex <= n:
            raise EdgeListFormatError(f"vertex {vertex} outside 1..{n}", line_no)
        if vertex in vertex_labels:
            raise EdgeListFormatError(f"vertex {vertex} labeled twice", line_no)
        k = _int(tokens[2], line_no, "label")
        vertex_labels[vertex] = k
        vertex_label_lines[line_no] = k

    if vertex_labels and len(vertex_labels) != n:
        raise EdgeListFormatError(
            f"vertex labels given for {len(vertex_labels)} of {n} vertices",
            vertex_lines[-1][0],
        )
    if vertex_labels and size and not keyed_labels:
        raise EdgeListFormatError("vertex labels need labeled edges", vertex_lines[0][0])

    labeling: Optional[ExplicitLabeling] = None
    if vertex_labels:
        _check_labels({**edge_labels, **vertex_label_lines}, n + size, "total labeling")
        labeling = ExplicitLabeling(
            kind=LabelKind.TOTAL, edge_labels=keyed_labels, vertex_labels=vertex_labels
        )
    elif keyed_labels:
        _check_labels(edge_labels, size, "edge labeling")
        labeling = ExplicitLabeling(kind=LabelKind.EDGE, edge_labels=keyed_labels)

    graph: Union[SimpleGraph, OrientedGraph]
    if is_directed:
        graph = OrientedGraph(n=n, arcs=frozenset(keys))
    else:
        graph = SimpleGraph(n=n, edges=frozenset(keys))
    return EdgeListDocument(graph=graph, labeling=labeling)


def parse_file(
    file_path: Union[str, Path],
    directed: Optional[bool] = None,
) -> EdgeListDocument:
    """Parse an edge-list file (UTF-8).

    Raises:
        OSError: if the file cannot be read.
        EdgeListFormatError: on undecodable bytes or malformed content.
    """
    path = Path(file_path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        line_no = e.object[: e.start].count(b"\n") + 1
        raise EdgeListFormatError(f"{path.name} is not valid UTF-8", line_no) from None
    return parse_edge_list(text, directed=directed)


def serialize(
    graph: Union[SimpleGraph, OrientedGraph],
    labeling: Optional[Union[ExplicitLabeling, LabelAssignment]] = None,
) -> str:
    """Render a (di)graph and optional labeling in canonical edge-list form.

    Raises:
        NonBijectiveLabelingError: if the labeling does not cover exactly the
            graph's edges (and, for total labelings, its vertices).
    """
    if isinstance(labeling, LabelAssignment):
        labeling = ExplicitLabeling.from_assignment(labeling)

    directed = isinstance(graph, OrientedGraph)
    keys = sorted(graph.arcs) if directed else graph.sorted_edges()
    header = f"{graph.n} {len(keys)}"
    out = [f"{DIRECTED_TOKEN} {header}" if directed else header]

    if labeling is None:
        out.extend(f"{u} {v}" for u, v in keys)
        return "\n".join(out) + "\n"

    if labeling.kind == LabelKind.VERTEX:
        raise NonBijectiveLabelingError("a vertex-only labeling has no edge-list form")
    if set(labeling.edge_labels) != set(keys):
        missing = sorted(set(keys) - set(labeling.edge_labels))
        extra = sorted(set(labeling.edge_labels) - set(keys))
        raise NonBijectiveLabelingError(
            f"labeling does not match the edges (unlabeled {missing}, unknown {extra})"
        )
    out.extend(f"{u} {v} {labeling.edge_labels[(u, v)]}" for u, v in keys)

    if labeling.kind == LabelKind.TOTAL:
        if set(labeling.vertex_labels) != set(range(1, graph.n + 1)):
            raise NonBijectiveLabelingError("total labeling must label every vertex")
        out.extend(
            f"{VERTEX_TOKEN} {v} {labeling.vertex_labels[v]}" for v in range(1, graph.n + 1)
        )
    return "\n".join(out) + "\n"
