"""Data models for labelings, graphs, sums reports and certificates."""

from __future__ import annotations

import enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Pair = tuple[int, int]
Key = Union[int, Pair]


def binom2(m: int) -> int:
    """C(m, 2), computed as the product halved."""
    return (m * (m - 1)) // 2


class LabelKind(str, enum.Enum):
    """Which elements of the graph carry labels."""

    VERTEX = "vertex"
    EDGE = "edge"
    TOTAL = "total"


class Order(BaseModel):
    """The vertex count n of K_n, with N = C(n,2) edge labels."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)

    @property
    def size(self) -> int:
        """N = C(n, 2), the number of edges and labels."""
        return binom2(self.n)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __str__(self) -> str:
        return f"K_{self.n}"


class EdgePair(BaseModel):
    """An unordered edge {v_i, v_j} written with i < j."""

    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1)
    j: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_increasing(self) -> EdgePair:
        if self.i >= self.j:
            raise ValueError(f"edge pair must satisfy i < j, got ({self.i}, {self.j})")
        return self

    def as_tuple(self) -> Pair:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


class LabelAssignment(BaseModel):
    """Injective map from edge pairs of K_n to labels in 1..C(n,2)."""

    model_config = ConfigDict(frozen=True)

    order: Order
    entries: dict[Pair, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_injective(self) -> LabelAssignment:
        n, top = self.order.n, self.order.size
        seen: set[int] = set()
        for (i, j), k in self.entries.items():
            if not 1 <= i < j <= n:
                raise ValueError(f"pair ({i},{j}) is not an edge of K_{n}")
            if not 1 <= k <= top:
                raise ValueError(f"label {k} of ({i},{j}) outside 1..{top}")
            if k in seen:
                raise ValueError(f"label {k} assigned twice")
            seen.add(k)
        return self

    @property
    def is_complete(self) -> bool:
        """True when every pair of K_n is labeled (then the map is onto 1..N)."""
        return len(self.entries) == self.order.size

    def pair_of(self, k: int) -> Optional[Pair]:
        for pair, label in self.entries.items():
            if label == k:
                return pair
        return None

    def __len__(self) -> int:
        return len(self.entries)


class SimpleGraph(BaseModel):
    """A simple graph on vertices 1..n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    edges: frozenset[Pair] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def _check_edges(self) -> SimpleGraph:
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"edge ({i},{j}) invalid for n={self.n}: need 1 <= i < j <= n")
        return self

    @property
    def size(self) -> int:
        """l = |E|."""
        return len(self.edges)

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    def incident(self, v: int) -> list[Pair]:
        """I(v), the edges incident to v, in lexicographic order."""
        return [e for e in self.sorted_edges() if v in e]


class OrientedGraph(BaseModel):
    """An orientation of a simple graph: arcs (u, v) meaning u -> v."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    arcs: frozenset[Pair] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def _check_arcs(self) -> OrientedGraph:
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc {u}->{v} has an endpoint outside 1..{self.n}")
            if (v, u) in self.arcs:
                raise ValueError(f"antiparallel arcs {u}->{v} and {v}->{u}")
        return self

    @property
    def size(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[Pair]:
        """Arcs ordered by their underlying pair, then by direction."""
        return sorted(self.arcs, key=lambda a: (min(a), max(a), a))

    def entering(self, v: int) -> list[Pair]:
        """N^-(v): arcs whose head is v."""
        return [a for a in self.sorted_arcs() if a[1] == v]

    def leaving(self, v: int) -> list[Pair]:
        """N^+(v): arcs whose tail is v."""
        return [a for a in self.sorted_arcs() if a[0] == v]


class ExplicitLabeling(BaseModel):
    """A user-supplied labeling of vertices, edges, or both.

    Edge keys are the graph's own keys: (i, j) with i < j for a simple
    graph, (u, v) for the arc u -> v of an oriented graph. Injectivity is
    not enforced here; the checkers report or reject non-bijective maps.
    """

    model_config = ConfigDict(frozen=True)

    kind: LabelKind = LabelKind.EDGE
    edge_labels: dict[Pair, int] = Field(default_factory=dict)
    vertex_labels: dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_positive(self) -> ExplicitLabeling:
        for key, label in list(self.edge_labels.items()) + list(self.vertex_labels.items()):
            if label < 1:
                raise ValueError(f"label {label} of {key} is not a positive integer")
        if self.kind == LabelKind.EDGE and self.vertex_labels:
            raise ValueError("edge-only labeling carries vertex labels")
        if self.kind == LabelKind.VERTEX and self.edge_labels:
            raise ValueError("vertex-only labeling carries edge labels")
        return self

    @classmethod
    def from_assignment(cls, assignment: LabelAssignment) -> ExplicitLabeling:
        return cls(kind=LabelKind.EDGE, edge_labels=dict(assignment.entries))


class VertexSums(BaseModel):
    """S^-, S^+, S and S° of one vertex under the canonical orientation."""

    model_config = ConfigDict(frozen=True)

    vertex: int = Field(ge=1)
    in_sum: int = Field(ge=0)
    out_sum: int = Field(ge=0)
    total_sum: int
    oriented_sum: int

    @model_validator(mode="after")
    def _check_identities(self) -> VertexSums:
        if self.total_sum != self.in_sum + self.out_sum:
            raise ValueError(f"v{self.vertex}: S != S- + S+")
        if self.oriented_sum != self.in_sum - self.out_sum:
            raise ValueError(f"v{self.vertex}: S° != S- - S+")
        return self


class SumsRow(VertexSums):
    """VertexSums plus the vertex-weight of the super total labeling."""

    vertex_weight: int

    @model_validator(mode="after")
    def _check_weight(self) -> SumsRow:
        if self.vertex_weight != self.vertex + self.total_sum:
            raise ValueError(f"v{self.vertex}: w_f != i + S")
        return self


class TotalWeights(BaseModel):
    """Vertex- and edge-weights of the super total labeling of K_n."""

    model_config = ConfigDict(frozen=True)

    order: int
    vertex_weights: dict[int, int]
    edge_weights: dict[Pair, int]


class SumsReport(BaseModel):
    """Every per-vertex closed form of K_n with its direct-summation check."""

    order: int
    rows: list[SumsRow]
    closed_vs_direct_ok: bool
    sums_distinct: bool
    conservation_ok: bool

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "flags": {
                "closed_vs_direct_ok": self.closed_vs_direct_ok,
                "sums_distinct": self.sums_distinct,
                "conservation_ok": self.conservation_ok,
            },
            "rows": [
                {
                    "vertex": r.vertex,
                    "in_sum": r.in_sum,
                    "out_sum": r.out_sum,
                    "total_sum": r.total_sum,
                    "oriented_sum": r.oriented_sum,
                    "vertex_weight": r.vertex_weight,
                }
                for r in self.rows
            ],
        }


class CheckResult(BaseModel):
    """Outcome of a pairwise-distinctness check.

    `values` lists the sums or weights in key order (vertices ascending,
    edges lexicographic). A failing check always carries the first
    colliding pair of keys in lexicographic order.
    """

    holds: bool
    witness: Optional[tuple[Key, Key]] = None
    witness_value: Optional[int] = None
    values: list[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_witness(self) -> CheckResult:
        if not self.holds and (self.witness is None or self.witness_value is None):
            raise ValueError("a failing check needs a witness")
        return self

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
            "witness_value": self.witness_value,
            "values": self.values,
        }


class TotalCheck(BaseModel):
    """Flags of a candidate total labeling, with every defect found."""

    is_total: bool
    is_super: bool
    is_super_edge: bool
    vertex_antimagic_total: bool
    edge_antimagic_total: bool
    totally_antimagic_total: bool
    super_edge_antimagic_total: bool
    vertex_check: Optional[CheckResult] = None
    edge_check: Optional[CheckResult] = None
    defects: list[str] = Field(default_factory=list)

    def flags(self) -> dict[str, bool]:
        return {
            "is_total": self.is_total,
            "is_super": self.is_super,
            "is_super_edge": self.is_super_edge,
            "vertex_antimagic_total": self.vertex_antimagic_total,
            "edge_antimagic_total": self.edge_antimagic_total,
            "totally_antimagic_total": self.totally_antimagic_total,
            "super_edge_antimagic_total": self.super_edge_antimagic_total,
        }

    def to_json(self) -> dict:
        return {
            "flags": self.flags(),
            "witnesses": {
                "vertex": self.vertex_check.to_json() if self.vertex_check else None,
                "edge": self.edge_check.to_json() if self.edge_check else None,
            },
            "defects": self.defects,
        }


class SearchOutcome(BaseModel):
    """Result of an exhaustive labeling (or orientation x labeling) search."""

    exists: bool
    count: Optional[int] = Field(default=None, ge=0)
    examined: int = Field(default=0, ge=0)
    example: Optional[ExplicitLabeling] = None
    orientation: Optional[OrientedGraph] = None
    orientations_total: Optional[int] = None
    orientations_antimagic: Optional[int] = None

    @model_validator(mode="after")
    def _check_example(self) -> SearchOutcome:
        if self.exists and self.example is None:
            raise ValueError("a successful search needs an example")
        return self

    @property
    def every_orientation_antimagic(self) -> Optional[bool]:
        if self.orientations_total is None or self.orientations_antimagic is None:
            return None
        return self.orientations_total == self.orientations_antimagic

    def to_json(self) -> dict:
        example = None
        if self.example is not None:
            example = [[u, v, k] for (u, v), k in sorted(self.example.edge_labels.items())]
        return {
            "flags": {"exists": self.exists},
            "count": self.count,
            "examined": self.examined,
            "orientations_total": self.orientations_total,
            "orientations_antimagic": self.orientations_antimagic,
            "witnesses": {"labeling": example},
        }


class CollisionWitness(BaseModel):
    """Two distinct edges of K_n whose super-total edge-weights coincide."""

    model_config = ConfigDict(frozen=True)

    first: Pair
    second: Pair
    weight: int

    @model_validator(mode="after")
    def _check_order(self) -> CollisionWitness:
        if not self.first < self.second:
            raise ValueError("collision pairs are stored with first < second")
        return self

    def __str__(self) -> str:
        (a, b), (c, d) = self.first, self.second
        return f"({a},{b})~({c},{d}) weight {self.weight}"


class ExceptionQuadruple(BaseModel):
    """Indices 1 <= i < i' < j' < j with 4(j - j') = (i' - i)(2n - i - i' + 1)."""

    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1)
    i_prime: int
    j_prime: int
    j: int

    @model_validator(mode="after")
    def _check_chain(self) -> ExceptionQuadruple:
        if not self.i < self.i_prime < self.j_prime < self.j:
            raise ValueError("exception quadruple must satisfy i < i' < j' < j")
        return self

    @property
    def collision_pair(self) -> tuple[Pair, Pair]:
        """The two edges (i, j) and (i', j') whose weights coincide."""
        return (self.i, self.j), (self.i_prime, self.j_prime)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.i_prime, self.j_prime, self.j)


class DistinctnessCheck(BaseModel):
    """Per-n distinctness verdict; holds=None means outside the theorem's scope."""

    holds: Optional[bool]
    witness: Optional[Pair] = None
    witness_value: Optional[int] = None
    strictly_increasing: Optional[bool] = None
    methods_agree: Optional[bool] = None
    values: list[int] = Field(default_factory=list)
    note: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
            "witness_value": self.witness_value,
            "strictly_increasing": self.strictly_increasing,
            "methods_agree": self.methods_agree,
            "note": self.note,
        }


class Certificate(BaseModel):
    """Per-n verdicts for the canonical labelings of K_n.

    A flag of None means the property is outside the theorem's scope at
    this n (theorems are stated for n >= 3).
    """

    order: int
    antimagic_ok: Optional[bool]
    vertex_total_ok: Optional[bool]
    edge_total_ok: Optional[bool]
    totally_total_ok: Optional[bool]
    oriented_ok: Optional[bool]
    collisions: list[CollisionWitness] = Field(default_factory=list)
    exceptions: list[ExceptionQuadruple] = Field(default_factory=list)
    sums_check: Optional[DistinctnessCheck] = None
    weights_check: Optional[DistinctnessCheck] = None
    oriented_check: Optional[DistinctnessCheck] = None

    @model_validator(mode="after")
    def _check_consistency(self) -> Certificate:
        if self.edge_total_ok is not None and self.edge_total_ok != (not self.collisions):
            raise ValueError("edge_total_ok must hold exactly when there are no collisions")
        if self.vertex_total_ok is not None and self.edge_total_ok is not None:
            if self.totally_total_ok != (self.vertex_total_ok and self.edge_total_ok):
                raise ValueError("totally_total_ok must be vertex_total_ok and edge_total_ok")
        return self

    def flags(self) -> dict[str, Optional[bool]]:
        return {
            "antimagic_ok": self.antimagic_ok,
            "vertex_total_ok": self.vertex_total_ok,
            "edge_total_ok": self.edge_total_ok,
            "totally_total_ok": self.totally_total_ok,
            "oriented_ok": self.oriented_ok,
        }

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "flags": self.flags(),
            "witnesses": {
                "collisions": [
                    {"first": list(c.first), "second": list(c.second), "weight": c.weight}
                    for c in self.collisions
                ],
                "exceptions": [list(q.as_tuple()) for q in self.exceptions],
                "vertex_sums": self.sums_check.to_json() if self.sums_check else None,
                "vertex_weights": self.weights_check.to_json() if self.weights_check else None,
                "oriented_sums": self.oriented_check.to_json() if self.oriented_check else None,
            },
        }


class ScanSummary(BaseModel):
    """Certificates for a contiguous range of n, in ascending order."""

    n_lo: int
    n_hi: int
    rows: list[Certificate]

    @property
    def edge_total_certified(self) -> list[int]:
        """Every n whose super total labeling is edge-antimagic total."""
        return [c.order for c in self.rows if c.edge_total_ok]

    def to_json(self) -> dict:
        return {
            "order": [self.n_lo, self.n_hi],
            "flags": {"edge_total_certified": self.edge_total_certified},
            "rows": [c.to_json() for c in self.rows],
        }
