"""antimagic-kn: canonical antimagic labelings of complete graphs, with certificates."""

__version__ = "0.1.0"

from antimagic.core.certifier import certify, scan_range
from antimagic.core.closed_forms import (
    edge_weight,
    oriented_sum,
    sums_report,
    vertex_sum,
    vertex_weight,
)
from antimagic.core.edgelist import parse_edge_list, parse_file, serialize
from antimagic.core.errors import LabelingError
from antimagic.core.labeling import label_all, label_index, label_inverse, label_subgraph
from antimagic.core.models import (
    Certificate,
    ExplicitLabeling,
    LabelAssignment,
    OrientedGraph,
    SimpleGraph,
)
from antimagic.core.oracle import (
    check_antimagic,
    check_oriented_antimagic,
    check_total,
    exhaustive_antimagic,
    exhaustive_orientation_antimagic,
)

__all__ = [
    "Certificate",
    "ExplicitLabeling",
    "LabelAssignment",
    "LabelingError",
    "OrientedGraph",
    "SimpleGraph",
    "certify",
    "check_antimagic",
    "check_oriented_antimagic",
    "check_total",
    "edge_weight",
    "exhaustive_antimagic",
    "exhaustive_orientation_antimagic",
    "label_all",
    "label_index",
    "label_inverse",
    "label_subgraph",
    "oriented_sum",
    "parse_edge_list",
    "parse_file",
    "scan_range",
    "serialize",
    "sums_report",
    "vertex_sum",
    "vertex_weight",
]
