"""Tests for per-n certification and range scans."""

import pytest

from antimagic.core.certifier import (
    certify,
    certify_oriented_sums,
    certify_vertex_sums,
    certify_vertex_weights,
    edge_weight_collisions,
    scan_range,
    theorem5_exceptions,
)
from antimagic.core.closed_forms import build_super_total, in_sum
from antimagic.core.errors import InvalidLimitError, OrderError, OrderLimitError, ScanLimitError
from antimagic.core.graphs import canonical_orientation, complete_graph
from antimagic.core.labeling import label_all
from antimagic.core.oracle import check_antimagic, check_oriented_antimagic, check_total

SAMPLED = list(range(201, 500, 19)) + [500]


class TestCertify:
    """Test single-order certificates."""

    @pytest.mark.parametrize("n", [3, 4])
    def test_every_flag_holds(self, n):
        cert = certify(n)
        assert all(cert.flags().values())
        assert cert.collisions == []
        assert cert.exceptions == []

    def test_k5(self):
        cert = certify(5)
        assert cert.flags() == {
            "antimagic_ok": True,
            "vertex_total_ok": True,
            "edge_total_ok": False,
            "totally_total_ok": False,
            "oriented_ok": False,
        }
        assert [str(c) for c in cert.collisions] == ["(1,5)~(2,3) weight 15"]
        assert [q.as_tuple() for q in cert.exceptions] == [(1, 2, 3, 5)]

    def test_k6_collision(self):
        cert = certify(6)
        assert [(c.first, c.second, c.weight) for c in cert.collisions] == [((2, 6), (3, 4), 23)]
        assert [q.as_tuple() for q in cert.exceptions] == [(2, 3, 4, 6)]

    def test_k2_out_of_scope(self):
        cert = certify(2)
        assert cert.antimagic_ok is False
        assert cert.vertex_total_ok is None
        assert cert.edge_total_ok is None
        assert cert.totally_total_ok is None
        assert cert.oriented_ok is None
        assert cert.sums_check.witness == (1, 2)

    def test_k1_rejected(self):
        with pytest.raises(OrderError):
            certify(1)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_flags_match_definition_checks(self, n):
        cert = certify(n)
        graph, labeling = complete_graph(n), label_all(n)
        total = check_total(graph, build_super_total(n))
        assert cert.antimagic_ok == check_antimagic(graph, labeling).holds
        assert cert.oriented_ok == check_oriented_antimagic(canonical_orientation(graph), labeling).holds
        assert cert.vertex_total_ok == total.vertex_antimagic_total
        assert cert.edge_total_ok == total.edge_antimagic_total
        assert cert.totally_total_ok == total.totally_antimagic_total

    def test_order_limit(self):
        with pytest.raises(OrderLimitError) as exc_info:
            certify(2001)
        assert "--max-order 2001" in str(exc_info.value)
        with pytest.raises(OrderLimitError):
            certify(10, max_order=5)
        assert certify(10, max_order=10).order == 10

    def test_json_layout(self):
        payload = certify(5).to_json()
        assert list(payload) == ["order", "flags", "witnesses"]
        assert payload["witnesses"]["collisions"] == [{"first": [1, 5], "second": [2, 3], "weight": 15}]
        assert payload["witnesses"]["exceptions"] == [[1, 2, 3, 5]]


class TestDistinctness:
    """Test the distinctness certificates across many orders."""

    def test_vertex_sums_and_weights_increase(self):
        for n in range(3, 201):
            sums = certify_vertex_sums(n)
            weights = certify_vertex_weights(n)
            assert sums.holds and sums.strictly_increasing and sums.methods_agree
            assert weights.holds and weights.strictly_increasing and weights.methods_agree

    @pytest.mark.parametrize("n", SAMPLED)
    def test_sampled_large_orders(self, n):
        assert certify_vertex_sums(n).holds
        assert certify_vertex_weights(n).strictly_increasing

    def test_in_sums_increase(self):
        for n in range(3, 201):
            values = [in_sum(n, i) for i in range(1, n + 1)]
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_oriented_methods_agree(self):
        for n in range(3, 201):
            assert certify_oriented_sums(n).methods_agree

    @pytest.mark.parametrize("n", SAMPLED)
    def test_oriented_methods_agree_large(self, n):
        assert certify_oriented_sums(n).methods_agree

    def test_oriented_failures_below_sixty(self):
        failing = [n for n in range(3, 60) if not certify_oriented_sums(n).holds]
        assert failing == [5, 20, 26, 29, 34, 51, 54]

    def test_oriented_small_orders(self):
        assert certify_oriented_sums(3).values == [-3, -2, 5]
        assert certify_oriented_sums(4).values == [-6, -8, 0, 14]
        assert certify_oriented_sums(3).holds
        assert certify_oriented_sums(4).holds

    def test_oriented_k5_witness(self):
        check = certify_oriented_sums(5)
        assert check.holds is False
        assert check.witness == (1, 3)
        assert check.witness_value == -10

    def test_k2_scope(self):
        assert certify_vertex_sums(2).holds is False
        assert certify_vertex_weights(2).holds is None
        assert certify_oriented_sums(2).holds is None


class TestEdgeWeightCollisions:
    """Test the two collision detectors."""

    def test_detectors_agree(self):
        for n in range(3, 101):
            from_exceptions = sorted(q.collision_pair for q in theorem5_exceptions(n))
            from_weights = sorted((c.first, c.second) for c in edge_weight_collisions(n))
            assert from_exceptions == from_weights

    def test_no_collisions_for_k4(self):
        assert edge_weight_collisions(4) == []
        assert theorem5_exceptions(4) == []

    def test_collisions_from_five_on(self):
        for n in range(5, 60):
            assert edge_weight_collisions(n)


class TestScanRange:
    """Test range scans."""

    def test_edge_total_certified_only_for_3_and_4(self):
        summary = scan_range(3, 60)
        assert [c.order for c in summary.rows] == list(range(3, 61))
        assert summary.edge_total_certified == [3, 4]

    def test_workers_match_sequential(self):
        sequential = scan_range(2, 12)
        parallel = scan_range(2, 12, workers=2)
        assert parallel.to_json() == sequential.to_json()

    @pytest.mark.parametrize("lo,hi", [(1, 5), (6, 5), (0, 0)])
    def test_bad_ranges(self, lo, hi):
        with pytest.raises(OrderError):
            scan_range(lo, hi)

    def test_span_limit(self):
        with pytest.raises(ScanLimitError):
            scan_range(3, 20, max_span=5)

    def test_order_limit(self):
        with pytest.raises(OrderLimitError):
            scan_range(3, 10, max_order=5)
        assert len(scan_range(3, 5, max_order=5).rows) == 3

    @pytest.mark.parametrize(
        "overrides", [{"max_span": 0}, {"workers": 0}, {"max_order": 1}]
    )
    def test_invalid_limits(self, overrides):
        with pytest.raises(InvalidLimitError):
            scan_range(3, 5, **overrides)
