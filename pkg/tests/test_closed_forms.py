"""Tests for the closed-form sums, weights and difference factors."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.core.closed_forms import (
    _exact,
    build_super_total,
    direct_sums,
    edge_weight,
    in_sum,
    oriented_gap,
    oriented_sum,
    out_sum,
    sums_report,
    total_weights,
    vertex_sum,
    vertex_sum_gap,
    vertex_weight,
    vertex_weight_cubic,
    vertex_weight_gap,
)
from antimagic.core.errors import IntegralityError, OrderError, OrderLimitError, VertexIndexError
from antimagic.core.models import LabelKind, binom2


class TestSums:
    """Test S-, S+, S and S° against hand-computed and directly summed values."""

    def test_k3_rows(self):
        rows = [
            (r.in_sum, r.out_sum, r.total_sum, r.oriented_sum, r.vertex_weight)
            for r in sums_report(3).rows
        ]
        assert rows == [(0, 3, 3, -3, 4), (1, 3, 4, -2, 6), (5, 0, 5, 5, 8)]

    def test_k4_values(self):
        assert [vertex_sum(4, i) for i in range(1, 5)] == [6, 10, 12, 14]
        assert [oriented_sum(4, i) for i in range(1, 5)] == [-6, -8, 0, 14]

    def test_k2_values(self):
        assert [(in_sum(2, i), out_sum(2, i)) for i in (1, 2)] == [(0, 1), (1, 0)]
        assert [vertex_sum(2, i) for i in (1, 2)] == [1, 1]

    def test_closed_forms_match_direct_summation(self):
        for n in range(2, 201):
            direct = direct_sums(n)
            for i, d in enumerate(direct, start=1):
                assert in_sum(n, i) == d.in_sum
                assert out_sum(n, i) == d.out_sum
                assert vertex_sum(n, i) == d.total_sum
                assert oriented_sum(n, i) == d.oriented_sum

    def test_identities_at_large_n(self):
        n = 10**5
        for i in (1, 2, 3, n // 2, n - 1, n):
            assert vertex_sum(n, i) == in_sum(n, i) + out_sum(n, i)
            assert oriented_sum(n, i) == in_sum(n, i) - out_sum(n, i)

    def test_conservation(self):
        for n in range(2, 201):
            big_n = binom2(n)
            assert sum(vertex_sum(n, i) for i in range(1, n + 1)) == big_n * (big_n + 1)
            assert sum(oriented_sum(n, i) for i in range(1, n + 1)) == 0

    @pytest.mark.parametrize("i", [0, 5, -1])
    def test_vertex_out_of_range(self, i):
        with pytest.raises(VertexIndexError):
            vertex_sum(4, i)

    def test_k1_rejected(self):
        with pytest.raises(OrderError):
            vertex_sum(1, 1)

    def test_exact_division_guard(self):
        assert _exact(12, 6) == 2
        with pytest.raises(IntegralityError):
            _exact(7, 6)


class TestWeights:
    """Test vertex- and edge-weights of the super total labeling."""

    def test_vertex_weight_is_index_plus_sum(self):
        for n in range(2, 40):
            for i in range(1, n + 1):
                assert vertex_weight(n, i) == i + vertex_sum(n, i)
                assert vertex_weight_cubic(n, i) == vertex_weight(n, i)

    def test_k4_edge_weights(self):
        weights = total_weights(4).edge_weights
        assert weights == {(1, 2): 8, (1, 3): 10, (1, 4): 12, (2, 3): 13, (2, 4): 15, (3, 4): 17}

    def test_k5_colliding_edges(self):
        assert edge_weight(5, (1, 5)) == 15
        assert edge_weight(5, (2, 3)) == 15

    def test_edge_weight_matches_labels(self):
        labeling = build_super_total(6)
        for (i, j), k in labeling.edge_labels.items():
            assert edge_weight(6, (i, j)) == i + j + k

    def test_super_total_labels(self):
        labeling = build_super_total(3)
        assert labeling.kind == LabelKind.TOTAL
        assert labeling.vertex_labels == {1: 1, 2: 2, 3: 3}
        assert labeling.edge_labels == {(1, 2): 4, (1, 3): 5, (2, 3): 6}

    def test_weights_table_agrees_with_edge_weight(self):
        for n in range(2, 20):
            for pair, w in total_weights(n).edge_weights.items():
                assert edge_weight(n, pair) == w


class TestGapFactors:
    """Test the quadratic factors left after dividing a difference by j - i."""

    def test_factor_identities_small_n(self):
        for n in range(3, 30):
            for i, j in combinations(range(1, n + 1), 2):
                assert 3 * (vertex_sum(n, j) - vertex_sum(n, i)) == (j - i) * vertex_sum_gap(n, i, j)
                assert 3 * (vertex_weight(n, j) - vertex_weight(n, i)) == (
                    (j - i) * vertex_weight_gap(n, i, j)
                )
                assert 3 * (oriented_sum(n, j) - oriented_sum(n, i)) == (
                    -(j - i) * oriented_gap(n, i, j)
                )

    def test_k5_oriented_factor_vanishes(self):
        assert oriented_gap(5, 1, 3) == 0
        assert oriented_sum(5, 1) == oriented_sum(5, 3) == -10

    @settings(max_examples=200, derandomize=True)
    @given(st.integers(min_value=3, max_value=10**6), st.data())
    def test_vertex_sum_factor_property(self, n, data):
        i = data.draw(st.integers(min_value=1, max_value=n - 1))
        j = data.draw(st.integers(min_value=i + 1, max_value=n))
        assert 3 * (vertex_sum(n, j) - vertex_sum(n, i)) == (j - i) * vertex_sum_gap(n, i, j)
        assert vertex_sum_gap(n, i, j) > 0


class TestSumsReport:
    """Test the per-n report."""

    def test_flags(self):
        report = sums_report(6)
        assert report.closed_vs_direct_ok
        assert report.sums_distinct
        assert report.conservation_ok

    def test_k2_not_distinct(self):
        report = sums_report(2)
        assert report.closed_vs_direct_ok
        assert not report.sums_distinct

    def test_json_layout(self):
        payload = sums_report(3).to_json()
        assert list(payload) == ["order", "flags", "rows"]
        assert payload["rows"][2] == {
            "vertex": 3,
            "in_sum": 5,
            "out_sum": 0,
            "total_sum": 5,
            "oriented_sum": 5,
            "vertex_weight": 8,
        }

    def test_k1_rejected(self):
        with pytest.raises(OrderError):
            sums_report(1)

    def test_order_limit(self):
        with pytest.raises(OrderLimitError):
            sums_report(10, max_order=5)
        assert len(sums_report(5, max_order=5).rows) == 5
