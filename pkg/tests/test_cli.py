"""Tests for the command-line interface."""

import json

import pytest

from antimagic.cli import main
from antimagic.core.closed_forms import build_super_total
from antimagic.core.edgelist import serialize
from antimagic.core.graphs import complete_graph

K3_LABELED = "3 3\n1 2 1\n1 3 2\n2 3 3\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _fails(capsys, argv, code=1):
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == code
    return capsys.readouterr().err


class TestLabelCommand:
    """Test `antimagic label`."""

    def test_k3(self, capsys):
        main(["label", "3"])
        assert capsys.readouterr().out == K3_LABELED

    def test_inverse(self, capsys):
        main(["label", "5", "--inverse", "7"])
        assert capsys.readouterr().out == "2 5\n"

    def test_inverse_out_of_range(self, capsys):
        err = _fails(capsys, ["label", "5", "--inverse", "11"])
        assert err.startswith("Error: label 11 outside 1..10")

    def test_subgraph(self, tmp_path, capsys):
        path = _write(tmp_path, "g.txt", "4 2\n1 3\n2 4\n")
        main(["label", "--graph", path])
        assert capsys.readouterr().out == "4 2\n1 3 2\n2 4 5\n"

    def test_needs_order_or_graph(self, capsys):
        _fails(capsys, ["label"], code=2)

    def test_k1_rejected(self, capsys):
        err = _fails(capsys, ["label", "--inverse", "1", "1"])
        assert "Error:" in err


class TestSumsCommand:
    """Test `antimagic sums`."""

    def test_json(self, capsys):
        main(["sums", "3", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["flags"]["closed_vs_direct_ok"] is True
        assert [r["total_sum"] for r in payload["rows"]] == [3, 4, 5]

    def test_table(self, capsys):
        main(["sums", "4"])
        out = capsys.readouterr().out
        assert "S°" in out
        assert "closed forms match direct summation: true" in out
        assert "Warning" not in out

    def test_k2_warns(self, capsys):
        main(["sums", "2"])
        assert "Warning: vertex sums are not pairwise distinct" in capsys.readouterr().out


class TestCertifyCommand:
    """Test `antimagic certify` and `antimagic scan`."""

    def test_json(self, capsys):
        main(["certify", "5", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["flags"]["edge_total_ok"] is False
        assert payload["witnesses"]["collisions"] == [{"first": [1, 5], "second": [2, 3], "weight": 15}]

    def test_table(self, capsys):
        main(["certify", "5"])
        out = capsys.readouterr().out
        assert "(1,5)~(2,3) weight 15" in out
        assert "oriented sums: v1,v3 both -10" in out
        assert "(1, 2, 3, 5)" in out

    def test_k2_not_applicable(self, capsys):
        main(["certify", "2"])
        assert "n/a" in capsys.readouterr().out

    def test_scan(self, capsys):
        main(["scan", "3", "8"])
        assert "edge-antimagic total certified for n in: 3, 4" in capsys.readouterr().out

    def test_scan_json(self, capsys):
        main(["scan", "3", "5", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == [3, 5]
        assert [row["order"] for row in payload["rows"]] == [3, 4, 5]

    def test_scan_bad_range(self, capsys):
        err = _fails(capsys, ["scan", "1", "4"])
        assert err.startswith("Error:")

    def test_scan_span_limit(self, capsys):
        _fails(capsys, ["scan", "3", "30", "--max-span", "5"])

    def test_scan_span_must_be_positive(self, capsys):
        err = _fails(capsys, ["scan", "3", "5", "--max-span", "0"])
        assert err.startswith("Error: scan_span=0")

    def test_workers_must_be_positive(self, capsys):
        err = _fails(capsys, ["scan", "3", "5", "--workers", "0"])
        assert err.startswith("Error: workers=0")

    def test_order_limit(self, capsys):
        err = _fails(capsys, ["certify", "3000"])
        assert "--max-order 3000" in err

    def test_scan_order_limit(self, capsys):
        err = _fails(capsys, ["scan", "3", "10000"])
        assert "--max-order 10000" in err

    def test_max_order_raises_the_limit(self, capsys):
        _fails(capsys, ["certify", "8", "--max-order", "6"])
        main(["certify", "8", "--max-order", "8", "--format", "json"])
        assert json.loads(capsys.readouterr().out)["order"] == 8


class TestVerifyCommand:
    """Test `antimagic verify`."""

    def test_antimagic(self, tmp_path, capsys):
        main(["verify", _write(tmp_path, "k3.txt", K3_LABELED)])
        assert capsys.readouterr().out == "antimagic: sums 3 4 5\n"

    def test_not_antimagic(self, tmp_path, capsys):
        main(["verify", _write(tmp_path, "k2.txt", "2 1\n1 2 1\n")])
        assert capsys.readouterr().out == "NOT antimagic: v1,v2 both 1\n"

    def test_directed(self, tmp_path, capsys):
        main(["verify", "--directed", _write(tmp_path, "k3.txt", K3_LABELED)])
        assert capsys.readouterr().out == "oriented-antimagic: sums -3 -2 5\n"

    def test_directed_header_gets_oriented_check(self, tmp_path, capsys):
        main(["verify", _write(tmp_path, "k3.txt", "directed " + K3_LABELED)])
        assert capsys.readouterr().out == "oriented-antimagic: sums -3 -2 5\n"

    def test_total(self, tmp_path, capsys):
        text = serialize(complete_graph(5), build_super_total(5))
        main(["verify", "--total", _write(tmp_path, "k5.txt", text)])
        out = capsys.readouterr().out
        assert "is-super-edge: true" in out
        assert "edge-antimagic-total: false (collision at 15" in out

    def test_total_json(self, tmp_path, capsys):
        text = serialize(complete_graph(3), build_super_total(3))
        main(["verify", "--total", "--format", "json", _write(tmp_path, "k3.txt", text)])
        payload = json.loads(capsys.readouterr().out)
        assert all(payload["flags"].values())

    def test_total_needs_vertex_lines(self, tmp_path, capsys):
        err = _fails(capsys, ["verify", "--total", _write(tmp_path, "k3.txt", K3_LABELED)])
        assert "vertex labels" in err

    def test_unlabeled_file(self, tmp_path, capsys):
        err = _fails(capsys, ["verify", _write(tmp_path, "g.txt", "3 1\n1 2\n")])
        assert "no labels" in err

    def test_malformed_file(self, tmp_path, capsys):
        err = _fails(capsys, ["verify", _write(tmp_path, "bad.txt", "3 2\n1 2 1\n2 3 1\n")])
        assert "line 3" in err

    def test_missing_file(self, tmp_path, capsys):
        err = _fails(capsys, ["verify", str(tmp_path / "absent.txt")])
        assert err.startswith("Error:")

    def test_undecodable_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"\xff\xfe3 1\n")
        err = _fails(capsys, ["verify", str(path)])
        assert err.startswith("Error: line 1: bad.txt is not valid UTF-8")


class TestSearchCommand:
    """Test `antimagic search`."""

    def test_k3(self, tmp_path, capsys):
        main(["search", _write(tmp_path, "k3.txt", "3 3\n1 2\n1 3\n2 3\n")])
        out = capsys.readouterr().out
        assert "exists: yes" in out
        assert "count: 6 of 6 examined" in out
        assert out.endswith(K3_LABELED)

    def test_k2(self, tmp_path, capsys):
        main(["search", _write(tmp_path, "k2.txt", "2 1\n1 2\n")])
        assert "exists: no (not antimagic)" in capsys.readouterr().out

    def test_orientations(self, tmp_path, capsys):
        main(["search", "--orientations", _write(tmp_path, "k2.txt", "2 1\n1 2\n")])
        out = capsys.readouterr().out
        assert "orientations admitting an antimagic labeling: 2 of 2" in out
        assert out.endswith("directed 2 1\n1 2 1\n")

    def test_cap(self, tmp_path, capsys):
        text = serialize(complete_graph(5))
        err = _fails(capsys, ["search", "--cap", "9", _write(tmp_path, "k5.txt", text)])
        assert "--cap 10" in err

    def test_json(self, tmp_path, capsys):
        main(["search", "--format", "json", _write(tmp_path, "k3.txt", "3 3\n1 2\n1 3\n2 3\n")])
        payload = json.loads(capsys.readouterr().out)
        assert payload["flags"]["exists"] is True
        assert payload["witnesses"]["labeling"] == [[1, 2, 1], [1, 3, 2], [2, 3, 3]]
