import json

import numpy as np
import pytest

from boolmeter.core import TruthTable, is_monotone, is_symmetric
from boolmeter.measures import MEASURES, measure
from boolmeter.scan import (COLUMNS, KNOWN_BOUNDS, ScanError, class_tables, enumerate_class,
                            exponent_table, format_table, read_store, scan, sidecar_path)


def test_class_sizes():
    assert len(list(enumerate_class(2, "all"))) == 16
    assert len(list(enumerate_class(3, "symmetric"))) == 16
    assert len(list(enumerate_class(4, "monotone"))) == 168
    assert len(list(enumerate_class(2, "monotone"))) == 6
    assert len(class_tables(5, "monotone")) == 7581
    assert len(class_tables(2, "non-monotone")) == 16 - 10
    assert len(class_tables(10, "symmetric")) == 2 ** 11


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_class_membership_brute_force(n):
    everything = list(enumerate_class(n, "all"))
    assert len(set(everything)) == 2 ** 2 ** n
    expect = {
        "symmetric": {f for f in everything if is_symmetric(f)},
        "monotone": {f for f in everything if is_monotone(f, "increasing")},
        "non-monotone": {f for f in everything if not is_monotone(f)},
    }
    for cls, members in expect.items():
        got = list(enumerate_class(n, cls))
        assert len(got) == len(set(got)) and set(got) == members


def test_random_class_is_reproducible_and_distinct():
    a = class_tables(3, "random", count=40, seed=9)
    b = class_tables(3, "random", count=40, seed=9)
    assert np.array_equal(a, b)
    assert len({row.tobytes() for row in a}) == 40
    assert not np.array_equal(a, class_tables(3, "random", count=40, seed=10))
    with pytest.raises(ScanError):
        class_tables(1, "random", count=5)


def test_infeasible_classes():
    with pytest.raises(ScanError):
        class_tables(5, "all")
    with pytest.raises(ScanError):
        class_tables(6, "monotone")
    with pytest.raises(ScanError):
        class_tables(2, "odd")


def test_scan_all_n3(tmp_path):
    out = tmp_path / "s.csv"
    summary = scan(3, "all", out)
    assert summary["records"] == 256 and summary["chain_violations"] == []
    recs = read_store(out)
    assert len(recs) == 256
    assert out.read_text().splitlines()[0] == ",".join(COLUMNS)
    for rec in recs[:40]:
        f = TruthTable.from_text(rec["function_id"])
        for m in ("s", "fbs", "mbs", "MCC"):
            assert rec[m] == measure(f, m)
    meta = json.loads(sidecar_path(out).read_text())
    assert meta == {"class": "all", "count": 256, "n": 3, "records": 256, "seed": 0,
                    "version": meta["version"]}


def test_scan_is_restartable(tmp_path):
    out = tmp_path / "s.csv"
    scan(2, "all", out)
    first = out.read_text()
    again = scan(2, "all", out)
    assert again["added"] == 0 and out.read_text() == first
    scan(3, "symmetric", out)
    text = out.read_text()
    assert text.startswith(first)
    ids = [r["function_id"] for r in read_store(out)]
    assert len(ids) == len(set(ids)) == 16 + 16


def test_scan_partial_store_is_completed(tmp_path):
    out = tmp_path / "s.csv"
    scan(2, "all", out)
    lines = out.read_text().splitlines(keepends=True)
    out.write_text("".join(lines[:5]))
    summary = scan(2, "all", out)
    assert summary["added"] == 12 and summary["records"] == 16
    assert sorted(out.read_text().splitlines()) == sorted("".join(lines).splitlines())


def test_symmetric_scan_shows_equal_monotone_measures(tmp_path):
    out = tmp_path / "sym.csv"
    scan(8, "symmetric", out)
    recs = read_store(out)
    assert len(recs) == 512
    assert all(r["ms"] == r["mbs"] == r["fmbs"] == r["MCC"] for r in recs)
    table = exponent_table(recs)
    assert table["ms", "mbs"].exponent == pytest.approx(1.0)


def test_exponent_table(tmp_path):
    out = tmp_path / "s.csv"
    scan(3, "all", out)
    table = exponent_table(out)
    assert table["mbs", "mbs"].exponent == 1
    assert table["fmbs", "mbs"].exponent <= 2
    assert all(c.within_bound for c in table.values())
    for (a, b), cell in table.items():
        if cell.witness is not None:
            f = TruthTable.from_text(cell.witness)
            bv = measure(f, b) if b != "logspar" else None
            if bv is not None:
                assert bv >= 2
    assert set(KNOWN_BOUNDS) <= set(table)
    assert "fmbs\tmbs" in format_table(table)
    with pytest.raises(ScanError):
        exponent_table([])


def test_exponent_cell_recomputed_from_records(tmp_path):
    out = tmp_path / "s.csv"
    scan(3, "all", out)
    recs = read_store(out)
    cell = exponent_table(recs)["MCC", "mbs"]
    import math
    best = max(math.log(r["MCC"]) / math.log(r["mbs"]) for r in recs if r["mbs"] >= 2)
    assert cell.exponent == pytest.approx(best)


def test_read_store_rejects_bad_header(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("a,b\n1,2\n")
    with pytest.raises(ScanError):
        read_store(p)
    with pytest.raises(ScanError):
        read_store(tmp_path / "missing.csv")


def test_measures_constant_covers_stored_columns():
    assert set(COLUMNS) - {"function_id", "n", "symmetric", "monotone", "spar", "deg"} \
        <= set(MEASURES)
