"""Class enumeration, persistent measure scans and the empirical exponent table."""
from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from ._parallel import pmap
from .core import TruthTable, max_arity, popcount
from .measures import (CHAINS, MEASURES, MONO_PAIRS, VECTOR_MAX_ARITY, batch_point_values,
                       chain_violations, fmt, full_report)
from .poly import spar_deg_batch

CLASSES = ("all", "symmetric", "monotone", "non-monotone", "random")

# largest arity at which each class is enumerated exhaustively
CLASS_LIMITS = {"all": 4, "symmetric": 16, "monotone": 5, "non-monotone": 4}

COLUMNS = ("function_id", "n", "symmetric", "monotone",
           "s", "bs", "fbs", "C", "ms", "mbs", "fmbs", "MCC", "spar", "deg")
STORED = ("s", "bs", "fbs", "C", "ms", "mbs", "fmbs", "MCC")


class ScanError(ValueError):
    pass


# ---------------------------------------------------------------------------
# enumeration


def _all_tables(n: int) -> np.ndarray:
    size = 1 << n
    vals = np.arange(1 << size, dtype=np.int64)
    return ((vals[:, None] >> np.arange(size)) & 1).astype(np.uint8)


def _symmetric_tables(n: int) -> np.ndarray:
    profiles = _all_tables_bits(n + 1)
    return profiles[:, popcount(np.arange(1 << n))]


def _all_tables_bits(width: int) -> np.ndarray:
    vals = np.arange(1 << width, dtype=np.int64)
    return ((vals[:, None] >> np.arange(width)) & 1).astype(np.uint8)


def _increasing_tables(n: int) -> np.ndarray:
    # a table on n variables splits on x_n into halves (low, high) with low <= high
    tabs = np.array([[0], [1]], dtype=np.uint8)
    for _ in range(n):
        ok = np.all(tabs[:, None, :] <= tabs[None, :, :], axis=-1)
        lo, hi = np.nonzero(ok)
        tabs = np.concatenate([tabs[lo], tabs[hi]], axis=1)
    return _sorted_by_value(tabs)


def _sorted_by_value(tabs: np.ndarray) -> np.ndarray:
    # lexicographic from the most significant output bit = numeric order of the id
    order = np.lexsort(tabs.T)
    return tabs[order]


def monotone_flags(tables: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-table ``(increasing, decreasing)`` flags."""
    idx = np.arange(1 << n)
    t = tables.astype(np.int8)
    up = np.ones(len(t), dtype=bool)
    down = np.ones(len(t), dtype=bool)
    for i in range(n):
        low = idx[(idx >> i) & 1 == 0]
        diff = t[:, low | (1 << i)] - t[:, low]
        up &= ~np.any(diff < 0, axis=1)
        down &= ~np.any(diff > 0, axis=1)
    return up, down


def symmetric_flags(tables: np.ndarray, n: int) -> np.ndarray:
    w = popcount(np.arange(1 << n))
    out = np.ones(len(tables), dtype=bool)
    for k in range(n + 1):
        cols = tables[:, w == k]
        out &= np.all(cols == cols[:, :1], axis=1)
    return out


def _random_tables(n: int, count: int, seed: int) -> np.ndarray:
    size = 1 << n
    if size < 63 and count > (1 << size):
        raise ScanError(f"only {1 << size} distinct functions of arity {n}")
    rng = np.random.default_rng(seed)
    seen: set[bytes] = set()
    rows = []
    while len(rows) < count:
        batch = rng.integers(0, 2, size=(count - len(rows), size), dtype=np.uint8)
        for row in batch:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                rows.append(row)
    return np.array(rows, dtype=np.uint8).reshape(count, size)


def class_tables(n: int, cls: str, count: int | None = None, seed: int = 0) -> np.ndarray:
    """Truth tables of a class as an ``(F, 2**n)`` uint8 array, deterministic order."""
    if cls not in CLASSES:
        raise ScanError(f"unknown class {cls!r}; expected one of {CLASSES}")
    if n < 0 or n > max_arity():
        raise ScanError(f"arity {n} out of range")
    if cls in CLASS_LIMITS and n > CLASS_LIMITS[cls]:
        raise ScanError(f"class {cls!r} is only enumerated for n <= {CLASS_LIMITS[cls]}")
    if cls == "all":
        return _all_tables(n)
    if cls == "symmetric":
        return _symmetric_tables(n)
    if cls == "monotone":
        return _increasing_tables(n)
    if cls == "non-monotone":
        tabs = _all_tables(n)
        up, down = monotone_flags(tabs, n)
        return tabs[~(up | down)]
    return _random_tables(n, 100 if count is None else count, seed)


def enumerate_class(n: int, cls: str, count: int | None = None, seed: int = 0):
    """Yield the members of a class as :class:`TruthTable` objects.

    ``monotone`` means monotone increasing; ``non-monotone`` means neither
    increasing nor decreasing; ``random`` draws ``count`` distinct functions
    from a seeded generator.
    """
    for row in class_tables(n, cls, count, seed):
        yield TruthTable(n, row)


# ---------------------------------------------------------------------------
# records


def _ids(tables: np.ndarray, n: int) -> list[str]:
    return [TruthTable(n, row).to_text() for row in tables]


def _pointwise_violations(vals: dict):
    """Yield ``(a, b, mask)`` for every chain relation ``a <= b`` (or ``fbs = FC``)
    that fails somewhere; ``mask`` marks the failing (function, input) pairs."""
    pairs = [(a, b) for chain in CHAINS for a, b in zip(chain, chain[1:])] + list(MONO_PAIRS)
    for a, b in pairs:
        bad = (vals[a] > vals[b]).astype(bool)
        if bad.any():
            yield a, b, bad
    bad = (vals["fbs"] != vals["FC"]).astype(bool)
    if bad.any():
        yield "fbs", "FC", bad


def _chunk_records(job) -> tuple[list[dict], int, list[str]]:
    n, tables = job
    count = len(tables)
    if n <= VECTOR_MAX_ARITY:
        vals = batch_point_values(tables, n, MEASURES)
        overall = {m: [max(row) for row in vals[m]] for m in MEASURES}
        violations = []
        for a, b, bad in _pointwise_violations(vals):
            for fi, x in zip(*np.nonzero(bad)):
                violations.append(f"{TruthTable(n, tables[fi]).to_text()}@{x:x}:{a}>{b}")
    else:
        overall = {m: [] for m in MEASURES}
        violations = []
        for row in tables:
            rep = full_report(TruthTable(n, row))
            for m in MEASURES:
                overall[m].append(rep.values[m])
            bad = chain_violations(rep.values)
            if bad:
                violations.append(f"{rep.function_id}:{','.join(bad)}")
    sp, dg = spar_deg_batch(tables, n)
    up, down = monotone_flags(tables, n)
    sym = symmetric_flags(tables, n)
    recs = []
    for fi, fid in enumerate(_ids(tables, n)):
        rec = {"function_id": fid, "n": n, "symmetric": int(sym[fi]),
               "monotone": int(up[fi] or down[fi])}
        for m in STORED:
            rec[m] = overall[m][fi]
        rec["spar"] = int(sp[fi])
        rec["deg"] = int(dg[fi])
        recs.append(rec)
    return recs, count, violations


def compute_records(tables: np.ndarray, n: int, threads: int | None = None,
                    chunk: int = 2048) -> tuple[list[dict], list[str]]:
    """Measure records (values as Fractions) and chain violations, in input order."""
    jobs = [(n, tables[lo:lo + chunk]) for lo in range(0, len(tables), chunk)]
    if threads and threads > 1 and len(jobs) < threads and len(tables) > threads:
        step = -(-len(tables) // threads)
        jobs = [(n, tables[lo:lo + step]) for lo in range(0, len(tables), step)]
    records, violations = [], []
    for recs, _, bad in pmap(_chunk_records, jobs, threads, chunksize=1):
        records.extend(recs)
        violations.extend(bad)
    return records, violations


def _csv_row(rec: dict) -> list[str]:
    out = []
    for c in COLUMNS:
        v = rec[c]
        out.append(fmt(v) if c in STORED else str(v))
    return out


def _parse_record(row: dict) -> dict:
    rec = {"function_id": row["function_id"], "n": int(row["n"]),
           "symmetric": int(row["symmetric"]), "monotone": int(row["monotone"]),
           "spar": int(row["spar"]), "deg": int(row["deg"])}
    for m in STORED:
        rec[m] = Fraction(row[m])
    return rec


def read_store(path) -> list[dict]:
    path = Path(path)
    if not path.exists():
        raise ScanError(f"no store at {path}")
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != COLUMNS:
            raise ScanError(f"{path} does not have the expected header")
        return [_parse_record(r) for r in reader]


def sidecar_path(path) -> Path:
    return Path(str(path) + ".json")


def scan(n: int, cls: str, out, count: int | None = None, seed: int = 0,
         threads: int | None = None) -> dict:
    """Measure every member of a class and append the records to a CSV store.

    Functions already present in the store are skipped, existing rows are kept
    byte for byte and the file is replaced atomically.
    """
    out = Path(out)
    tables = class_tables(n, cls, count, seed)
    existing_text = ""
    known: set[str] = set()
    if out.exists() and out.stat().st_size:
        existing_text = out.read_text()
        known = {r["function_id"] for r in read_store(out)}
    ids = _ids(tables, n)
    todo = np.array([i for i, fid in enumerate(ids) if fid not in known], dtype=np.int64)
    records, violations = compute_records(tables[todo], n, threads) if len(todo) else ([], [])

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if not existing_text:
        writer.writerow(COLUMNS)
    for rec in records:
        writer.writerow(_csv_row(rec))
    tmp = out.with_name(out.name + ".tmp")
    tmp.write_text(existing_text + buf.getvalue())
    os.replace(tmp, out)

    total = len(known) + len(records)
    meta = {"class": cls, "n": n, "seed": seed, "count": len(tables),
            "records": total, "version": __version__}
    side = sidecar_path(out)
    stmp = side.with_name(side.name + ".tmp")
    stmp.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    os.replace(stmp, side)

    maxima = {m: fmt(max((r[m] for r in records), default=0)) for m in STORED}
    return {"class": cls, "n": n, "added": len(records), "skipped": len(tables) - len(records),
            "records": total, "maxima": maxima, "chain_violations": violations}


# ---------------------------------------------------------------------------
# exponent table

ROWS = ("ms", "mbs", "fmbs", "MCC")
COLS = ("ms", "mbs", "fmbs", "MCC", "logspar")

# entry b in row A, column B: A = O(B^(b + o(1))); None where open
KNOWN_BOUNDS = {
    ("ms", "mbs"): 1, ("ms", "fmbs"): 1, ("ms", "MCC"): 1, ("ms", "logspar"): 2,
    ("mbs", "fmbs"): 1, ("mbs", "MCC"): 1, ("mbs", "logspar"): 2,
    ("fmbs", "mbs"): 2, ("fmbs", "MCC"): 1, ("fmbs", "logspar"): 4,
    ("MCC", "logspar"): 5,
}


@dataclass(frozen=True)
class ExponentCell:
    row: str
    col: str
    exponent: float | None
    witness: str | None
    a: object = None
    b: object = None
    bound: float | None = None

    @property
    def within_bound(self) -> bool:
        if self.bound is None or self.exponent is None:
            return True
        return self.exponent <= self.bound + 1e-12


def _value(rec: dict, which: str) -> float:
    if which == "logspar":
        return math.log2(rec["spar"]) if rec["spar"] > 1 else 0.0
    return float(rec[which])


def exponent_table(records) -> dict:
    """``(A, B) -> ExponentCell`` with the largest ``log A / log B`` over ``B >= 2``.

    Ties keep the first record in store order.  ``records`` is a list of
    records or a path to a store.
    """
    if isinstance(records, (str, os.PathLike)):
        records = read_store(records)
    records = list(records)
    if not records:
        raise ScanError("empty store")
    table = {}
    for a in ROWS:
        for b in COLS:
            best, wit, av, bv = None, None, None, None
            if a == b:
                table[a, b] = ExponentCell(a, b, 1.0, None, bound=1)
                continue
            for rec in records:
                B = _value(rec, b)
                A = _value(rec, a)
                if B < 2 or A <= 0:
                    continue
                e = math.log(A) / math.log(B)
                if best is None or e > best + 1e-15:
                    best, wit, av, bv = e, rec["function_id"], rec.get(a), rec.get(b, B)
            if b == "logspar" and wit is not None:
                bv = _value(next(r for r in records if r["function_id"] == wit), b)
            table[a, b] = ExponentCell(a, b, best, wit, av, bv, KNOWN_BOUNDS.get((a, b)))
    return table


def format_table(table: dict) -> str:
    """Tab-separated rendering: one line per cell."""
    lines = ["row\tcol\texponent\tbound\twithin\twitness"]
    for a in ROWS:
        for b in COLS:
            c = table[a, b]
            e = "-" if c.exponent is None else f"{c.exponent:.6f}"
            bound = "?" if c.bound is None else str(c.bound)
            within = "yes" if c.within_bound else "NO"
            lines.append(f"{a}\t{b}\t{e}\t{bound}\t{within}\t{c.witness or '-'}")
    return "\n".join(lines)
