"""Standard and monotone decision-tree measures of Boolean functions.

Every measure at an input is a function of the antichain of minimal sensitive
blocks there:

=========  ==========  =================================
measure    regime      value over the minimal blocks
=========  ==========  =================================
s / ms     std / mono  number of singleton blocks
bs / mbs   std / mono  maximum disjoint subfamily
fbs / fmbs std / mono  fractional packing LP
C / MCC    std / mono  minimum hitting set
FC         standard    fractional covering LP
=========  ==========  =================================

Values are exact :class:`fractions.Fraction` objects.  Solver results are
memoised per block family, which is what makes exhaustive sweeps cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import optim
from .blocks import (MONOTONE, STANDARD, family_from_row, minimal_blocks,
                     minimal_pattern_matrix)
from .core import TruthTable
from .poly import deg as poly_deg
from .poly import spar as poly_spar

MEASURES = ("s", "bs", "fbs", "C", "FC", "ms", "mbs", "fmbs", "MCC")

_SPEC = {
    "s": (STANDARD, "sens"),
    "bs": (STANDARD, "pack"),
    "fbs": (STANDARD, "lp"),
    "C": (STANDARD, "hit"),
    "FC": (STANDARD, "cover"),
    "ms": (MONOTONE, "sens"),
    "mbs": (MONOTONE, "pack"),
    "fmbs": (MONOTONE, "lp"),
    "MCC": (MONOTONE, "hit"),
}

# vectorised all-inputs block enumeration uses 4**n bytes per function
VECTOR_MAX_ARITY = 10

ZERO = Fraction(0)


def _check(which: str) -> tuple[str, str]:
    try:
        return _SPEC[which]
    except KeyError:
        raise ValueError(f"unknown measure {which!r}; expected one of {MEASURES}") from None


def regime_of(which: str) -> str:
    return _check(which)[0]


@lru_cache(maxsize=1 << 18)
def family_value(blocks: tuple, kind: str) -> Fraction:
    if kind == "sens":
        return Fraction(sum(1 for b in blocks if b.bit_count() == 1))
    if kind == "pack":
        return optim.int_pack(blocks).objective
    if kind == "lp":
        return optim.lp_pack(blocks).objective
    if kind == "hit":
        return Fraction(optim.min_hitting_set(blocks).size)
    if kind == "cover":
        return optim.lp_cover(blocks).objective
    raise ValueError(kind)


@lru_cache(maxsize=128)
def point_families(f: TruthTable, regime: str) -> tuple[tuple, np.ndarray]:
    """Distinct minimal-block families of ``f`` and, per input, the index of its family."""
    if f.n <= VECTOR_MAX_ARITY:
        minimal = minimal_pattern_matrix(f.bits[None, :], f.n, regime)[0]
        packed = np.packbits(minimal, axis=1)
        _, first, inverse = np.unique(packed, axis=0, return_index=True, return_inverse=True)
        fams = tuple(family_from_row(minimal[i]) for i in first)
        return fams, inverse.reshape(-1)
    seen: dict[tuple, int] = {}
    inverse = np.empty(f.size, dtype=np.int64)
    for x in range(f.size):
        fam = minimal_blocks(f, x, regime).blocks
        inverse[x] = seen.setdefault(fam, len(seen))
    return tuple(seen), inverse


@lru_cache(maxsize=512)
def point_values(f: TruthTable, which: str) -> np.ndarray:
    """Object array with ``which`` at every input of ``f``."""
    regime, kind = _check(which)
    fams, inverse = point_families(f, regime)
    vals = np.empty(len(fams), dtype=object)
    vals[:] = [family_value(fam, kind) for fam in fams]
    return vals[inverse]


def measure_at(f: TruthTable, x: int, which: str) -> Fraction:
    regime, kind = _check(which)
    return family_value(minimal_blocks(f, x, regime).blocks, kind)


def _best(values: np.ndarray, inputs: np.ndarray) -> tuple[Fraction, int | None]:
    if inputs.size == 0:
        return ZERO, None
    sub = values[inputs]
    top = max(sub)
    return top, int(inputs[list(sub).index(top)])


def argmax(f: TruthTable, which: str, z: int | None = None) -> tuple[Fraction, int | None]:
    """Maximum over all inputs (or over ``f^{-1}(z)``) and the smallest maximiser."""
    vals = point_values(f, which)
    inputs = np.arange(f.size) if z is None else np.flatnonzero(f.bits == z)
    return _best(vals, inputs)


def measure(f: TruthTable, which: str) -> Fraction:
    return argmax(f, which)[0]


def measure_z(f: TruthTable, which: str, z: int) -> Fraction:
    if z not in (0, 1):
        raise ValueError("z must be 0 or 1")
    return argmax(f, which, z)[0]


def fmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _hexlist(masks) -> str:
    return " ".join(f"{m:x}" for m in masks)


@dataclass
class MeasureReport:
    function_id: str
    n: int
    values: dict
    per_value: dict
    argmax: dict
    spar: int
    deg: int
    witnesses: dict = field(default_factory=dict)
    per_input: dict | None = None

    def to_flat(self) -> dict:
        out: dict = {"function_id": self.function_id, "n": self.n}
        for m in MEASURES:
            out[m] = fmt(self.values[m])
            out[f"{m}^0"] = fmt(self.per_value[0][m])
            out[f"{m}^1"] = fmt(self.per_value[1][m])
            out[f"{m}.argmax"] = self.argmax[m]
        out["spar"] = self.spar
        out["deg"] = self.deg
        for key in sorted(self.witnesses):
            out[f"witness.{key}"] = self.witnesses[key]
        if self.per_input is not None:
            for m in MEASURES:
                out[f"{m}.per_input"] = [fmt(v) for v in self.per_input[m]]
        return out


def _witness(f: TruthTable, which: str, x: int | None):
    if x is None:
        return None
    regime, kind = _check(which)
    fam = minimal_blocks(f, x, regime).blocks
    if kind == "hit":
        return f"{optim.min_hitting_set(fam).set:x}"
    if kind == "pack":
        return _hexlist(optim.int_pack(fam).blocks[j] for j in sorted(optim.int_pack(fam).weights))
    return _hexlist(fam)


def full_report(f: TruthTable, per_input: bool = False) -> MeasureReport:
    values, per_value, arg, wit = {}, {0: {}, 1: {}}, {}, {}
    for m in MEASURES:
        values[m], arg[m] = argmax(f, m)
        per_value[0][m] = measure_z(f, m, 0)
        per_value[1][m] = measure_z(f, m, 1)
        w = _witness(f, m, arg[m])
        if w is not None:
            wit[m] = w
    pin = {m: list(point_values(f, m)) for m in MEASURES} if per_input else None
    return MeasureReport(f.to_text(), f.n, values, per_value, arg,
                         poly_spar(f), poly_deg(f), wit, pin)


CHAINS = (("s", "bs", "fbs", "C"), ("ms", "mbs", "fmbs", "MCC"))
MONO_PAIRS = (("ms", "s"), ("mbs", "bs"), ("fmbs", "fbs"), ("MCC", "C"))


def chain_violations(values: dict) -> list[str]:
    """Violated relations among a ``measure -> value`` mapping (empty when consistent)."""
    bad = []
    for chain in CHAINS:
        for a, b in zip(chain, chain[1:]):
            if values[a] > values[b]:
                bad.append(f"{a}>{b}")
    for a, b in MONO_PAIRS:
        if values[a] > values[b]:
            bad.append(f"{a}>{b}")
    if "FC" in values and values["fbs"] != values["FC"]:
        bad.append("fbs!=FC")
    return bad


def batch_point_values(tables: np.ndarray, n: int, which=MEASURES,
                       chunk_bytes: int = 1 << 26) -> dict:
    """Per-input measure values for a stack of equal-arity truth tables.

    Returns ``which -> object array of shape (F, 2**n)``.
    """
    tables = np.asarray(tables, dtype=np.uint8)
    count, size = tables.shape
    per_chunk = max(1, chunk_bytes // (size * size))
    out = {}
    regimes = sorted({_check(w)[0] for w in which})
    for regime in regimes:
        keys = []
        rows = []
        for lo in range(0, count, per_chunk):
            minimal = minimal_pattern_matrix(tables[lo:lo + per_chunk], n, regime)
            flat = minimal.reshape(-1, size)
            packed = np.packbits(flat, axis=1)
            uniq, first, inv = np.unique(packed, axis=0, return_index=True, return_inverse=True)
            keys.append((uniq, inv.reshape(-1)))
            rows.append(flat[first])
        # merge per-chunk uniques into one family list
        fam_index: dict[tuple, int] = {}
        fams: list[tuple] = []
        inverses = []
        for (uniq, inv), firsts in zip(keys, rows):
            local = np.empty(len(uniq), dtype=np.int64)
            for j, row in enumerate(firsts):
                fam = family_from_row(row)
                if fam not in fam_index:
                    fam_index[fam] = len(fams)
                    fams.append(fam)
                local[j] = fam_index[fam]
            inverses.append(local[inv])
        inverse = np.concatenate(inverses).reshape(count, size)
        for w in which:
            r, kind = _check(w)
            if r != regime:
                continue
            vals = np.empty(len(fams), dtype=object)
            vals[:] = [family_value(fam, kind) for fam in fams]
            out[w] = vals[inverse]
    return out
