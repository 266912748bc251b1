"""Multilinear polynomial representations of Boolean functions.

Two bases are supported:

* ``zero-one``: ``f(x) = sum_S a_S prod_{i in S} x_i`` over ``x in {0,1}^n``
  (Moebius transform of the truth table; integer coefficients).
* ``plus-minus``: the Fourier expansion of ``(-1)^f`` in characters
  ``chi_S(x) = (-1)^{sum_{i in S} x_i}`` (coefficients are dyadic rationals).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import TruthTable, popcount

ZERO_ONE = "zero-one"
PLUS_MINUS = "plus-minus"


@dataclass(frozen=True)
class PolyRep:
    basis: str
    arity: int
    coeffs: dict = field(default_factory=dict)  # mask -> Fraction, nonzero only

    def evaluate(self, x: int) -> Fraction:
        if self.basis == ZERO_ONE:
            return sum((c for s, c in self.coeffs.items() if s & x == s), Fraction(0))
        return sum(
            (c if (s & x).bit_count() % 2 == 0 else -c for s, c in self.coeffs.items()),
            Fraction(0),
        )

    def items(self):
        """Coefficients sorted by ``(|S|, mask)``."""
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))


def mobius_array(bits: np.ndarray, n: int) -> np.ndarray:
    """Dense 0/1-basis coefficients; works on a trailing axis of length ``2**n``."""
    a = np.array(bits, dtype=np.int64, copy=True)
    lead = a.shape[:-1]
    for i in range(n):
        v = a.reshape(lead + (-1, 2, 1 << i))
        v[..., 1, :] -= v[..., 0, :]
    return a


def walsh_array(bits: np.ndarray, n: int) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform of ``(-1)^f`` on the trailing axis."""
    a = 1 - 2 * np.asarray(bits, dtype=np.int64)
    lead = a.shape[:-1]
    for i in range(n):
        v = a.reshape(lead + (-1, 2, 1 << i))
        lo = v[..., 0, :].copy()
        hi = v[..., 1, :]
        v[..., 0, :] = lo + hi
        v[..., 1, :] = lo - hi
    return a


def mobius_transform(f: TruthTable) -> PolyRep:
    dense = mobius_array(f.bits, f.n)
    coeffs = {int(s): Fraction(int(dense[s])) for s in np.flatnonzero(dense)}
    return PolyRep(ZERO_ONE, f.n, coeffs)


def fourier_transform(f: TruthTable) -> PolyRep:
    dense = walsh_array(f.bits, f.n)
    size = f.size
    coeffs = {int(s): Fraction(int(dense[s]), size) for s in np.flatnonzero(dense)}
    return PolyRep(PLUS_MINUS, f.n, coeffs)


def sparsity(p: PolyRep, include_empty: bool = False) -> int:
    """Number of nonzero coefficients, excluding the constant term by default."""
    return sum(1 for s in p.coeffs if s or include_empty)


def degree(p: PolyRep) -> int:
    return max((s.bit_count() for s in p.coeffs), default=0)


def spar(f: TruthTable) -> int:
    return int(np.count_nonzero(mobius_array(f.bits, f.n)[1:]))


def deg(f: TruthTable) -> int:
    dense = mobius_array(f.bits, f.n)
    nz = np.flatnonzero(dense)
    return int(popcount(nz).max()) if nz.size else 0


def spar_deg_batch(tables: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Sparsity and degree for a stack of truth tables of equal arity."""
    dense = mobius_array(tables, n)
    nz = dense != 0
    sp = nz[..., 1:].sum(axis=-1)
    w = popcount(np.arange(1 << n))
    dg = np.where(nz, w, 0).max(axis=-1)
    return sp, dg
