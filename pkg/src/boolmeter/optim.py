"""Exact packing / covering / hitting-set solvers over block families.

All LPs run on a fraction-free integer tableau: every entry is an integer and
the true tableau is ``T / D`` for the current pivot determinant ``D``.  Pivots
use Bland's smallest-index rule, so identical instances always follow the same
path.  The packing LP is solved by the primal simplex method from the slack
basis; the covering LP is solved independently by the dual simplex method.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from .blocks import BlockFamily, block_order


class InfeasibleError(RuntimeError):
    pass


@dataclass(frozen=True)
class PackingSolution:
    objective: Fraction
    weights: dict = field(default_factory=dict)
    integral: bool = False
    blocks: tuple = ()


@dataclass(frozen=True)
class HittingSolution:
    set: int
    size: int


def _as_blocks(family) -> tuple:
    blocks = family.blocks if isinstance(family, BlockFamily) else tuple(family)
    if any(b <= 0 for b in blocks):
        raise ValueError("blocks must be non-empty masks")
    return tuple(int(b) for b in blocks)


def _universe(blocks) -> list[int]:
    union = 0
    for b in blocks:
        union |= b
    return [i for i in range(union.bit_length()) if (union >> i) & 1]


def _pivot(T: np.ndarray, D: int, r: int, s: int) -> tuple[np.ndarray, int]:
    if T[r, s] < 0:
        T[r] = -T[r]
    p = T[r, s]
    new = (T * p - np.multiply.outer(T[:, s], T[r])) // D
    new[r] = T[r]
    return new, p


def _scale(values) -> tuple[list[int], int]:
    fr = [Fraction(v) for v in values]
    L = lcm(*(v.denominator for v in fr)) if fr else 1
    return [int(v * L) for v in fr], L


def _capacity_vector(universe, capacities):
    if capacities is None:
        return [Fraction(1)] * len(universe)
    caps = [Fraction(capacities[i]) for i in universe]
    if any(c < 0 for c in caps):
        raise ValueError("capacities must be non-negative")
    return caps


@lru_cache(maxsize=1 << 16)
def _lp_pack(blocks: tuple, caps: tuple | None):
    if not blocks:
        return Fraction(0), ()
    universe = _universe(blocks)
    cap = _capacity_vector(universe, None if caps is None else dict(caps))
    b, L = _scale(cap)
    k, u = len(blocks), len(universe)
    T = np.zeros((u + 1, k + u + 1), dtype=object)
    T[:] = 0
    for r, i in enumerate(universe, start=1):
        for j, blk in enumerate(blocks):
            if (blk >> i) & 1:
                T[r, j] = 1
        T[r, k + r - 1] = 1
        T[r, -1] = b[r - 1]
    T[0, :k] = -1
    basis = [None] + [k + r for r in range(u)]
    D = 1
    while True:
        neg = [j for j in range(k + u) if T[0, j] < 0]
        if not neg:
            break
        s = neg[0]
        r = None
        for i in range(1, u + 1):
            if T[i, s] > 0:
                if r is None:
                    r = i
                    continue
                lhs = T[i, -1] * T[r, s]
                rhs = T[r, -1] * T[i, s]
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r is None:  # pragma: no cover - packing LPs are bounded
            raise RuntimeError("unbounded packing LP")
        T, D = _pivot(T, D, r, s)
        basis[r] = s
    weights = []
    for r in range(1, u + 1):
        if basis[r] < k:
            weights.append((basis[r], Fraction(int(T[r, -1]), int(D) * L)))
    weights.sort()
    return Fraction(int(T[0, -1]), int(D) * L), tuple(weights)


@lru_cache(maxsize=1 << 16)
def _lp_cover(blocks: tuple, caps: tuple | None):
    if not blocks:
        return Fraction(0), ()
    universe = _universe(blocks)
    cost, L = _scale(_capacity_vector(universe, None if caps is None else dict(caps)))
    k, u = len(blocks), len(universe)
    T = np.zeros((k + 1, u + k + 1), dtype=object)
    T[:] = 0
    for r, blk in enumerate(blocks, start=1):
        for c, i in enumerate(universe):
            if (blk >> i) & 1:
                T[r, c] = -1
        T[r, u + r - 1] = 1
        T[r, -1] = -1
    T[0, :u] = cost
    basis = [None] + [u + r for r in range(k)]
    D = 1
    while True:
        bad = [i for i in range(1, k + 1) if T[i, -1] < 0]
        if not bad:
            break
        r = min(bad, key=lambda i: basis[i])
        s = None
        for j in range(u + k):
            if T[r, j] < 0:
                if s is None:
                    s = j
                    continue
                # minimise T[0,j] / -T[r,j]
                if T[0, j] * (-T[r, s]) < T[0, s] * (-T[r, j]):
                    s = j
        if s is None:
            raise InfeasibleError("covering LP is infeasible")
        T, D = _pivot(T, D, r, s)
        basis[r] = s
    values = []
    for r in range(1, k + 1):
        if basis[r] < u:
            values.append((universe[basis[r]], Fraction(int(T[r, -1]), int(D))))
    values.sort()
    return Fraction(-int(T[0, -1]), int(D) * L), tuple(values)


def _caps_key(capacities):
    if capacities is None:
        return None
    return tuple(sorted((int(i), Fraction(c)) for i, c in capacities.items()))


def lp_pack(family, capacities: dict | None = None) -> PackingSolution:
    """Maximum fractional packing: ``max sum w_B`` s.t. the load on each coordinate
    ``i`` is at most ``capacities[i]`` (default 1), ``w >= 0``."""
    blocks = _as_blocks(family)
    obj, weights = _lp_pack(blocks, _caps_key(capacities))
    return PackingSolution(obj, dict(weights), False, blocks)


def lp_cover(family, capacities: dict | None = None) -> PackingSolution:
    """Minimum fractional hitting set; ``weights`` maps coordinate -> value."""
    blocks = _as_blocks(family)
    obj, weights = _lp_cover(blocks, _caps_key(capacities))
    return PackingSolution(obj, dict(weights), False, blocks)


@lru_cache(maxsize=1 << 16)
def _int_pack(blocks: tuple):
    memo: dict[int, tuple[int, tuple]] = {}

    def best(forbidden: int):
        if forbidden in memo:
            return memo[forbidden]
        allowed = [b for b in blocks if not b & forbidden]
        if not allowed:
            memo[forbidden] = (0, ())
            return memo[forbidden]
        counts: dict[int, int] = {}
        for b in allowed:
            m = b
            while m:
                low = m & -m
                counts[low] = counts.get(low, 0) + 1
                m ^= low
        top = max(counts.values())
        c = min(bit for bit, cnt in counts.items() if cnt == top)
        result = best(forbidden | c)
        for b in allowed:
            if b & c:
                val, chosen = best(forbidden | b)
                if val + 1 > result[0]:
                    result = (val + 1, (b,) + chosen)
        memo[forbidden] = result
        return result

    val, chosen = best(0)
    return val, tuple(sorted(chosen, key=block_order))


def int_pack(family) -> PackingSolution:
    """Maximum number of pairwise disjoint blocks.

    Exact search over the set of already-used coordinates, branching on the
    coordinate that lies in the most remaining blocks.
    """
    blocks = _as_blocks(family)
    val, chosen = _int_pack(blocks)
    index = {b: j for j, b in enumerate(blocks)}
    return PackingSolution(Fraction(val), {index[b]: Fraction(1) for b in chosen}, True, blocks)


def _minimalize(blocks) -> tuple:
    kept: list[int] = []
    for b in sorted(set(blocks), key=block_order):
        if not any(k & b == k for k in kept):
            kept.append(b)
    return tuple(kept)


_INF = (1 << 62, 0)


@lru_cache(maxsize=1 << 18)
def _hit(blocks: tuple) -> tuple[int, int]:
    if not blocks:
        return (0, 0)
    if blocks[0] == 0:
        return _INF
    union = 0
    for b in blocks:
        union |= b
    h = 1 << (union.bit_length() - 1)
    without = _hit(_minimalize(b & ~h for b in blocks))
    size, mask = _hit(_minimalize(b for b in blocks if not b & h))
    with_h = (size + 1, mask | h) if size < _INF[0] else _INF
    return min(without, with_h)


def min_hitting_set(family) -> HittingSolution:
    """Minimum hitting set; among optimal sets the numerically smallest mask.

    Branches on the highest remaining coordinate (exclude first), which makes
    ``(size, mask)`` lexicographic minimisation compose across subproblems.
    """
    blocks = _as_blocks(family)
    size, mask = _hit(_minimalize(blocks))
    return HittingSolution(mask, size)
