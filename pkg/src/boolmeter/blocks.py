"""Sensitive blocks and the antichain of minimal ones.

A block is a variable set encoded as a mask.  In the ``standard`` regime any
subset of ``[n]`` may be flipped; in the ``monotone`` regime only subsets of the
zero coordinates of the base point, which is the same as working with the
restriction ``f_x`` at the all-zero input.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TruthTable, subset_masks, zeros_of

STANDARD = "standard"
MONOTONE = "monotone"
REGIMES = (STANDARD, MONOTONE)

DEFAULT_BUDGET = 1 << 26

_budget = {"value": DEFAULT_BUDGET}


class BudgetExceeded(RuntimeError):
    """The enumeration would examine more candidate subsets than allowed."""


def block_budget() -> int:
    return _budget["value"]


def set_block_budget(value: int) -> None:
    if value < 1:
        raise ValueError("budget must be positive")
    _budget["value"] = int(value)


def _check_regime(regime: str) -> None:
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}")


def block_order(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class BlockFamily:
    base_function: TruthTable
    base_point: int
    regime: str
    blocks: tuple  # masks sorted by (size, mask)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def is_sensitive_block(f: TruthTable, x: int, block: int, regime: str = STANDARD) -> bool:
    _check_regime(regime)
    if block < 0 or block >> f.n:
        raise ValueError(f"block {block:#x} is not a subset of the {f.n} variables")
    if regime == MONOTONE and block & x:
        raise ValueError(f"monotone block {block:#x} touches a one-coordinate of {x:#x}")
    return bool(f.bits[x ^ block] != f.bits[x])


def _strict_subset_closure(sens: np.ndarray, k: int) -> np.ndarray:
    """``out[..., s]`` is True iff some proper subset of ``s`` is marked in ``sens``."""
    lead = sens.shape[:-1]
    up = sens.copy()
    for i in range(k):
        v = up.reshape(lead + (-1, 2, 1 << i))
        v[..., 1, :] |= v[..., 0, :]
    strict = np.zeros_like(sens)
    for i in range(k):
        vs = strict.reshape(lead + (-1, 2, 1 << i))
        vu = up.reshape(lead + (-1, 2, 1 << i))
        vs[..., 1, :] |= vu[..., 0, :]
    return strict


def minimal_blocks(f: TruthTable, x: int, regime: str = STANDARD,
                   budget: int | None = None) -> BlockFamily:
    """Inclusion-minimal sensitive blocks of ``f`` at ``x``.

    Every subset of the candidate coordinates is tested once and supersets of
    sensitive sets are sieved out with a subset-closure pass.
    """
    _check_regime(regime)
    x = int(x)
    if not 0 <= x < f.size:
        raise IndexError(f"input index {x} out of range for arity {f.n}")
    coords = zeros_of(f.n, x) if regime == MONOTONE else list(range(f.n))
    limit = block_budget() if budget is None else budget
    if (1 << len(coords)) > limit:
        raise BudgetExceeded(
            f"{1 << len(coords)} candidate blocks at input {x:#x} exceed the budget {limit}")
    masks = subset_masks(coords)
    sens = f.bits[x ^ masks] != f.bits[x]
    minimal = sens & ~_strict_subset_closure(sens, len(coords))
    found = sorted((int(m) for m in masks[minimal]), key=block_order)
    return BlockFamily(f, x, regime, tuple(found))


def sensitivity_at(f: TruthTable, x: int, regime: str = STANDARD) -> int:
    _check_regime(regime)
    x = int(x)
    count = 0
    for i in range(f.n):
        if regime == MONOTONE and (x >> i) & 1:
            continue
        count += int(f.bits[x ^ (1 << i)] != f.bits[x])
    return count


def minimal_pattern_matrix(tables: np.ndarray, n: int, regime: str) -> np.ndarray:
    """Minimal-block indicators for a stack of functions at every input at once.

    ``tables`` has shape ``(F, 2**n)``; the result has shape ``(F, 2**n, 2**n)``
    with ``out[f, x, B]`` True iff ``B`` is a minimal sensitive block of
    function ``f`` at ``x`` in the given regime.  Memory is ``F * 4**n`` bytes,
    so this is meant for small arities.
    """
    _check_regime(regime)
    size = 1 << n
    idx = np.arange(size)
    tables = np.asarray(tables, dtype=np.uint8)
    sens = tables[:, idx[:, None] ^ idx[None, :]] != tables[:, :, None]
    if regime == MONOTONE:
        sens &= (idx[:, None] & idx[None, :]) == 0
    return sens & ~_strict_subset_closure(sens, n)


def family_from_row(row: np.ndarray) -> tuple:
    """Sorted mask tuple from one row of :func:`minimal_pattern_matrix`."""
    return tuple(sorted((int(b) for b in np.flatnonzero(row)), key=block_order))
