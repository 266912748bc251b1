import numpy as np
import pytest
from hypothesis import given

from _strategies import all_tables, table_and_point, tables
from boolmeter.blocks import (MONOTONE, STANDARD, BudgetExceeded, family_from_row,
                              is_sensitive_block, minimal_blocks, minimal_pattern_matrix,
                              sensitivity_at)
from boolmeter.core import and_, constant, majority, or_, restrict, xor, zeros_of
from boolmeter.optim import int_pack


def _oracle(f, x, regime):
    allowed = ~x & (f.size - 1) if regime == MONOTONE else f.size - 1
    sens = [b for b in range(1, f.size) if b & allowed == b and f(x ^ b) != f(x)]
    return sorted((b for b in sens if not any(c != b and c & b == c for c in sens)),
                  key=lambda b: (bin(b).count("1"), b))


def test_examples():
    assert minimal_blocks(and_(2), 0, MONOTONE).blocks == (0b11,)
    assert minimal_blocks(or_(2), 0, MONOTONE).blocks == (0b01, 0b10)
    assert minimal_blocks(majority(3), 0, STANDARD).blocks == (0b011, 0b101, 0b110)
    assert minimal_blocks(constant(3, 1), 5).blocks == ()


def test_is_sensitive_block():
    assert is_sensitive_block(and_(2), 0, 0b11, MONOTONE)
    assert not is_sensitive_block(and_(2), 0, 0b01, MONOTONE)
    assert not is_sensitive_block(xor(2), 0, 0b11, STANDARD)
    with pytest.raises(ValueError):
        is_sensitive_block(and_(2), 0b01, 0b01, MONOTONE)
    with pytest.raises(ValueError):
        is_sensitive_block(and_(2), 0, 0b100)
    with pytest.raises(ValueError):
        is_sensitive_block(and_(2), 0, 1, "sideways")


def test_sensitivity_examples():
    assert sensitivity_at(and_(2), 3) == 2
    assert sensitivity_at(and_(2), 0) == 0
    for n in range(1, 9):
        assert sensitivity_at(or_(n), 0, MONOTONE) == n


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_against_brute_force_exhaustive(n):
    for f in all_tables(n):
        for x in range(f.size):
            for regime in (STANDARD, MONOTONE):
                assert list(minimal_blocks(f, x, regime).blocks) == _oracle(f, x, regime)


@given(table_and_point(4, 5))
def test_against_brute_force_sampled(fx):
    f, x = fx
    for regime in (STANDARD, MONOTONE):
        assert list(minimal_blocks(f, x, regime).blocks) == _oracle(f, x, regime)


@given(table_and_point(0, 5))
def test_family_invariants(fx):
    f, x = fx
    for regime in (STANDARD, MONOTONE):
        fam = minimal_blocks(f, x, regime).blocks
        assert all(is_sensitive_block(f, x, b, regime) for b in fam)
        assert not any(a != b and a & b == a for a in fam for b in fam)
        if regime == MONOTONE:
            assert all(b & x == 0 for b in fam)
        allowed = ~x & (f.size - 1) if regime == MONOTONE else f.size - 1
        for b in range(1, f.size):
            if b & allowed == b and f(x ^ b) != f(x):
                assert any(c & b == c for c in fam)


def _translate(mask, coords):
    return sum(1 << coords[j] for j in range(len(coords)) if (mask >> j) & 1)


@given(table_and_point(0, 4))
def test_monotone_is_restriction_at_origin(fx):
    f, x = fx
    coords = zeros_of(f.n, x)
    via_restriction = sorted(_translate(b, coords)
                             for b in minimal_blocks(restrict(f, x), 0, STANDARD).blocks)
    assert sorted(minimal_blocks(f, x, MONOTONE).blocks) == via_restriction


def test_sensitivity_counts_singletons():
    for f in all_tables(3):
        for x in range(8):
            for regime in (STANDARD, MONOTONE):
                fam = minimal_blocks(f, x, regime).blocks
                assert sensitivity_at(f, x, regime) == sum(bin(b).count("1") == 1 for b in fam)


def _greedy_maximal(fam, order):
    used, chosen = 0, []
    for j in order:
        if not fam[j] & used:
            used |= fam[j]
            chosen.append(fam[j])
    return used


def test_maximal_packing_union_is_certificate_for_increasing_functions():
    from boolmeter.core import is_monotone
    rng = np.random.default_rng(0)
    for f in all_tables(4):
        if f.is_constant() or not is_monotone(f, "increasing"):
            continue
        for x in np.flatnonzero(f.bits == 0):
            fam = minimal_blocks(f, int(x), MONOTONE).blocks
            for _ in range(3):
                union = _greedy_maximal(fam, rng.permutation(len(fam)))
                assert all(b & union for b in fam)


def test_budget():
    f = xor(4)
    with pytest.raises(BudgetExceeded):
        minimal_blocks(f, 0, STANDARD, budget=8)
    assert minimal_blocks(f, 0b0111, MONOTONE, budget=2).blocks == (0b1000,)


def test_out_of_range_point():
    with pytest.raises(IndexError):
        minimal_blocks(and_(2), 4)


@given(tables(0, 5))
def test_pattern_matrix_matches_pointwise(f):
    for regime in (STANDARD, MONOTONE):
        mat = minimal_pattern_matrix(f.bits[None, :], f.n, regime)[0]
        for x in range(f.size):
            assert family_from_row(mat[x]) == minimal_blocks(f, x, regime).blocks


def test_int_pack_consistent_with_pattern_rows():
    f = majority(3)
    assert int_pack(minimal_blocks(f, 0)).objective == 1
