from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from _strategies import all_tables, tables
from boolmeter.core import TruthTable, and_, constant, majority, or_, or_of_ands, shift_by, xor
from boolmeter.poly import (PLUS_MINUS, ZERO_ONE, deg, degree, fourier_transform,
                            mobius_transform, spar, spar_deg_batch, sparsity)


def _interpolate(f):
    """Inclusion-exclusion straight from the definition."""
    out = {}
    for s in range(f.size):
        sub = [t for t in range(f.size) if t & s == t]
        c = sum((-1) ** (bin(s).count("1") - bin(t).count("1")) * f(t) for t in sub)
        if c:
            out[s] = Fraction(c)
    return out


def _characters(f):
    out = {}
    for s in range(f.size):
        c = sum((-1) ** (f(x) + bin(s & x).count("1")) for x in range(f.size))
        if c:
            out[s] = Fraction(c, f.size)
    return out


def test_mobius_examples():
    p = mobius_transform(and_(2))
    assert p.basis == ZERO_ONE and p.coeffs == {3: 1}
    assert (sparsity(p), degree(p)) == (1, 2)
    assert mobius_transform(or_(2)).coeffs == {1: 1, 2: 1, 3: -1}
    m3 = mobius_transform(majority(3))
    assert m3.coeffs == {3: 1, 5: 1, 6: 1, 7: -2}
    assert (sparsity(m3), degree(m3)) == (4, 3)


def test_fourier_examples():
    p = fourier_transform(xor(2))
    assert p.basis == PLUS_MINUS and p.coeffs == {3: 1}
    assert fourier_transform(constant(2, 0)).coeffs == {0: 1}
    a = fourier_transform(and_(2))
    assert sorted(abs(c) for c in a.coeffs.values()) == [Fraction(1, 2)] * 4
    assert sum(c * c for c in a.coeffs.values()) == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_transforms_match_definitions(n):
    for f in all_tables(n):
        assert mobius_transform(f).coeffs == _interpolate(f)
        assert fourier_transform(f).coeffs == _characters(f)


@given(tables(0, 6))
def test_reconstruction(f):
    p, q = mobius_transform(f), fourier_transform(f)
    for x in range(f.size):
        assert p.evaluate(x) == f(x)
        assert q.evaluate(x) == 1 - 2 * f(x)


@given(tables(0, 6))
def test_integrality_and_parseval(f):
    p, q = mobius_transform(f), fourier_transform(f)
    assert all(c.denominator == 1 for c in p.coeffs.values())
    assert sum(c * c for c in q.coeffs.values()) == 1
    scale = 1 << degree(q)
    assert all((c * scale).denominator == 1 for c in q.coeffs.values())


@pytest.mark.parametrize("n", range(0, 9))
def test_or_sparsity(n):
    assert spar(or_(n)) == (1 << n) - 1


def test_spar_definition_details():
    assert (spar(constant(3, 1)), deg(constant(3, 1))) == (0, 0)
    assert (spar(constant(3, 0)), deg(constant(3, 0))) == (0, 0)
    assert (spar(or_of_ands(4)), deg(or_of_ands(4))) == (3, 4)
    assert sparsity(fourier_transform(constant(1, 1)), include_empty=True) == 1
    assert sparsity(fourier_transform(constant(1, 1))) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sparsity_degree_bounds_exhaustive(n):
    for f in all_tables(n):
        p, q = mobius_transform(f), fourier_transform(f)
        assert sparsity(p) <= 8 ** degree(p)
        assert sparsity(q, include_empty=True) <= 4 ** degree(q)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_shift_does_not_raise_degree(n):
    for f in all_tables(n):
        d = deg(f)
        for w in range(f.size):
            assert deg(shift_by(f, w)) <= d


@given(tables(1, 5))
def test_fourier_and_zero_one_degree_agree(f):
    assert degree(fourier_transform(f)) == deg(f)


def test_batch_matches_single():
    n = 4
    rng = np.random.default_rng(3)
    tabs = rng.integers(0, 2, size=(50, 16), dtype=np.uint8)
    sp, dg = spar_deg_batch(tabs, n)
    for row, s, d in zip(tabs, sp, dg):
        f = TruthTable(n, row)
        assert (spar(f), deg(f)) == (s, d)


def test_items_order():
    items = mobius_transform(majority(3)).items()
    assert [s for s, _ in items] == [3, 5, 6, 7]
