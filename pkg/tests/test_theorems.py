from fractions import Fraction
import math

import pytest
from hypothesis import given

from _strategies import tables
from boolmeter.blocks import MONOTONE
from boolmeter.core import (TruthTable, and_, complement, compose, constant, majority,
                            odd_max_bit, or_, or_of_ands, xor)
from boolmeter.measures import measure, measure_at
from boolmeter.theorems import (CLAIMS, PreconditionError, exp_minus_two_upper, prefix_products,
                                run_claim, synthesize_omb, verify_composition_lower_bounds,
                                verify_corollary_lifting, verify_hsc_vs_mbs_ms,
                                verify_mbs_composition_upper, verify_mbs_iterate_growth,
                                verify_mcc_logspar_ratio, verify_omb_characterization,
                                verify_prefix_product, verify_shift_lifting,
                                verify_spar_composition, verify_spar_degree_bounds,
                                verify_symm_monotone_equality, verify_thm1_rounding,
                                verify_thm2_shift)

OMB12 = odd_max_bit([[1], [2]])


def test_symm_monotone_equality():
    v = verify_symm_monotone_equality(or_(4))
    assert v.holds and v.lhs == v.rhs == 4
    assert verify_symm_monotone_equality(majority(3)).holds
    with pytest.raises(PreconditionError):
        verify_symm_monotone_equality(OMB12)


def test_hsc():
    v = verify_hsc_vs_mbs_ms(constant(2, 0), 0)
    assert v.holds and v.lhs == 0 and v.rhs == 0
    v = verify_hsc_vs_mbs_ms(or_(2), 0)
    # negated OR is NAND; on its 1-inputs only 01 and 10 have a sensitive zero
    assert v.holds and (v.lhs, v.rhs) == (2, 2)
    assert v.witness["ms^(1-z)(negated)"] == 1


@given(tables(0, 3))
def test_hsc_property(f):
    assert verify_hsc_vs_mbs_ms(f, 0).holds and verify_hsc_vs_mbs_ms(f, 1).holds


def test_mbs_composition_upper():
    v = verify_mbs_composition_upper(or_(2), or_(2))
    assert v.holds and (v.lhs, v.rhs) == (4, 4)
    v = verify_mbs_composition_upper(constant(2, 1), or_(2))
    assert v.holds and v.lhs == 0


@given(tables(1, 2), tables(1, 3))
def test_mbs_composition_upper_property(f, g):
    assert verify_mbs_composition_upper(f, g).holds


def test_lower_bounds_examples():
    v = verify_composition_lower_bounds(xor(2), or_(2), 0)
    assert v.holds and measure(compose(xor(2), or_(2)), "mbs") >= 2
    assert v.witness["lem3.mbs"]["lhs"] >= 2
    v = verify_composition_lower_bounds(or_(2), xor(2), 0)
    assert v.witness["lem3"]["status"] == "skipped"
    v = verify_composition_lower_bounds(xor(2), xor(2), 0, ("lem1",))
    assert v.holds and not v.skipped and v.lhs >= 4 and v.rhs == 4
    v = verify_composition_lower_bounds(xor(2), xor(2), 1, ("lem1",))
    assert v.skipped and v.holds


@given(tables(1, 2), tables(1, 2))
def test_lower_bounds_property(f, g):
    for z in (0, 1):
        assert verify_composition_lower_bounds(f, g, z).holds


def test_iterate_growth():
    v = verify_mbs_iterate_growth(xor(2), 3)
    assert v.holds and v.witness["nondecreasing"]
    assert v.witness["mbs^0"] == sorted(v.witness["mbs^0"])
    assert v.witness["growth_bound_applies"]
    with pytest.raises(PreconditionError):
        verify_mbs_iterate_growth(or_(2), 2)


def test_thm1_rounding_xor():
    v = verify_thm1_rounding(xor(2), 1)
    assert v.holds
    checks = v.witness["checks"]
    assert all(checks.values())
    assert v.witness["case"] == "mbs>=2"
    assert len(v.witness["blocks"]) == sum(v.witness["w_rounded"])
    assert v.rhs == measure_at(compose(xor(2), xor(2)), int(v.witness["x_hat"], 16), "mbs") + 4


def test_thm1_rounding_integral_case():
    v = verify_thm1_rounding(xor(2), 1)
    if v.witness["r_l"] == 1 and all(w.denominator == 1 for w in v.witness["w_star"]):
        assert v.witness["w_rounded"] == [int(w) for w in v.witness["w_star"]]


def test_thm1_rounding_mbs_one_case():
    v = verify_thm1_rounding(OMB12, 1)
    assert v.holds and v.witness["case"] == "mbs=1"


def test_thm1_rounding_preconditions():
    with pytest.raises(PreconditionError):
        verify_thm1_rounding(and_(2), 1)
    with pytest.raises(IndexError):
        verify_thm1_rounding(xor(2), 1, x=16)


def test_thm1_monotone_outer_blocks_keep_construction():
    # the construction itself goes through with either outer family
    v = verify_thm1_rounding(xor(2), 1, outer_regime=MONOTONE)
    c = v.witness["checks"]
    assert all(c[k] for k in ("a_feasible", "b_disjoint", "b_sensitive", "c_count", "d_slack"))


def test_corollary_lifting():
    v = verify_corollary_lifting(or_(2), "C", 1)
    assert v.holds and v.witness["M(f o f)"] == 4 and v.witness["premise"]
    assert verify_corollary_lifting(constant(2, 0), "C", 1).holds
    v = verify_corollary_lifting(or_of_ands(4), "logspar", 1)
    assert v.holds and v.witness["premise"] is False
    assert v.witness["conclusion_heuristic"]


def test_spar_composition():
    v = verify_spar_composition(or_(2), or_(2))
    assert v.holds and (v.lhs, v.rhs) == (15, 4)
    v = verify_spar_composition(or_(2), and_(2))
    assert v.holds and v.rhs == 0
    v = verify_spar_composition(or_of_ands(4), or_(2))
    assert v.holds and v.lhs >= 16
    with pytest.raises(PreconditionError):
        verify_spar_composition(constant(2, 1), or_(2))
    with pytest.raises(PreconditionError):
        verify_spar_composition(or_(2), constant(2, 1))


def test_omb_synthesis():
    f = TruthTable(2, [0, 1, 0, 0])  # x1 - x1 x2
    assert synthesize_omb(f) == ([0b01, 0b10], False)
    assert synthesize_omb(constant(3, 0)) == ([0], True)
    assert synthesize_omb(constant(3, 1)) == ([0], False)
    assert synthesize_omb(complement(f)) == ([0b01, 0b10], True)
    assert synthesize_omb(xor(2)) is None
    v = verify_omb_characterization(f)
    assert v.holds and v.witness["round_trip"]
    v = verify_omb_characterization(xor(2))
    assert v.holds and not v.witness["synthesized"]


def test_shift_lifting():
    v = verify_shift_lifting(and_(2), ("s", "C"))
    assert v.holds and v.witness["y"] == "3" and v.lhs == 2
    f = or_(2)  # bs maximiser is 00, so the shift is the identity
    v = verify_shift_lifting(f, ("bs", "C"))
    assert v.holds and v.witness["y"] == "0"
    with pytest.raises(ValueError):
        verify_shift_lifting(f, ("ms", "C"))


@given(tables(0, 4))
def test_shift_lifting_property(f):
    assert verify_shift_lifting(f, ("bs", "C")).holds
    assert verify_thm2_shift(f).holds


def test_prefix_product():
    ps = prefix_products(64)
    assert ps[1] == Fraction(3, 8)
    assert ps[-1] > Fraction(98, 725)
    assert all(a > b for a, b in zip(ps, ps[1:]))
    v = verify_prefix_product()
    assert v.holds and v.lhs >= v.rhs
    assert float(exp_minus_two_upper()) >= math.exp(-2)
    assert float(exp_minus_two_upper()) - math.exp(-2) < 1e-15
    with pytest.raises(ValueError):
        exp_minus_two_upper(5)


def test_spar_degree_bounds():
    v = verify_spar_degree_bounds(xor(2))
    assert v.holds and v.witness["sparF"] == 1
    v = verify_spar_degree_bounds(or_(4))
    assert v.holds and (v.lhs, v.rhs) == (15, 8 ** 4)


def test_mcc_logspar_ratio():
    v = verify_mcc_logspar_ratio(xor(2), 2)
    assert v.holds and not v.skipped and all(r["ratio"] is not None for r in v.witness["rows"])
    v = verify_mcc_logspar_ratio(or_(2), 1)
    row = v.witness["rows"][0]
    assert row["MCC"] == row["mbs"] and row["ratio"] == pytest.approx(1 / math.log2(3))
    v = verify_mcc_logspar_ratio(constant(2, 1), 2)
    assert v.skipped and v.holds


def test_registry_covers_all_claims():
    expected = {"thm1-rounding", "cor1-lifting", "thm2-shift", "thm3-equality", "lem1", "lem2",
                "lem3", "lem4", "cor4-growth", "cor5-ratio", "thmB1-hsc", "thmB2-comp", "prop5",
                "appB1-omb", "appC-spar-deg", "sec31-spar-comp", "appE-lifting"}
    assert set(CLAIMS) == expected


@pytest.mark.parametrize("claim", sorted(CLAIMS))
def test_default_sweeps_hold(claim):
    verdicts = run_claim(claim)
    assert verdicts and all(v.holds for v in verdicts)


def test_run_claim_instances():
    (v,) = run_claim("thm1-rounding", {"f": xor(2), "l": 1})
    assert v.holds
    assert len(run_claim("lem4", {"f": xor(2), "g": or_(2)})) == 2
    with pytest.raises(ValueError):
        run_claim("lem4", {"f": xor(2)})
    with pytest.raises(KeyError):
        run_claim("nope")


def test_verdict_serialisation():
    d = verify_mcc_logspar_ratio(xor(2), 1).to_dict()
    assert d["claim_id"] == "cor5-ratio" and isinstance(d["lhs"], str)
