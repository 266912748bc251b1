"""Executable checks of the structural claims about these measures.

Each ``verify_*`` function evaluates one claim on a concrete instance and
returns a :class:`TheoremVerdict` carrying both sides of the inequality and a
witness.  :data:`CLAIMS` maps the public claim ids to instance runners and to
the default desk-scale sweep used when no instance is given.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import optim
from .blocks import MONOTONE, STANDARD, minimal_blocks
from .core import (TruthTable, complement, compose, is_monotone, iterate,
                   negate_inputs, popcount, restrict, shift_by, zeros_of)
from .measures import argmax, fmt, measure, measure_at, measure_z
from .poly import (degree, fourier_transform, mobius_transform, sparsity)


class PreconditionError(ValueError):
    """The instance does not satisfy the claim's hypotheses."""


def _render(v):
    if v is None:
        return None
    if isinstance(v, bool):
        return v
    if isinstance(v, (Fraction, int, np.integer)):
        return fmt(v)
    if isinstance(v, float):
        return "inf" if math.isinf(v) else f"{v:.12g}"
    if isinstance(v, dict):
        return {str(k): _render(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return v


@dataclass
class TheoremVerdict:
    claim_id: str
    instance: str
    holds: bool
    lhs: object = None
    rhs: object = None
    witness: dict = field(default_factory=dict)
    skipped: bool = False

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "instance": self.instance,
            "holds": self.holds,
            "skipped": self.skipped,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "witness": _render(self.witness),
        }

    def line(self) -> str:
        """One tab-separated human-readable line; long rationals shown as decimals."""
        status = "SKIP" if self.skipped else ("HOLDS" if self.holds else "VIOLATED")
        return f"{self.claim_id}\t{self.instance}\t{status}\t{_short(self.lhs)}\t{_short(self.rhs)}"


def _short(v):
    r = _render(v)
    if isinstance(r, str) and len(r) > 32 and isinstance(v, Fraction):
        return f"~{float(v):.15g}"
    return "-" if r is None else r


def non_monotone(f: TruthTable) -> bool:
    return not is_monotone(f, "either")


def _hexes(masks) -> list[str]:
    return [f"{m:x}" for m in masks]


# ---------------------------------------------------------------------------
# symmetric / monotone equality


def verify_symm_monotone_equality(f: TruthTable) -> TheoremVerdict:
    from .core import is_symmetric
    if not (is_symmetric(f) or is_monotone(f, "either")):
        raise PreconditionError("f is neither symmetric nor monotone")
    vals = {m: measure(f, m) for m in ("ms", "mbs", "fmbs", "MCC")}
    holds = len(set(vals.values())) == 1
    return TheoremVerdict("thm3-equality", f"f={f.to_text()}", holds,
                          vals["ms"], vals["MCC"], {"values": vals})


# ---------------------------------------------------------------------------
# hitting-set complexity vs monotone block sensitivity


def verify_hsc_vs_mbs_ms(f: TruthTable, z: int) -> TheoremVerdict:
    ft = negate_inputs(f)
    lhs = measure_z(f, "MCC", z)
    mbs_z = measure_z(f, "mbs", z)
    ms_t = measure_z(ft, "ms", 1 - z)
    return TheoremVerdict("thmB1-hsc", f"f={f.to_text()} z={z}", lhs <= mbs_z * ms_t,
                          lhs, mbs_z * ms_t, {"mbs^z(f)": mbs_z, "ms^(1-z)(negated)": ms_t})


def verify_mbs_composition_upper(f: TruthTable, g: TruthTable) -> TheoremVerdict:
    h = compose(f, g)
    lhs = measure(h, "mbs")
    fb, mg = measure(f, "fbs"), measure(g, "mbs")
    return TheoremVerdict("thmB2-comp", f"f={f.to_text()} g={g.to_text()}", lhs <= fb * mg,
                          lhs, fb * mg, {"fbs(f)": fb, "mbs(g)": mg})


# ---------------------------------------------------------------------------
# lower bounds for composed functions

LEMMAS = ("lem1", "lem2", "lem3", "lem4")


def _sub(lhs, rhs, reason=None) -> dict:
    if reason is not None:
        return {"status": "skipped", "reason": reason}
    return {"status": "holds" if lhs >= rhs else "violated", "lhs": lhs, "rhs": rhs}


def verify_composition_lower_bounds(f: TruthTable, g: TruthTable, z: int,
                                    claims=LEMMAS) -> TheoremVerdict:
    """Lower bounds on monotone measures of ``f o g``; each sub-claim checked
    only where its hypothesis holds, otherwise recorded as skipped."""
    h = compose(f, g)
    n, m = f.n, g.n
    parts: dict[str, dict] = {}
    if "lem1" in claims:
        zf = 0 if z == 0 else f.size - 1
        zg = 0 if z == 0 else g.size - 1
        if n == 0 or m == 0 or f(zf) != z or g(zg) != z:
            parts["lem1"] = _sub(None, None, f"requires f(z^n) = g(z^m) = {z}")
        else:
            zh = 0 if z == 0 else h.size - 1
            parts["lem1"] = _sub(measure_at(h, zh, "fbs"),
                                 measure_at(f, zf, "fbs") * measure_at(g, zg, "fbs"))
    if "lem2" in claims:
        parts["lem2"] = _sub(measure_z(h, "fmbs", 0),
                             measure_z(f, "fmbs", 0) * measure_z(g, "fmbs", 0))
    if "lem3" in claims:
        if non_monotone(f):
            parts["lem3.mbs"] = _sub(measure_z(h, "mbs", z), measure(g, "mbs"))
            parts["lem3.fmbs"] = _sub(measure_z(h, "fmbs", z), measure(g, "fmbs"))
        else:
            parts["lem3"] = _sub(None, None, "requires f non-monotone")
    if "lem4" in claims:
        m0, m1 = measure_z(g, "mbs", 0), measure_z(g, "mbs", 1)
        rhs = max(measure_z(f, "mbs", z) * m0, measure_z(f, "bs", z) * min(m0, m1))
        parts["lem4"] = _sub(measure_z(h, "mbs", z), rhs)
    live = [p for p in parts.values() if p["status"] != "skipped"]
    holds = all(p["status"] == "holds" for p in live)
    cid = claims[0] if len(claims) == 1 else "lem1-4"
    lhs = rhs = None
    if len(live) == 1:
        lhs, rhs = live[0]["lhs"], live[0]["rhs"]
    return TheoremVerdict(cid, f"f={f.to_text()} g={g.to_text()} z={z}", holds, lhs, rhs,
                          parts, skipped=not live)


# ---------------------------------------------------------------------------
# growth of mbs under iteration


def verify_mbs_iterate_growth(f: TruthTable, l_max: int) -> TheoremVerdict:
    if not non_monotone(f):
        raise PreconditionError("f must be non-monotone")
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    seq = {0: [], 1: []}
    for l in range(1, l_max + 1):
        fl = iterate(f, l)
        for z in (0, 1):
            seq[z].append(measure_z(fl, "mbs", z))
    nondecreasing = all(a <= b for z in (0, 1) for a, b in zip(seq[z], seq[z][1:]))
    growth_applies = measure(f, "mbs") >= 2
    growth_ok = True
    floor_bound = [1 << (l // 2) for l in range(1, l_max + 1)]
    if growth_applies:
        growth_ok = all(seq[z][l - 1] >= floor_bound[l - 1]
                        for z in (0, 1) for l in range(2, l_max + 1))
    last = min(seq[0][-1], seq[1][-1])
    return TheoremVerdict(
        "cor4-growth", f"f={f.to_text()} l_max={l_max}", nondecreasing and growth_ok,
        last, floor_bound[-1] if growth_applies else None,
        {"mbs^0": seq[0], "mbs^1": seq[1], "nondecreasing": nondecreasing,
         "growth_bound_applies": growth_applies, "growth_bound_ok": growth_ok})


# ---------------------------------------------------------------------------
# the rounding construction behind the fmbs / mbs ratio bound


def verify_thm1_rounding(f: TruthTable, l: int, x: int | None = None,
                         outer_regime: str = STANDARD) -> TheoremVerdict:
    """Round an optimal capacity-LP solution into disjoint monotone blocks of ``f^(l+1)``.

    ``x`` defaults to the smallest input maximising ``fmbs(f^(l+1), .)``.  The
    outer family is the minimal blocks of ``f`` at the image ``y`` in
    ``outer_regime``.
    """
    if not non_monotone(f):
        raise PreconditionError("f must be non-monotone")
    if l < 1:
        raise ValueError("l must be at least 1")
    n = f.n
    fl = iterate(f, l)
    fl1 = compose(f, fl)
    m = fl.n
    window = (1 << m) - 1
    if x is None:
        x = argmax(fl1, "fmbs")[1]
    if not 0 <= x < fl1.size:
        raise IndexError(f"input {x:#x} out of range for arity {fl1.n}")
    xs = [(x >> (i * m)) & window for i in range(n)]
    ys = [fl(xi) for xi in xs]
    y = sum(b << i for i, b in enumerate(ys))
    family = minimal_blocks(f, y, outer_regime).blocks
    caps = {i: measure_at(fl, xs[i], "fmbs") for i in range(n)}
    lp = optim.lp_pack(family, caps) if family else optim.PackingSolution(Fraction(0))
    w_star = [lp.weights.get(j, Fraction(0)) for j in range(len(family))]

    ratios = []
    for z in (0, 1):
        fz = measure_z(fl, "fmbs", z)
        if fz > 0:
            ratios.append(measure_z(fl, "mbs", z) / fz)
    r_l = min(ratios) if ratios else Fraction(1)
    w_round = [math.floor(w * r_l) for w in w_star]

    xh = [argmax(fl, "mbs", yi)[1] for yi in ys]
    mbs_h = [measure_at(fl, xi, "mbs") for xi in xh]
    mbs_fl = measure(fl, "mbs")

    loads = [sum(w for w, b in zip(w_round, family) if (b >> i) & 1) for i in range(n)]
    feasible = (all(loads[i] <= mbs_h[i] for i in range(n))
                and all(w <= mbs_fl for w in w_round))

    packs = [optim.int_pack(minimal_blocks(fl, xi, MONOTONE)).weights for xi in xh]
    inner = [[minimal_blocks(fl, xi, MONOTONE).blocks[j] for j in sorted(p)]
             for xi, p in zip(xh, packs)]
    x_hat = sum(xi << (i * m) for i, xi in enumerate(xh))
    pointer = [0] * n
    assembled = []
    enough = True
    for b, w in zip(family, w_round):
        for _ in range(w):
            blk = 0
            for i in range(n):
                if (b >> i) & 1:
                    if pointer[i] >= len(inner[i]):
                        enough = False
                        break
                    blk |= inner[i][pointer[i]] << (i * m)
                    pointer[i] += 1
            if not enough:
                break
            assembled.append(blk)
        if not enough:
            break
    feasible = feasible and enough

    used = 0
    disjoint = monotone_ok = sensitive = True
    for blk in assembled:
        disjoint &= not (used & blk)
        used |= blk
        monotone_ok &= blk != 0 and not (blk & x_hat)
        sensitive &= bool(fl1.bits[x_hat ^ blk] != fl1.bits[x_hat])
    count_ok = len(assembled) == sum(w_round)

    mbs_hat = measure_at(fl1, x_hat, "mbs")
    lhs = sum(w_star, Fraction(0)) * r_l
    mid = sum(w_round) + len(family)
    rhs = mbs_hat + (1 << n)
    slack_ok = lhs <= mid <= rhs
    lp_bound = measure_at(fl1, x, "fmbs") <= sum(w_star, Fraction(0))

    checks = {"a_feasible": feasible, "b_disjoint": disjoint, "b_monotone": monotone_ok,
              "b_sensitive": sensitive, "c_count": count_ok, "d_slack": slack_ok,
              "e_lp_upper_bound": lp_bound}
    witness = {
        "case": "mbs=1" if measure(f, "mbs") == 1 else "mbs>=2",
        "x": f"{x:x}", "y": f"{y:x}", "outer_blocks": _hexes(family),
        "capacities": [caps[i] for i in range(n)], "w_star": w_star, "r_l": r_l,
        "w_rounded": w_round, "x_hat": f"{x_hat:x}", "blocks": _hexes(assembled),
        "mbs(f^(l+1),x_hat)": mbs_hat, "checks": checks,
    }
    return TheoremVerdict("thm1-rounding", f"f={f.to_text()} l={l} x={x:x}",
                          all(checks.values()), lhs, rhs, witness)


# ---------------------------------------------------------------------------
# lifting through a compositional measure


EXTRA_MEASURES = ("spar", "deg", "logspar")


def scalar_measure(f: TruthTable, which: str):
    """Measure ids accepted where one number per function is needed."""
    from .poly import deg, spar
    if which == "spar":
        return spar(f)
    if which == "deg":
        return deg(f)
    if which == "logspar":
        s = spar(f)
        return math.log2(s) if s > 1 else 0.0
    return measure(f, which)


def _exact(v) -> bool:
    return isinstance(v, (int, Fraction))


def _power(base, e):
    e = Fraction(e)
    if _exact(base) and e.denominator == 1 and e >= 0:
        return Fraction(base) ** int(e)
    return float(base) ** float(e)


def _leq(a, b) -> bool:
    if _exact(a) and _exact(b):
        return a <= b
    return float(a) <= float(b) + 1e-12 * max(1.0, abs(float(b)))


def verify_corollary_lifting(f: TruthTable, which: str = "C", alpha=1) -> TheoremVerdict:
    """Desk form of lifting an ``mbs <= M^alpha`` relation to ``fmbs <= M^(2 alpha)``.

    ``holds`` is the implication (hypothesis and premise) => conclusion; the
    conclusion drops the hidden constant so it is flagged as heuristic.
    """
    alpha = Fraction(alpha)
    mf = scalar_measure(f, which)
    mff = scalar_measure(compose(f, f), which)
    mbs_f, fmbs_f = measure(f, "mbs"), measure(f, "fmbs")
    hypothesis = _leq(mbs_f, _power(mf, alpha))
    premise = _leq(mff, _power(mf, 2) if _exact(mf) else float(mf) ** 2)
    bound = _power(mf, 2 * alpha)
    conclusion = _leq(fmbs_f, bound)
    holds = conclusion or not (hypothesis and premise)
    return TheoremVerdict(
        "cor1-lifting", f"f={f.to_text()} M={which} alpha={fmt(alpha)}", holds, fmbs_f, bound,
        {"M(f)": mf, "M(f o f)": mff, "mbs(f)": mbs_f, "hypothesis": hypothesis,
         "premise": premise, "conclusion": conclusion, "conclusion_heuristic": True})


# ---------------------------------------------------------------------------
# sparsity of compositions


def verify_spar_composition(f: TruthTable, g: TruthTable) -> TheoremVerdict:
    from .poly import deg, spar
    sg, df = spar(g), deg(f)
    if sg < 1 or df < 1:
        raise PreconditionError("requires spar(g) >= 1 and deg(f) >= 1")
    lhs = spar(compose(f, g))
    rhs = (sg - 1) ** df
    return TheoremVerdict("sec31-spar-comp", f"f={f.to_text()} g={g.to_text()}", lhs >= rhs,
                          lhs, rhs, {"spar(g)": sg, "deg(f)": df})


# ---------------------------------------------------------------------------
# ODD-MAX-BIT characterisation of mbs <= 1


def _mask_sets(masks) -> list[list[int]]:
    return [[i + 1 for i in range(m.bit_length()) if (m >> i) & 1] for m in masks]


def omb_table(masks, n: int, complemented: bool = False) -> TruthTable:
    from .core import odd_max_bit
    g = odd_max_bit(_mask_sets(masks), n)
    return complement(g) if complemented else g


def synthesize_omb(f: TruthTable):
    """Peel ``f`` into ODD-MAX-BIT form.

    Returns ``(masks, complemented)`` with ``f = OMB(masks)`` or
    ``f = 1 - OMB(masks)``, or ``None`` when some step finds a 1-input that
    does not dominate every other 1-input.
    """
    complemented = bool(f.bits[0])
    h = complement(f) if complemented else f
    coords = list(range(f.n))
    sets = []
    while np.any(h.bits):
        ones = h.ones()
        x = int(ones[np.argmin(popcount(ones))])
        idx = np.arange(h.size)
        if np.any(h.bits[(idx & x) != x]):
            return None
        sets.append(sum(1 << coords[i] for i in range(h.n) if (x >> i) & 1))
        coords = [coords[i] for i in zeros_of(h.n, x)]
        h = complement(restrict(h, x))
    if not sets:
        # constant: 1 = X_empty, 0 = 1 - X_empty
        return [0], not complemented
    return sets, complemented


def verify_omb_characterization(f: TruthTable) -> TheoremVerdict:
    m = measure(f, "mbs")
    syn = synthesize_omb(f)
    witness = {"mbs": m, "synthesized": syn is not None}
    if syn is not None:
        masks, comp = syn
        witness["sets"] = _hexes(masks)
        witness["complemented"] = comp
        witness["round_trip"] = omb_table(masks, f.n, comp) == f
    if m <= 1:
        holds = syn is not None and witness["round_trip"]
    else:
        holds = syn is None
    return TheoremVerdict("appB1-omb", f"f={f.to_text()}", holds, m, Fraction(1), witness)


# ---------------------------------------------------------------------------
# shifting a separation into the monotone world

MONOTONE_OF = {"s": "ms", "bs": "mbs", "fbs": "fmbs", "C": "MCC"}


def verify_shift_lifting(f: TruthTable, pair=("bs", "C")) -> TheoremVerdict:
    m1, m2 = pair
    if m1 not in MONOTONE_OF or m2 not in MONOTONE_OF:
        raise ValueError(f"pair must use measures from {sorted(MONOTONE_OF)}")
    best, y = argmax(f, m1)
    y = 0 if y is None else y
    g = shift_by(f, y)
    a = measure_at(g, 0, MONOTONE_OF[m1])
    b = measure_at(f, y, m1)
    c = measure(g, MONOTONE_OF[m2])
    d = measure(g, m2)
    e = measure(f, m2)
    checks = {"mM1(g,0)=M1(f,y)": a == b, "M1(f,y)=M1(f)": b == best,
              "mM2(g)<=M2(g)": c <= d, "M2(g)=M2(f)": d == e}
    return TheoremVerdict("appE-lifting", f"f={f.to_text()} pair={m1},{m2}",
                          all(checks.values()), a, best,
                          {"y": f"{y:x}", "mM2(g)": c, "M2(g)": d, "M2(f)": e, "checks": checks})


def verify_thm2_shift(f: TruthTable) -> TheoremVerdict:
    """Shift to the sensitivity maximiser, then apply the sparsity-degree bounds."""
    base = verify_shift_lifting(f, ("s", "C"))
    y = int(base.witness["y"], 16)
    g = shift_by(f, y)
    p, q = mobius_transform(f), mobius_transform(g)
    bounds = verify_spar_degree_bounds(g)
    checks = dict(base.witness["checks"])
    checks["deg(g)<=deg(f)"] = degree(q) <= degree(p)
    checks["spar-degree(g)"] = bounds.holds
    checks["ms(g,0)=s(g,0)"] = measure_at(g, 0, "ms") == measure_at(g, 0, "s")
    return TheoremVerdict("thm2-shift", f"f={f.to_text()}", all(checks.values()),
                          measure(f, "s"), measure(g, "ms"),
                          {"y": base.witness["y"], "deg(f)": degree(p), "deg(g)": degree(q),
                           "spar(g)": sparsity(q), "checks": checks})


# ---------------------------------------------------------------------------
# infinite product bound


def exp_minus_two_upper(terms: int = 30) -> Fraction:
    """Rational upper bound for ``e^-2``: a Taylor partial sum ending on a positive term.

    From ``k = 2`` on the terms ``(-2)^k / k!`` alternate with decreasing
    magnitude, so stopping after an even ``k`` overshoots.
    """
    if terms < 2 or terms % 2:
        raise ValueError("need an even number of terms >= 2")
    return sum((Fraction((-2) ** k, math.factorial(k)) for k in range(terms + 1)), Fraction(0))


def prefix_products(count: int) -> list[Fraction]:
    out, p = [], Fraction(1)
    for i in range(1, count + 1):
        p *= 1 - Fraction(1, 1 << i)
        out.append(p)
    return out


def verify_prefix_product(count: int = 64) -> TheoremVerdict:
    """``prod_{i>=1} (1 - 2^-i) >= e^-2`` from a finite prefix.

    The tail satisfies ``prod_{i>N} (1 - 2^-i) >= 1 - sum_{i>N} 2^-i = 1 - 2^-N``,
    so ``P_N (1 - 2^-N)`` is a rigorous lower bound for the infinite product.
    """
    ps = prefix_products(count)
    lower = ps[-1] * (1 - Fraction(1, 1 << count))
    upper_e2 = exp_minus_two_upper()
    decreasing = all(a > b for a, b in zip(ps, ps[1:]))
    checks = {"infinite_product_bound": lower >= upper_e2, "strictly_decreasing": decreasing,
              "P_2=3/8": ps[1] == Fraction(3, 8) if count >= 2 else True,
              "P_N>98/725": ps[-1] > Fraction(98, 725)}
    return TheoremVerdict("prop5", f"N={count}", all(checks.values()), lower, upper_e2,
                          {"P_N": ps[-1], "checks": checks})


# ---------------------------------------------------------------------------
# sparsity versus degree


def verify_spar_degree_bounds(f: TruthTable) -> TheoremVerdict:
    p01 = mobius_transform(f)
    pf = fourier_transform(f)
    d01, df = degree(p01), degree(pf)
    s01, sf = sparsity(p01), sparsity(pf, include_empty=True)
    scale = 1 << df
    checks = {
        "spar01<=8^deg": s01 <= 8 ** d01,
        "sparF<=4^degF": sf <= 4 ** df,
        "zero-one integral": all(c.denominator == 1 for c in p01.coeffs.values()),
        "fourier granularity": all((c * scale).denominator == 1 for c in pf.coeffs.values()),
        "parseval": sum((c * c for c in pf.coeffs.values()), Fraction(0)) == 1,
    }
    return TheoremVerdict("appC-spar-deg", f"f={f.to_text()}", all(checks.values()),
                          s01, 8 ** d01,
                          {"deg01": d01, "degF": df, "sparF": sf, "checks": checks})


# ---------------------------------------------------------------------------
# hitting-set complexity over mbs * log spar


def verify_mcc_logspar_ratio(f: TruthTable, l_max: int) -> TheoremVerdict:
    from .poly import spar
    rows = []
    for l in range(1, l_max + 1):
        fl = iterate(f, l)
        sp = spar(fl)
        row = {"l": l, "MCC": measure(fl, "MCC"), "mbs": measure(fl, "mbs"), "spar": sp}
        if sp <= 1 or row["mbs"] == 0:
            row["ratio"] = None
        else:
            row["log2spar"] = math.log2(sp)
            row["ratio"] = float(row["MCC"]) / (float(row["mbs"]) * row["log2spar"])
        rows.append(row)
    ratios = [r["ratio"] for r in rows if r["ratio"] is not None]
    holds = all(math.isfinite(r) for r in ratios)
    return TheoremVerdict("cor5-ratio", f"f={f.to_text()} l_max={l_max}", holds,
                          max(ratios) if ratios else None, None, {"rows": rows},
                          skipped=not ratios)


# ---------------------------------------------------------------------------
# registry


def _functions(ns, cls="all"):
    from .scan import enumerate_class
    out = []
    for n in ns:
        out.extend(enumerate_class(n, cls))
    return out


def _decreasing(fs):
    return [negate_inputs(f) for f in fs]


def _default_lmax(f: TruthTable) -> int:
    return 3 if f.n <= 2 else 2


def _need(params, *names):
    missing = [k for k in names if params.get(k) is None]
    if missing:
        raise ValueError(f"missing instance argument(s): {', '.join(missing)}")


def _zs(params):
    z = params.get("z")
    return (0, 1) if z is None else (int(z),)


def _run_thm3(p):
    return [verify_symm_monotone_equality(p["f"])]


def _run_hsc(p):
    return [verify_hsc_vs_mbs_ms(p["f"], z) for z in _zs(p)]


def _run_b2(p):
    _need(p, "g")
    return [verify_mbs_composition_upper(p["f"], p["g"])]


def _lemma_runner(cid):
    def run(p):
        _need(p, "g")
        return [verify_composition_lower_bounds(p["f"], p["g"], z, (cid,)) for z in _zs(p)]
    return run


def _run_cor4(p):
    f = p["f"]
    return [verify_mbs_iterate_growth(f, p.get("lmax") or _default_lmax(f))]


def _run_thm1(p):
    return [verify_thm1_rounding(p["f"], p.get("l") or 1, p.get("x"))]


def _run_cor1(p):
    return [verify_corollary_lifting(p["f"], p.get("measure") or "C",
                                     p.get("alpha") if p.get("alpha") is not None else 1)]


def _run_spar_comp(p):
    _need(p, "g")
    return [verify_spar_composition(p["f"], p["g"])]


def _run_omb(p):
    return [verify_omb_characterization(p["f"])]


def _run_shift(p):
    pair = p.get("pair") or ("bs", "C")
    return [verify_shift_lifting(p["f"], pair)]


def _run_thm2(p):
    return [verify_thm2_shift(p["f"])]


def _run_prop5(p):
    return [verify_prefix_product()]


def _run_appc(p):
    return [verify_spar_degree_bounds(p["f"])]


def _run_cor5(p):
    f = p["f"]
    return [verify_mcc_logspar_ratio(f, p.get("lmax") or _default_lmax(f))]


def _pairs(ns):
    fs = _functions(ns)
    return [{"f": f, "g": g} for f in fs for g in fs]


def _singles(fs, **extra):
    return [dict(f=f, **extra) for f in fs]


def _default_thm3():
    fs = _functions(range(7), "symmetric")
    mono = _functions(range(5), "monotone")
    seen = set(fs)
    extra = [f for f in mono + _decreasing(mono) if f not in seen and not seen.add(f)]
    return _singles(fs + extra)


def _default_nonmono(ns):
    return _singles(_functions(ns, "non-monotone"))


def _default_spar_comp():
    from .poly import deg, spar
    items = [p for p in _pairs((1, 2)) if spar(p["g"]) >= 1 and deg(p["f"]) >= 1]
    from .core import generate
    items.append({"f": generate("or-and:4"), "g": generate("or:2")})
    return items


def _default_shift():
    fs = _functions((1, 2, 3))
    pairs = (("s", "bs"), ("bs", "fbs"), ("fbs", "C"), ("bs", "C"), ("s", "C"))
    return [{"f": f, "pair": pr} for f in fs for pr in pairs]


@dataclass(frozen=True)
class Claim:
    runner: object
    default: object
    needs_f: bool = True
    summary: str = ""


CLAIMS = {
    "thm1-rounding": Claim(_run_thm1, lambda: _default_nonmono((2,)),
                           summary="rounded capacity-LP blocks for f^(l+1)"),
    "cor1-lifting": Claim(_run_cor1, lambda: _singles(_functions((1, 2))),
                          summary="mbs <= M^a lifts to fmbs <= M^(2a) (desk form)"),
    "thm2-shift": Claim(_run_thm2, lambda: _singles(_functions((1, 2, 3))),
                        summary="shift to the sensitivity maximiser keeps deg, spar bounds"),
    "thm3-equality": Claim(_run_thm3, _default_thm3,
                           summary="ms = mbs = fmbs = MCC for symmetric or monotone f"),
    "lem1": Claim(_lemma_runner("lem1"), lambda: _pairs((1, 2)),
                  summary="fbs(f o g, z) >= fbs(f, z) fbs(g, z) at common fixed points"),
    "lem2": Claim(_lemma_runner("lem2"), lambda: _pairs((1, 2)),
                  summary="fmbs^0(f o g) >= fmbs^0(f) fmbs^0(g)"),
    "lem3": Claim(_lemma_runner("lem3"), lambda: _pairs((1, 2)),
                  summary="mbs^z(f o g) >= mbs(g), fmbs analogue, f non-monotone"),
    "lem4": Claim(_lemma_runner("lem4"), lambda: _pairs((1, 2)),
                  summary="mbs^z(f o g) >= max(mbs^z(f) mbs^0(g), bs^z(f) min mbs^b(g))"),
    "cor4-growth": Claim(_run_cor4, lambda: _default_nonmono((2,)),
                         summary="mbs^z(f^l) nondecreasing, >= 2^floor(l/2) when mbs(f) >= 2"),
    "cor5-ratio": Claim(_run_cor5, lambda: _default_nonmono((2,)),
                        summary="MCC(f^l) / (mbs(f^l) log2 spar(f^l)) stays finite"),
    "thmB1-hsc": Claim(_run_hsc, lambda: _singles(_functions((1, 2, 3))),
                       summary="MCC^z(f) <= mbs^z(f) ms^(1-z)(negated f)"),
    "thmB2-comp": Claim(_run_b2, lambda: _pairs((1, 2)),
                        summary="mbs(f o g) <= fbs(f) mbs(g)"),
    "prop5": Claim(_run_prop5, lambda: [{}], needs_f=False,
                   summary="prod (1 - 2^-i) >= e^-2"),
    "appB1-omb": Claim(_run_omb, lambda: _singles(_functions((1, 2, 3))),
                       summary="mbs <= 1 iff f or 1 - f is ODD-MAX-BIT"),
    "appC-spar-deg": Claim(_run_appc, lambda: _singles(_functions((1, 2, 3))),
                           summary="spar <= 8^deg (0/1), Fourier spar <= 4^deg"),
    "sec31-spar-comp": Claim(_run_spar_comp, _default_spar_comp,
                             summary="spar(f o g) >= (spar(g) - 1)^deg(f)"),
    "appE-lifting": Claim(_run_shift, _default_shift,
                          summary="separations shift into monotone measures"),
}


def _run_one(job):
    cid, params = job
    return CLAIMS[cid].runner(params)


def run_claim(claim_id: str, params: dict | None = None, threads: int | None = None):
    """Verdicts for one claim: on the given instance, or over its default sweep."""
    from ._parallel import pmap
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; expected one of {sorted(CLAIMS)}")
    claim = CLAIMS[claim_id]
    params = {k: v for k, v in (params or {}).items() if v is not None}
    if params or not claim.needs_f:
        if claim.needs_f:
            _need(params, "f")
        return claim.runner(params)
    jobs = [(claim_id, p) for p in claim.default()]
    return [v for vs in pmap(_run_one, jobs, threads) for v in vs]
