"""Exact decision-tree complexity measures of small Boolean functions.

Standard measures (s, bs, fbs, C, FC), their monotone analogues (ms, mbs,
fmbs, MCC), polynomial sparsity and degree, verifiers for the relations
between them, and exhaustive scans over function classes.
"""
__version__ = "0.1.0"

from .core import (ArityError, TruthTable, complement, compose, evaluate, generate,
                   iterate, negate_inputs, parse_function, restrict, shift_by)
from .blocks import MONOTONE, STANDARD, BlockFamily, BudgetExceeded, minimal_blocks
from .measures import MEASURES, MeasureReport, full_report, measure, measure_at, measure_z
from .poly import PolyRep, fourier_transform, mobius_transform

__all__ = [
    "ArityError", "TruthTable", "complement", "compose", "evaluate", "generate",
    "iterate", "negate_inputs", "parse_function", "restrict", "shift_by",
    "MONOTONE", "STANDARD", "BlockFamily", "BudgetExceeded", "minimal_blocks",
    "MEASURES", "MeasureReport", "full_report", "measure", "measure_at", "measure_z",
    "PolyRep", "fourier_transform", "mobius_transform",
]
