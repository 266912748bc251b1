"""Checking the structural claims on concrete instances."""
from boolmeter.core import generate
from boolmeter.theorems import (run_claim, synthesize_omb, verify_prefix_product,
                                verify_thm1_rounding)

# the rounding construction for XOR at the first level
v = verify_thm1_rounding(generate("xor:2"), 1)
print(v.holds, v.witness["checks"])
print("blocks of f^2:", v.witness["blocks"], "at", v.witness["x_hat"])

# peel an ODD-MAX-BIT form off a function with mbs = 1
print(synthesize_omb(generate("omb:3:1;2,3")))
print(synthesize_omb(generate("xor:2")))

print(verify_prefix_product().line())

# a default sweep: every claim instance should hold
verdicts = run_claim("thmB2-comp")
print(len(verdicts), all(v.holds for v in verdicts))
