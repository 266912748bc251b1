"""Truth tables, the text format and the basic transforms."""
import numpy as np

from boolmeter.core import (TruthTable, and_, complement, compose, generate, iterate,
                            negate_inputs, restrict, shift_by)

# x1 is the lowest bit of an input index, so AND on two variables is 0b1000
f = and_(2)
print(f.bits, f.to_text())

# the same function from its text form and from a generator spec
print(TruthTable.from_text("2:8") == generate("and:2"))

# fixing x1 = 1 leaves the identity on x2
print(restrict(f, 0b01).bits)

# shifting by 11 moves the single 1 to the origin
print(shift_by(f, 0b11).bits)
print(complement(f).to_text(), negate_inputs(f).to_text())

# OR of ORs is a wider OR
print(compose(generate("or:2"), generate("or:2")).to_text())

# iterating majority gives a 9-variable function; count its ones
m = iterate(generate("maj:3"), 2)
print(m.n, int(np.sum(m.bits)))
