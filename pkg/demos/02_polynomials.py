"""Multilinear polynomials in the 0/1 and +-1 bases."""
from boolmeter.core import generate
from boolmeter.poly import deg, fourier_transform, mobius_transform, spar

maj = generate("maj:3")
for mask, c in mobius_transform(maj).items():
    print(f"{mask:03b}", c)

# OR_n needs every nonempty monomial
print([spar(generate(f"or:{n}")) for n in range(1, 7)])

# while OR of two ANDs needs three
f = generate("or-and:4")
print(spar(f), deg(f))

# the +-1 coefficients of AND are all +-1/2
print(sorted(fourier_transform(generate("and:2")).coeffs.values()))
