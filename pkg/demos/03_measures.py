"""Block families, the optimisation problems behind them, and the measures."""
from boolmeter.blocks import MONOTONE, minimal_blocks
from boolmeter.core import generate
from boolmeter.measures import full_report, measure, measure_at
from boolmeter.optim import int_pack, lp_pack, min_hitting_set

maj = generate("maj:3")
fam = minimal_blocks(maj, 0)
print([f"{b:03b}" for b in fam.blocks])

# three pairwise-intersecting pairs: pack 1, fractional pack 3/2, hit 2
print(int_pack(fam).objective, lp_pack(fam).objective, min_hitting_set(fam).size)
print(measure_at(maj, 0, "fbs"))

# monotone blocks only flip zeros, so AND_2 at 00 has the single block {1,2}
print(minimal_blocks(generate("and:2"), 0, MONOTONE).blocks)

rep = full_report(generate("and:2"))
print({m: str(v) for m, v in rep.values.items()})

# a non-monotone function with monotone block sensitivity 1
omb = generate("omb:2:1;2")
print(omb.to_text(), measure(omb, "mbs"), measure(omb, "bs"))
