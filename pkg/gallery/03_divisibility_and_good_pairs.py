"""
Divisibility and good pairs
===========================

On morphisms out of a fixed tree, ``f <= g`` when ``g`` factors through
``f``. A finite sequence is good when some earlier element divides a later
one. Random sequences of pointed trees turn good quickly.
"""

import random

from treecat import build_Bn, divides, good_pair_search, minimize, MonomialSet, quasi_order_audit
from treecat.groebner import monomial_stream

base = build_Bn(1)
pool = monomial_stream(base, 5)
print(len(pool), "morphisms out of", base.brackets, "with at most 5 codomain vertices")

report = quasi_order_audit(pool)
print("\n".join(report.lines()))

###############################################################################
# How long until a random sequence has a good pair?

rng = random.Random(0)
lengths = []
for trial in range(200):
    seq = []
    while True:
        seq.append(rng.choice(pool))
        found = good_pair_search(seq)
        if found:
            lengths.append(len(seq))
            break
print("first good pair after", min(lengths), "to", max(lengths), "draws; mean", sum(lengths) / len(lengths))

###############################################################################
# The minimal elements of the whole pool form an antichain.

small = minimize(MonomialSet(base, tuple(pool)))
print("minimal elements:", [str(g) for g in small.generators])
f, g = pool[3], pool[-1]
print(f, "divides", g, "?", divides(f, g) is not None)
