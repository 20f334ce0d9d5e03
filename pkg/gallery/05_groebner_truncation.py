"""
Ascending chains on a truncation
================================

Feed every monomial out of a base tree, smallest codomains first, into a
growing upward-closed set and watch the minimal generators settle. This is a
finite window, not a proof of anything infinite.
"""

from treecat import MonomialSet, build_Bn, chain_stabilization_demo, minimize, parse_brackets
from treecat.groebner import monomial_stream

for base in [parse_brackets(""), build_Bn(1), parse_brackets("(())")]:
    stream = monomial_stream(base, 5)
    final = minimize(MonomialSet(base, tuple(stream)))
    print(f"base {base.brackets!r}: {len(stream)} monomials, STABLE@{chain_stabilization_demo(stream, 5)}")
    print("\n".join("  " + line for line in final.lines()))

###############################################################################
# Without the identity in the stream the generators are the one-step
# extensions of the base.

base = build_Bn(1)
stream = [m for m in monomial_stream(base, 5) if m.codomain != base]
final = minimize(MonomialSet(base, tuple(stream)))
print(f"B_1 without identity: STABLE@{chain_stabilization_demo(stream, 5)}")
print("\n".join("  " + line for line in final.lines()))
