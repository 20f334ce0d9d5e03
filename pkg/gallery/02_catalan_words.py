"""
Catalan words of tree embeddings
================================

A root- and order-preserving embedding is written down by walking the
codomain and marking the edges hit by the image of each domain edge with the
depth of that edge's lower end.
"""

from treecat import Category, compare, compose, decode, encode, enumerate_morphisms, parse_brackets
from treecat.cli import PAPER_EXAMPLE

print("morphism:", PAPER_EXAMPLE)
word = encode(PAPER_EXAMPLE)
print("word:    ", word)
print("brackets:", word.p)
print("labels:  ", " ".join("-" if x is None else str(x) for x in word.n))
print("decodes back:", decode(word) == PAPER_EXAMPLE)

###############################################################################
# All embeddings of a marked edge into a small tree, listed in word order.

dom, cod = parse_brackets("()"), parse_brackets("(()())()")
hom = enumerate_morphisms(dom, cod, Category.PT)
for f in hom:
    print(f"{str(encode(f)):40s} {f}")

###############################################################################
# Post-composition keeps the order.

g = enumerate_morphisms(cod, parse_brackets("((()())())"), Category.PT)[0]
a, b = hom[0], hom[-1]
print(compare(encode(a), encode(b)), "->", compare(encode(compose(a, g)), encode(compose(b, g))))
