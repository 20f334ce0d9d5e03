"""
Planar rooted trees as bracket words
====================================

Trees are written as balanced bracket strings: each top-level group is one
branch at the root, and the empty string is the single vertex.
"""

from treecat import (
    RootedTree,
    build_Bn,
    canonical_rooted,
    enumerate_planar_trees,
    glue,
    parse_brackets,
    planar_representations,
    split,
)

t = parse_brackets("(()())()")
print("tree", t.brackets, "with", t.n_vertices, "vertices")
print("parents in preorder:", t.parent)
print("depths:", t.depths)

###############################################################################
# Cutting at a vertex gives the part above it and the part below it; gluing
# puts them back.

above, below, mark = split(t, 1)
print("above vertex 1:", repr(above.brackets), " below:", repr(below.brackets), " mark:", mark)
print("glued back:", glue(below, mark, above).brackets)

###############################################################################
# Counting: planar trees follow the Catalan numbers, rooted trees (plane
# order forgotten) are fewer.

for n in range(1, 9):
    planar = enumerate_planar_trees(n)
    rooted = {canonical_rooted(x) for x in planar}
    print(f"n={n}: {len(planar):4d} planar, {len(rooted):3d} rooted")

###############################################################################
# Every plane structure on one rooted tree. The star B_2 has two, even though
# they look the same on paper.

for s in ["()()", "()(())", "(()())()"]:
    reps = planar_representations(RootedTree.from_brackets(s))
    print(s, "->", [r.brackets for r in reps])

print("B_4 =", build_Bn(4).brackets)
