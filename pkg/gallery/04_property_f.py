"""
Forgetting the plane order
==========================

A root-preserving embedding of a rooted tree ``U`` into a planar tree ``V``
induces a plane order on ``U``. Sorting embeddings by that order splits them
into PT hom-sets, one per plane structure on ``U``.
"""

from treecat import RootedTree, enumerate_planar_trees, property_F_decomposition

u = RootedTree.from_brackets("()(())")
print("U =", u, "has", len(property_F_decomposition(u, enumerate_planar_trees(1)[0]).representations), "plane structures")
print("U | V | lhs | rhs | ok")
for v in enumerate_planar_trees(6)[::7]:
    r = property_F_decomposition(u, v)
    print(r.row())
