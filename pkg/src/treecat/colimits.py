"""Colimit checks in FPT and the hom-set decomposition along ``J: PT -> T``.

Universal properties are tested against a probe tree ``w``: a square or
diagram is a colimit at ``w`` when restriction gives a bijection between
morphisms out of the apex and compatible families out of the pieces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .embeddings import Category, OrderEmbedding, enumerate_morphisms, is_morphism
from .trees import (
    PlanarRootedTree,
    RootedTree,
    build_Bn,
    glue,
    planar_representations_with_labels,
    split,
)

__all__ = [
    "Cospan",
    "PropertyF",
    "pushout_universal_check",
    "root_decomposition",
    "root_colimit_check",
    "property_F_decomposition",
    "essential_surjectivity_witness",
]


@dataclass(frozen=True)
class Cospan:
    """The two pieces of a tree cut at a vertex, with the shared vertex."""

    apex_vertex: int
    above: PlanarRootedTree
    below: PlanarRootedTree

    @classmethod
    def from_split(cls, t: PlanarRootedTree, v: int) -> "Cospan":
        above, below, mark = split(t, v)
        return cls(mark, above, below)

    def glue(self) -> PlanarRootedTree:
        return glue(self.below, self.apex_vertex, self.above)


def pushout_universal_check(t: PlanarRootedTree, v: int, w: PlanarRootedTree) -> bool:
    """Mor_FPT(t, w) against pairs (alpha on T_v, beta on T^v) agreeing at v."""
    end = v + t.size_below[v]
    above, below, mark = split(t, v)
    below_vertices = [u for u in t.vertices() if not v < u < end]

    phis = enumerate_morphisms(t, w, Category.FPT)
    restricted = {(phi.map[v:end], tuple(phi.map[u] for u in below_vertices)) for phi in phis}

    pairs = {
        (a.map, b.map)
        for a in enumerate_morphisms(above, w, Category.FPT)
        for b in enumerate_morphisms(below, w, Category.FPT)
        if a.map[0] == b.map[mark]
    }
    return len(restricted) == len(phis) and restricted == pairs


def root_decomposition(t: PlanarRootedTree) -> tuple[list[PlanarRootedTree], int]:
    """Branches at the root in plane order, and how many there are."""
    branches = [split(t, c)[0] for c in t.children[0]]
    return branches, len(branches)


def root_colimit_check(t: PlanarRootedTree, w: PlanarRootedTree) -> bool:
    """Mor_FPT(t, w) against families (psi_i on each branch, beta on B_n)
    with psi_i(root) = beta(leaf i)."""
    branches, n = root_decomposition(t)
    if n == 0:
        raise ValueError("root_colimit_check needs a tree with at least one edge")
    tops = t.children[0]

    restricted = set()
    count = 0
    for phi in enumerate_morphisms(t, w, Category.FPT):
        count += 1
        psis = tuple(phi.map[c:c + t.size_below[c]] for c in tops)
        beta = (phi.map[0],) + tuple(phi.map[c] for c in tops)
        restricted.add((psis, beta))

    branch_maps = [[m.map for m in enumerate_morphisms(b, w, Category.FPT)] for b in branches]
    families = set()
    for beta in enumerate_morphisms(build_Bn(n), w, Category.FPT):
        options = [[m for m in maps if m[0] == beta.map[i + 1]] for i, maps in enumerate(branch_maps)]
        for psis in itertools.product(*options):
            families.add((tuple(psis), beta.map))
    return len(restricted) == count and restricted == families


@dataclass
class PropertyF:
    """Both sides of ``T(U, J(V)) = PT(U_1, V) ⊔ ... ⊔ PT(U_e, V)``.

    ``factorization[k]`` is ``(i, psi)``: the plane structure index and the
    PT-morphism that ``lhs[k]`` factors as.
    """

    u: RootedTree
    v: PlanarRootedTree
    representations: list[PlanarRootedTree]
    lhs: list[OrderEmbedding]
    rhs: list[list[OrderEmbedding]]
    factorization: list[tuple[int, OrderEmbedding]] = field(default_factory=list)

    @property
    def e(self) -> int:
        return len(self.representations)

    @property
    def counts_match(self) -> bool:
        return len(self.lhs) == sum(len(r) for r in self.rhs)

    @property
    def is_bijection(self) -> bool:
        image = {(i, psi.map) for i, psi in self.factorization}
        target = {(i, psi.map) for i, part in enumerate(self.rhs) for psi in part}
        return (
            len(self.factorization) == len(self.lhs)
            and len(image) == len(self.lhs)
            and image == target
        )

    def row(self) -> str:
        rhs = " ".join(str(len(r)) for r in self.rhs)
        ok = "ok" if self.is_bijection else "FAIL"
        return f"{self.u} | {self.v} | {len(self.lhs)} | {rhs} | {ok}"


def property_F_decomposition(u: RootedTree, v: PlanarRootedTree) -> PropertyF:
    """Factor each T-morphism ``u -> v`` through the plane structure it induces.

    Children of each vertex of ``u`` are ordered by the depth-first position
    of their images in ``v``; the resulting plane structure picks out one
    ``U_i`` and the map becomes a PT-morphism out of it.
    """
    rep = u.canonical
    reps = planar_representations_with_labels(u)
    index = {}
    for i, (tree, relabel) in enumerate(reps):
        order = tuple(tuple(sorted(rep.children[x], key=relabel.__getitem__)) for x in rep.vertices())
        index.setdefault(order, i)

    lhs = enumerate_morphisms(rep, v, Category.T)
    rhs = [enumerate_morphisms(tree, v, Category.PT) for tree, _ in reps]
    result = PropertyF(u, v, [t for t, _ in reps], lhs, rhs)
    for phi in lhs:
        order = tuple(tuple(sorted(rep.children[x], key=phi.map.__getitem__)) for x in rep.vertices())
        i = index[order]
        tree, relabel = reps[i]
        images = [0] * rep.n_vertices
        for old, new in relabel.items():
            images[new] = phi.map[old]
        psi = OrderEmbedding(tree, v, tuple(images), Category.PT)
        if not is_morphism(tree, v, psi.map, Category.PT):
            raise AssertionError(f"induced plane structure does not give a PT map: {phi}")
        result.factorization.append((i, psi))
    return result


def essential_surjectivity_witness(u: RootedTree) -> PlanarRootedTree:
    return u.canonical
