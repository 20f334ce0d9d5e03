"""Rooted and planar rooted trees.

A planar rooted tree is stored as the tuple of children lists of its
vertices, indexed in preorder (left-to-right depth-first walk). Vertex 0 is
the root. The bracket grammar omits the root's own brackets, so the empty
string is the single-vertex tree and ``"()()"`` is a root with two leaves.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

__all__ = [
    "BracketParseError",
    "PlanarRootedTree",
    "RootedTree",
    "POINT",
    "parse_brackets",
    "to_brackets",
    "build_Bn",
    "tree_leq",
    "depth",
    "split",
    "glue",
    "enumerate_planar_trees",
    "canonical_rooted",
    "planar_representations",
    "planar_representations_with_labels",
    "count_planar_representations",
]


class BracketParseError(ValueError):
    """Raised for a string that is not a balanced bracket word."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class PlanarRootedTree:
    """A finite planar rooted tree with preorder vertex indices.

    ``children[v]`` lists the children of ``v`` in plane order. The
    constructor rejects anything that is not already in preorder form; use
    :func:`from_children_map` to build from arbitrary labels.
    """

    children: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...] = field(init=False, repr=False, compare=False)
    size_below: tuple[int, ...] = field(init=False, repr=False, compare=False)
    depths: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.children)
        if n == 0:
            raise ValueError("a tree has at least one vertex")
        parent = [-1] * n
        depths = [0] * n
        # Walking the children lists in preorder must reproduce 0..n-1.
        stack = [0]
        order = []
        while stack and len(order) <= n:
            v = stack.pop()
            order.append(v)
            for c in self.children[v]:
                if not 0 < c < n or parent[c] != -1:
                    raise ValueError(f"bad child index {c} under vertex {v}")
                parent[c] = v
                depths[c] = depths[v] + 1
            stack.extend(reversed(self.children[v]))
        if order != list(range(n)):
            raise ValueError("children lists are not in preorder form")
        sizes = [1] * n
        for v in range(n - 1, 0, -1):
            sizes[parent[v]] += sizes[v]
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "size_below", tuple(sizes))
        object.__setattr__(self, "depths", tuple(depths))

    @classmethod
    def from_children_map(cls, children: dict | Sequence, root=0) -> tuple["PlanarRootedTree", dict]:
        """Build from arbitrary vertex labels; returns the tree and the
        relabelling ``old label -> preorder index``."""
        relabel = {}
        stack = [root]
        while stack:
            v = stack.pop()
            relabel[v] = len(relabel)
            stack.extend(reversed(children[v]))
        new_children = [()] * len(relabel)
        for old, new in relabel.items():
            new_children[new] = tuple(relabel[c] for c in children[old])
        return cls(tuple(new_children)), relabel

    @property
    def n_vertices(self) -> int:
        return len(self.children)

    def __len__(self) -> int:
        return len(self.children)

    def __str__(self) -> str:
        return self.brackets

    def __repr__(self) -> str:
        return f"PlanarRootedTree({self.brackets!r})"

    @cached_property
    def brackets(self) -> str:
        return to_brackets(self)

    def vertices(self) -> range:
        return range(len(self.children))

    def leq(self, v: int, w: int) -> bool:
        """Tree order: ``w`` lies on the path from ``v`` to the root."""
        return w <= v < w + self.size_below[w]

    def descendants(self, v: int) -> range:
        """Vertices strictly above ``v`` (farther from the root)."""
        return range(v + 1, v + self.size_below[v])

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]


POINT = PlanarRootedTree(((),))


def parse_brackets(s: str) -> PlanarRootedTree:
    """Parse a balanced bracket string into a planar rooted tree.

    >>> parse_brackets("(())").parent
    (-1, 0, 1)
    """
    children: list[list[int]] = [[]]
    stack = [0]
    for offset, ch in enumerate(s):
        if ch == "(":
            v = len(children)
            children.append([])
            children[stack[-1]].append(v)
            stack.append(v)
        elif ch == ")":
            if len(stack) == 1:
                raise BracketParseError("unmatched ')'", offset)
            stack.pop()
        else:
            raise BracketParseError(f"unexpected character {ch!r}", offset)
    if len(stack) != 1:
        raise BracketParseError("unclosed '('", len(s))
    return PlanarRootedTree(tuple(tuple(c) for c in children))


def to_brackets(t: PlanarRootedTree) -> str:
    # Preorder lets us close brackets by comparing subtree extents.
    out = []
    open_until = []
    for v in range(1, t.n_vertices):
        while open_until and open_until[-1] <= v:
            open_until.pop()
            out.append(")")
        out.append("(")
        open_until.append(v + t.size_below[v])
    out.append(")" * len(open_until))
    return "".join(out)


def build_Bn(n: int) -> PlanarRootedTree:
    """The star with ``n`` leaves attached to the root."""
    if n < 1:
        raise ValueError(f"B_n needs n >= 1, got {n}")
    return PlanarRootedTree((tuple(range(1, n + 1)),) + ((),) * n)


def _check_vertex(t: PlanarRootedTree, v: int) -> None:
    if not 0 <= v < t.n_vertices:
        raise IndexError(f"vertex {v} not in a tree with {t.n_vertices} vertices")


def tree_leq(t: PlanarRootedTree, v: int, w: int) -> bool:
    _check_vertex(t, v)
    _check_vertex(t, w)
    return t.leq(v, w)


def depth(t: PlanarRootedTree, v: int) -> int:
    _check_vertex(t, v)
    return t.depths[v]


def split(t: PlanarRootedTree, v: int) -> tuple[PlanarRootedTree, PlanarRootedTree, int]:
    """Cut ``t`` at ``v``.

    Returns ``(above, below, mark)``: the subtree rooted at ``v``, the tree
    with everything strictly above ``v`` removed, and the index of ``v`` in
    ``below``.
    """
    _check_vertex(t, v)
    end = v + t.size_below[v]
    above = PlanarRootedTree(
        tuple(tuple(c - v for c in t.children[u]) for u in range(v, end))
    )
    kept = [u for u in t.vertices() if not v < u < end]
    below, relabel = PlanarRootedTree.from_children_map(
        {u: (() if u == v else t.children[u]) for u in kept}
    )
    return above, below, relabel[v]


def glue(below: PlanarRootedTree, at: int, above: PlanarRootedTree) -> PlanarRootedTree:
    """Identify the root of ``above`` with vertex ``at`` of ``below``.

    The branches of ``above`` are appended after any children ``at``
    already has.
    """
    _check_vertex(below, at)
    children: dict[tuple[int, int], tuple] = {}
    for u in below.vertices():
        kids = tuple((0, c) for c in below.children[u])
        if u == at:
            kids += tuple((1, c) for c in above.children[0])
        children[(0, u)] = kids
    for u in range(1, above.n_vertices):
        children[(1, u)] = tuple((1, c) for c in above.children[u])
    tree, _ = PlanarRootedTree.from_children_map(children, root=(0, 0))
    return tree


def _balanced_words(pairs: int) -> Iterator[str]:
    # Lexicographic with "(" < ")".
    def rec(prefix: str, opened: int, closed: int):
        if closed == pairs:
            yield prefix
            return
        if opened < pairs:
            yield from rec(prefix + "(", opened + 1, closed)
        if closed < opened:
            yield from rec(prefix + ")", opened, closed + 1)

    yield from rec("", 0, 0)


def enumerate_planar_trees(n: int) -> list[PlanarRootedTree]:
    """All planar rooted trees with ``n`` vertices, in bracket lex order."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    return [parse_brackets(w) for w in _balanced_words(n - 1)]


@dataclass(frozen=True)
class RootedTree:
    """Isomorphism class of a rooted tree, held as its canonical planar form.

    Build with :func:`canonical_rooted` or :meth:`from_brackets`; the
    constructor does not canonicalize.
    """

    canonical: PlanarRootedTree

    @classmethod
    def from_brackets(cls, s: str) -> "RootedTree":
        return canonical_rooted(parse_brackets(s))

    def __str__(self) -> str:
        return self.canonical.brackets

    @property
    def n_vertices(self) -> int:
        return self.canonical.n_vertices


def _canonical_word(t: PlanarRootedTree, v: int) -> str:
    parts = sorted(("(" + _canonical_word(t, c) + ")" for c in t.children[v]), reverse=True)
    return "".join(parts)


def canonical_rooted(t: PlanarRootedTree) -> RootedTree:
    """Forget the plane structure: sort branch encodings in descending order."""
    return RootedTree(parse_brackets(_canonical_word(t, 0)))


def planar_representations_with_labels(u: RootedTree) -> list[tuple[PlanarRootedTree, dict[int, int]]]:
    """Every plane structure on the canonical representative of ``u``.

    Each entry pairs the planar tree with the map from representative vertex
    index to the vertex's preorder index in that planar tree. Orders are
    produced by ``itertools.product`` over per-vertex permutations, taken in
    vertex order.
    """
    rep = u.canonical
    per_vertex = [list(itertools.permutations(rep.children[v])) for v in rep.vertices()]
    out = []
    for choice in itertools.product(*per_vertex):
        out.append(PlanarRootedTree.from_children_map(choice))
    return out


def planar_representations(u: RootedTree) -> list[PlanarRootedTree]:
    """All ``prod_v |In(v)|!`` plane structures on a fixed representative.

    Abstractly isomorphic plane structures are kept as separate entries.
    """
    return [t for t, _ in planar_representations_with_labels(u)]


def count_planar_representations(u: RootedTree) -> int:
    rep = u.canonical
    return math.prod(math.factorial(len(rep.children[v])) for v in rep.vertices())
