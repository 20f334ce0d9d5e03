"""Order embeddings between (planar) rooted trees.

A morphism is stored as a vertex map between two planar trees together with
the category it is claimed to live in. ``FT`` and ``T`` morphisms are
represented on fixed plane representatives with the depth-first constraint
switched off.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .trees import PlanarRootedTree, build_Bn, parse_brackets

__all__ = [
    "Category",
    "OrderEmbedding",
    "MorphismFormatError",
    "is_morphism",
    "enumerate_morphisms",
    "brute_force_morphisms",
    "iter_morphisms",
    "identity",
    "compose",
    "maps_from_Bn_tuples",
    "tuple_to_morphism",
    "promote_root",
    "parse_morphism",
]


class Category(enum.Enum):
    FT = "ft"
    FPT = "fpt"
    T = "t"
    PT = "pt"

    @property
    def preserves_root(self) -> bool:
        return self in (Category.T, Category.PT)

    @property
    def preserves_dfs(self) -> bool:
        return self in (Category.FPT, Category.PT)

    def __str__(self) -> str:
        return self.name


class MorphismFormatError(ValueError):
    pass


@dataclass(frozen=True)
class OrderEmbedding:
    domain: PlanarRootedTree
    codomain: PlanarRootedTree
    map: tuple[int, ...]
    category: Category = Category.PT

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, v: int) -> int:
        return self.map[v]

    def __str__(self) -> str:
        return f"{self.domain.brackets} -> {self.codomain.brackets} : [{','.join(map(str, self.map))}]"

    def is_valid(self) -> bool:
        return is_morphism(self.domain, self.codomain, self.map, self.category)


_MORPHISM_RE = re.compile(r"^\s*([()]*)\s*->\s*([()]*)\s*:\s*\[([0-9,\s]*)\]\s*$")


def parse_morphism(text: str, category: Category = Category.PT) -> OrderEmbedding:
    """Parse ``<domain> -> <codomain> : [i_0,i_1,...]``; validity is checked."""
    m = _MORPHISM_RE.match(text)
    if not m:
        raise MorphismFormatError(f"not a morphism: {text!r}")
    dom, cod = parse_brackets(m.group(1)), parse_brackets(m.group(2))
    body = m.group(3).strip()
    images = tuple(int(x) for x in body.split(",")) if body else ()
    if not is_morphism(dom, cod, images, category):
        raise MorphismFormatError(f"not a {category} morphism: {text!r}")
    return OrderEmbedding(dom, cod, images, category)


def is_morphism(domain: PlanarRootedTree, codomain: PlanarRootedTree, images: Sequence[int], category: Category) -> bool:
    n = domain.n_vertices
    if len(images) != n:
        return False
    if any(not 0 <= c < codomain.n_vertices for c in images):
        return False
    if len(set(images)) != n:
        return False
    if category.preserves_root and images[0] != 0:
        return False
    if category.preserves_dfs and any(images[i] >= images[i + 1] for i in range(n - 1)):
        return False
    for v in range(n):
        for w in range(n):
            if domain.leq(v, w) != codomain.leq(images[v], images[w]):
                return False
    return True


def _extend(domain, codomain, category, fixed):
    # Backtracking over domain vertices in preorder; parents are assigned
    # before children, so each candidate only needs checking against the
    # prefix already placed.
    n, m = domain.n_vertices, codomain.n_vertices
    images: list[int] = []

    def candidates(k: int):
        if k in fixed:
            c = fixed[k]
            if not 0 <= c < m or (k == 0 and category.preserves_root and c != 0):
                return ()
            return (c,)
        if k == 0:
            return (0,) if category.preserves_root else range(m)
        p = domain.parent[k]
        lo = images[p] + 1
        if category.preserves_dfs:
            lo = max(lo, images[k - 1] + 1)
        return range(lo, images[p] + codomain.size_below[images[p]])

    def ok(k: int, c: int) -> bool:
        if category.preserves_dfs and k and c <= images[k - 1]:
            return False
        for j in range(k):
            d = images[j]
            if codomain.leq(d, c):
                return False
            if domain.leq(k, j) != codomain.leq(c, d):
                return False
        return True

    def rec(k: int):
        if k == n:
            yield tuple(images)
            return
        for c in candidates(k):
            if ok(k, c):
                images.append(c)
                yield from rec(k + 1)
                images.pop()

    yield from rec(0)


def iter_morphisms(domain: PlanarRootedTree, codomain: PlanarRootedTree, category: Category, fixed: dict[int, int] | None = None) -> Iterator[OrderEmbedding]:
    """Morphisms in lexicographic map order, optionally with some images pinned."""
    for images in _extend(domain, codomain, category, fixed or {}):
        yield OrderEmbedding(domain, codomain, images, category)


def enumerate_morphisms(domain: PlanarRootedTree, codomain: PlanarRootedTree, category: Category) -> list[OrderEmbedding]:
    """All morphisms ``domain -> codomain`` in ``category``.

    PT hom-sets come sorted by Catalan word; the others in lexicographic
    map order.
    """
    out = list(iter_morphisms(domain, codomain, category))
    if category is Category.PT:
        from .catalan import encode

        out.sort(key=encode)
    return out


def brute_force_morphisms(domain: PlanarRootedTree, codomain: PlanarRootedTree, category: Category) -> list[OrderEmbedding]:
    """Reference enumerator: filter every injective vertex map."""
    return [
        OrderEmbedding(domain, codomain, images, category)
        for images in itertools.permutations(codomain.vertices(), domain.n_vertices)
        if is_morphism(domain, codomain, images, category)
    ]


def identity(t: PlanarRootedTree, category: Category = Category.PT) -> OrderEmbedding:
    return OrderEmbedding(t, t, tuple(t.vertices()), category)


def compose(f: OrderEmbedding, g: OrderEmbedding) -> OrderEmbedding:
    """``g ∘ f``: first ``f``, then ``g``."""
    if f.codomain != g.domain:
        raise ValueError(f"cannot compose: {f.codomain.brackets!r} != {g.domain.brackets!r}")
    if f.category is not g.category:
        raise ValueError(f"cannot compose a {f.category} morphism with a {g.category} morphism")
    return OrderEmbedding(f.domain, g.codomain, tuple(g.map[i] for i in f.map), f.category)


def maps_from_Bn_tuples(n: int, t: PlanarRootedTree) -> list[tuple[int, ...]]:
    """Tuples ``(v, v_1, ..., v_n)`` with the ``v_i`` strictly below ``v``,
    pairwise incomparable, and increasing in depth-first order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    for v in t.vertices():
        for leaves in itertools.combinations(t.descendants(v), n):
            # a precedes b in preorder, so they are comparable only if b is above a
            if all(not t.leq(b, a) for a, b in itertools.combinations(leaves, 2)):
                out.append((v,) + leaves)
    return out


def tuple_to_morphism(t: PlanarRootedTree, tup: Sequence[int]) -> OrderEmbedding:
    return OrderEmbedding(build_Bn(len(tup) - 1), t, tuple(tup), Category.FPT)


def promote_root(f: OrderEmbedding) -> OrderEmbedding:
    """Send the domain root to the codomain root, leaving the rest alone.

    Every non-root vertex already sits strictly above ``f(root)``, so the
    result is a root-preserving embedding.
    """
    if not f.category.preserves_dfs:
        raise ValueError(f"promote_root expects an FPT or PT morphism, got {f.category}")
    g = OrderEmbedding(f.domain, f.codomain, (0,) + f.map[1:], Category.PT)
    assert g.is_valid(), f"root promotion produced an invalid map: {g}"
    return g
