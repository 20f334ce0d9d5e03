"""Divisibility on PT-morphisms out of a fixed tree, and finite WQO probes.

``f <= g`` when ``g = h ∘ f`` for some PT-morphism ``h``. Well-quasi-
orderedness is an infinitary statement; everything here works on finite
samples and only ever produces finite certificates (good pairs, antichains).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, TypeVar

from .embeddings import Category, OrderEmbedding, compose, enumerate_morphisms, iter_morphisms
from .trees import PlanarRootedTree

__all__ = [
    "PointedMorphismSet",
    "AuditReport",
    "divides",
    "divides_brute_force",
    "higman_leq",
    "higman_leq_exhaustive",
    "good_pair_search",
    "antichain_check",
    "quasi_order_audit",
]

X = TypeVar("X")


@dataclass(frozen=True)
class PointedMorphismSet:
    base: PlanarRootedTree
    members: tuple[OrderEmbedding, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for f in self.members:
            if f.domain != self.base:
                raise ValueError(f"{f} does not start at {self.base.brackets!r}")
            if f.category is not Category.PT:
                raise ValueError(f"{f} is not a PT morphism")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _check_pair(f: OrderEmbedding, g: OrderEmbedding) -> None:
    if f.domain != g.domain:
        raise ValueError(f"domains differ: {f.domain.brackets!r} vs {g.domain.brackets!r}")
    if f.category is not Category.PT or g.category is not Category.PT:
        raise ValueError("divisibility is defined on PT morphisms")


def divides(f: OrderEmbedding, g: OrderEmbedding) -> Optional[OrderEmbedding]:
    """A witness ``h`` with ``g = h ∘ f``, or ``None``.

    The search pins ``h(f(v)) = g(v)`` for every domain vertex and
    backtracks over the remaining codomain vertices in preorder.
    """
    _check_pair(f, g)
    if f.codomain.n_vertices > g.codomain.n_vertices:
        return None
    fixed = {f.map[v]: g.map[v] for v in f.domain.vertices()}
    return next(iter_morphisms(f.codomain, g.codomain, Category.PT, fixed), None)


def divides_brute_force(f: OrderEmbedding, g: OrderEmbedding) -> list[OrderEmbedding]:
    """Every witness, found by scanning the whole hom-set."""
    _check_pair(f, g)
    return [h for h in enumerate_morphisms(f.codomain, g.codomain, Category.PT) if compose(f, h) == g]


def higman_leq(a: Sequence[X], b: Sequence[X], leq: Callable[[X, X], bool]) -> bool:
    """Subsequence embedding with letterwise domination, greedy."""
    i = 0
    for y in b:
        if i == len(a):
            break
        if leq(a[i], y):
            i += 1
    return i == len(a)


def higman_leq_exhaustive(a: Sequence[X], b: Sequence[X], leq: Callable[[X, X], bool]) -> bool:
    return any(
        all(leq(x, b[j]) for x, j in zip(a, positions))
        for positions in itertools.combinations(range(len(b)), len(a))
    )


def good_pair_search(seq: Sequence[OrderEmbedding]) -> Optional[tuple[int, int, OrderEmbedding]]:
    """Lexicographically least ``(i, j)``, ``i < j``, with ``seq[i] <= seq[j]``."""
    if seq:
        base = seq[0].domain
        for f in seq:
            if f.domain != base:
                raise ValueError("good_pair_search needs a common domain")
    for i, j in itertools.combinations(range(len(seq)), 2):
        h = divides(seq[i], seq[j])
        if h is not None:
            return i, j, h
    return None


def antichain_check(members: PointedMorphismSet | Sequence[OrderEmbedding]) -> bool:
    ms = list(members)
    for f, g in itertools.combinations(ms, 2):
        if f == g:
            continue
        if divides(f, g) is not None or divides(g, f) is not None:
            return False
    return True


@dataclass
class AuditReport:
    size: int
    comparable_pairs: int = 0
    transitive_triples: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = f"AUDIT size={self.size} pairs={self.comparable_pairs} triples={self.transitive_triples}"
        return [head] + [f"VIOLATION {v}" for v in self.violations] + ["OK" if self.ok else "FAIL"]


def quasi_order_audit(members: PointedMorphismSet | Sequence[OrderEmbedding]) -> AuditReport:
    """Check reflexivity and transitivity of divisibility on a finite set.

    For each chain ``f <= g <= k`` the composed witness must itself witness
    ``f <= k``, and the search must agree that ``f <= k``.
    """
    ms = list(members)
    report = AuditReport(len(ms))
    wit: dict[tuple[int, int], OrderEmbedding] = {}
    for i, f in enumerate(ms):
        for j, g in enumerate(ms):
            h = divides(f, g)
            if h is None:
                continue
            if compose(f, h) != g or not h.is_valid():
                report.violations.append(f"bad witness for {i} <= {j}: {h}")
                continue
            wit[i, j] = h
        if (i, i) not in wit:
            report.violations.append(f"reflexivity fails at {i}: {f}")
    report.comparable_pairs = len(wit)
    for (i, j), h1 in wit.items():
        for k in range(len(ms)):
            h2 = wit.get((j, k))
            if h2 is None:
                continue
            report.transitive_triples += 1
            h = compose(h1, h2)
            if compose(ms[i], h) != ms[k] or not h.is_valid():
                report.violations.append(f"composed witness fails for {i} <= {j} <= {k}")
            if (i, k) not in wit:
                report.violations.append(f"transitivity fails for {i} <= {j} <= {k}")
    return report
