"""Monomial-level Gröbner bookkeeping over PT-morphisms out of a fixed tree.

Monomials are PT-morphisms with a common domain, ordered by Catalan word.
Upward-closed sets under divisibility are stored by generators. The
stabilization demo truncates by codomain size; it illustrates ascending
chains settling down on a finite window and proves nothing about the
infinite category.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .catalan import encode
from .embeddings import Category, OrderEmbedding, enumerate_morphisms
from .order import divides
from .trees import PlanarRootedTree, enumerate_planar_trees

__all__ = [
    "Monomial",
    "FormalElement",
    "MonomialSet",
    "leading_term",
    "member",
    "minimize",
    "chain_stabilization_demo",
    "monomial_stream",
]

Monomial = OrderEmbedding


def _check_monomial(m: OrderEmbedding) -> None:
    if m.category is not Category.PT:
        raise ValueError(f"monomials are PT morphisms, got {m.category}: {m}")


@dataclass(frozen=True)
class FormalElement:
    """Finite linear combination of monomials with exact rational coefficients."""

    terms: Mapping[OrderEmbedding, Fraction]

    def __post_init__(self):
        cleaned = {m: Fraction(c) for m, c in self.terms.items() if c != 0}
        domains = {m.domain for m in cleaned}
        if len(domains) > 1:
            raise ValueError("all monomials of an element share one domain")
        for m in cleaned:
            _check_monomial(m)
        object.__setattr__(self, "terms", cleaned)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def scale(self, c) -> "FormalElement":
        return FormalElement({m: c * k for m, k in self.terms.items()})


@dataclass(frozen=True)
class MonomialSet:
    base: PlanarRootedTree
    generators: tuple[OrderEmbedding, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            _check_monomial(g)
            if g.domain != self.base:
                raise ValueError(f"{g} does not start at {self.base.brackets!r}")
        object.__setattr__(self, "generators", gens)

    def lines(self) -> list[str]:
        return [f"GEN {g}" for g in self.generators]


def leading_term(e: FormalElement) -> OrderEmbedding:
    if not e:
        raise ValueError("the zero element has no leading term")
    return max(e.terms, key=encode)


def member(s: MonomialSet, m: OrderEmbedding) -> Optional[tuple[OrderEmbedding, OrderEmbedding]]:
    """A generator dividing ``m`` together with the witness, if any."""
    if m.domain != s.base:
        raise ValueError(f"{m} does not start at {s.base.brackets!r}")
    for g in s.generators:
        h = divides(g, m)
        if h is not None:
            return g, h
    return None


def minimize(s: MonomialSet) -> MonomialSet:
    """Drop generators divisible by another generator.

    Divisibility is antisymmetric on PT and refines the Catalan order, so
    scanning in ascending word order keeps exactly the minimal elements.
    """
    kept: list[OrderEmbedding] = []
    for g in sorted(set(s.generators), key=encode):
        if all(divides(k, g) is None for k in kept):
            kept.append(g)
    return MonomialSet(s.base, tuple(kept))


def chain_stabilization_demo(stream: Sequence[OrderEmbedding], size_cap: int) -> int:
    """Feed ``stream`` into a growing generator set, minimizing each time.

    Returns the number of monomials consumed when the minimized generators
    reach their final value (0 for an empty stream).
    """
    if not stream:
        return 0
    for m in stream:
        if m.codomain.n_vertices > size_cap:
            raise ValueError(f"{m} exceeds the size cap {size_cap}")
    s = MonomialSet(stream[0].domain, ())
    history = []
    for m in stream:
        s = minimize(MonomialSet(s.base, s.generators + (m,)))
        history.append(set(s.generators))
    final = history[-1]
    k = len(history)
    while k > 1 and history[k - 2] == final:
        k -= 1
    return k


def monomial_stream(base: PlanarRootedTree, size_cap: int) -> list[OrderEmbedding]:
    """Every PT-morphism out of ``base`` with codomain at most ``size_cap``
    vertices, grouped by codomain size, each hom-set in Catalan order."""
    out = []
    for n in range(base.n_vertices, size_cap + 1):
        for u in enumerate_planar_trees(n):
            out.extend(enumerate_morphisms(base, u, Category.PT))
    return out

