"""Catalan words of PT-morphisms.

Walking the codomain depth-first, each edge is written once going up and
once coming down. An edge on the image path of a domain edge ``e`` carries
the depth of the lower endpoint of ``e`` in the domain; other edges are
blank. Text form: ``(`` / ``)`` for blank edges, ``(3`` / ``)3`` for an
edge labelled 3, tokens separated by single spaces.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional

from .embeddings import Category, OrderEmbedding, is_morphism
from .trees import BracketParseError, PlanarRootedTree, parse_brackets

__all__ = [
    "CatalanToken",
    "CatalanWord",
    "CatalanDecodeError",
    "LabelConflictError",
    "Ordering",
    "edge_labels",
    "encode",
    "decode",
    "compare",
    "parse_word",
]


class CatalanDecodeError(ValueError):
    """Malformed Catalan word; ``index`` is the first offending token."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (token {index})")
        self.index = index


class LabelConflictError(RuntimeError):
    """Two domain edges tried to put different labels on one codomain edge."""


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class CatalanToken:
    up: bool
    label: Optional[int] = None

    def __str__(self) -> str:
        return ("(" if self.up else ")") + ("" if self.label is None else str(self.label))


_TOKEN_RE = re.compile(r"^([()])(\d*)$")


@total_ordering
@dataclass(frozen=True)
class CatalanWord:
    tokens: tuple[CatalanToken, ...]

    @property
    def p(self) -> str:
        """Bracket row."""
        return "".join("(" if t.up else ")" for t in self.tokens)

    @property
    def n(self) -> tuple[Optional[int], ...]:
        """Label row, ``None`` for blank."""
        return tuple(t.label for t in self.tokens)

    def __str__(self) -> str:
        return " ".join(map(str, self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def sort_key(self) -> tuple:
        # Length first, then ")" < "(", then "-" < 0 < 1 < ...
        return (
            len(self.tokens),
            tuple(t.up for t in self.tokens),
            tuple(-1 if t.label is None else t.label for t in self.tokens),
        )

    def __lt__(self, other: "CatalanWord") -> bool:
        return self.sort_key() < other.sort_key()

    @classmethod
    def parse(cls, text: str) -> "CatalanWord":
        return parse_word(text)


def parse_word(text: str) -> CatalanWord:
    tokens = []
    for i, raw in enumerate(text.split()):
        m = _TOKEN_RE.match(raw)
        if not m:
            raise CatalanDecodeError(f"bad token {raw!r}", i)
        tokens.append(CatalanToken(m.group(1) == "(", int(m.group(2)) if m.group(2) else None))
    return CatalanWord(tuple(tokens))


def compare(w1: CatalanWord, w2: CatalanWord) -> Ordering:
    k1, k2 = w1.sort_key(), w2.sort_key()
    if k1 < k2:
        return Ordering.LT
    if k1 > k2:
        return Ordering.GT
    return Ordering.EQ


def edge_labels(f: OrderEmbedding) -> list[Optional[int]]:
    """Label of each codomain edge, indexed by the edge's upper vertex."""
    dom, cod = f.domain, f.codomain
    labels: list[Optional[int]] = [None] * cod.n_vertices
    for x in range(1, dom.n_vertices):
        label = dom.depths[dom.parent[x]]
        c, stop = f.map[x], f.map[dom.parent[x]]
        while c != stop:
            if labels[c] is not None and labels[c] != label:
                raise LabelConflictError(f"edge above vertex {c} labelled {labels[c]} and {label} by {f}")
            labels[c] = label
            c = cod.parent[c]
    return labels


def _walk(t: PlanarRootedTree):
    # Yields (vertex, going_up) for every edge traversal of a left-to-right walk.
    stack = [(c, True) for c in reversed(t.children[0])]
    while stack:
        v, up = stack.pop()
        yield v, up
        if up:
            stack.append((v, False))
            stack.extend((c, True) for c in reversed(t.children[v]))


def encode(f: OrderEmbedding) -> CatalanWord:
    labels = edge_labels(f)
    return CatalanWord(tuple(CatalanToken(up, labels[v]) for v, up in _walk(f.codomain)))


def decode(w: CatalanWord | str) -> OrderEmbedding:
    """Rebuild the PT-morphism whose Catalan word is ``w``.

    The codomain comes from the bracket row. The labelled edges span the
    image; a labelled vertex is the image of a domain vertex exactly when
    the label changes above it or nothing labelled sits above it.
    """
    if isinstance(w, str):
        w = parse_word(w)
    try:
        cod = parse_brackets(w.p)
    except BracketParseError as exc:
        raise CatalanDecodeError("unbalanced bracket row", exc.offset) from None

    labels: list[Optional[int]] = [None] * cod.n_vertices
    up_index = [0] * cod.n_vertices
    for i, (tok, (v, up)) in enumerate(zip(w.tokens, _walk(cod))):
        if up:
            labels[v] = tok.label
            up_index[v] = i
        elif tok.label != labels[v]:
            raise CatalanDecodeError("closing label differs from opening label", i)

    for v in range(1, cod.n_vertices):
        p = cod.parent[v]
        if labels[v] is not None and p != 0 and labels[p] is None:
            raise CatalanDecodeError("labelled edge not connected to the root", up_index[v])

    images = [0]
    for v in range(1, cod.n_vertices):
        if labels[v] is None:
            continue
        above = [labels[c] for c in cod.children[v] if labels[c] is not None]
        if not above or any(a != labels[v] for a in above):
            images.append(v)

    image_set = set(images)
    children: dict[int, list[int]] = {v: [] for v in images}
    for v in images[1:]:
        p = cod.parent[v]
        while p not in image_set:
            p = cod.parent[p]
        children[p].append(v)
    dom, relabel = PlanarRootedTree.from_children_map(children)
    if list(relabel) != images:
        raise CatalanDecodeError("label runs do not assemble into a tree", 0)
    f = OrderEmbedding(dom, cod, tuple(images), Category.PT)
    if not is_morphism(dom, cod, f.map, Category.PT):
        raise CatalanDecodeError("label runs do not form an order embedding", 0)
    try:
        again = encode(f)
    except LabelConflictError:
        raise CatalanDecodeError("label runs do not form an order embedding", 0) from None
    for i, (a, b) in enumerate(zip(again.tokens, w.tokens)):
        if a != b:
            raise CatalanDecodeError("label inconsistent with domain depth", i)
    return f
