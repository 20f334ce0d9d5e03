"""Command-line entry point: ``treecat <subcommand> ...``.

Exit status is 0 on success or a true answer, 1 when a checked property
fails or a query answers no, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources
from typing import Sequence

from .catalan import CatalanDecodeError, compare, decode, encode, parse_word
from .colimits import property_F_decomposition, pushout_universal_check
from .embeddings import Category, MorphismFormatError, OrderEmbedding, enumerate_morphisms, parse_morphism
from .groebner import MonomialSet, chain_stabilization_demo, minimize, monomial_stream
from .order import divides, good_pair_search
from .trees import BracketParseError, RootedTree, parse_brackets, planar_representations

PAPER_EXAMPLE = OrderEmbedding(
    parse_brackets("(())()"),
    parse_brackets("((((()()))())((()()())))"),
    (0, 2, 4, 8),
    Category.PT,
)


class UsageError(Exception):
    pass


def golden_word() -> str:
    return resources.files("treecat").joinpath("data/paper_example.catalan").read_text().strip()


def _tree(s: str):
    try:
        return parse_brackets(s)
    except BracketParseError as exc:
        raise UsageError(f"bad tree {s!r}: {exc}") from None


def _morphism(s: str) -> OrderEmbedding:
    try:
        return parse_morphism(s)
    except (MorphismFormatError, BracketParseError) as exc:
        raise UsageError(str(exc)) from None


def _word(s: str):
    try:
        return parse_word(s)
    except CatalanDecodeError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    cat = Category(args.cat)
    morphisms = enumerate_morphisms(_tree(args.source), _tree(args.target), cat)
    if args.count_only:
        print(json.dumps(len(morphisms)) if args.json else len(morphisms), file=out)
    elif args.json:
        print(json.dumps([str(m) for m in morphisms]), file=out)
    else:
        for m in morphisms:
            print(m, file=out)
    return 0


def cmd_encode(args, out) -> int:
    print(encode(_morphism(args.morphism)), file=out)
    return 0


def cmd_decode(args, out) -> int:
    try:
        print(decode(_word(args.word)), file=out)
    except CatalanDecodeError as exc:
        raise UsageError(f"cannot decode: {exc}") from None
    return 0


def cmd_compare(args, out) -> int:
    print(compare(_word(args.w1), _word(args.w2)), file=out)
    return 0


def cmd_divides(args, out) -> int:
    f, g = _morphism(args.f), _morphism(args.g)
    if f.domain != g.domain:
        raise UsageError("f and g must share a domain")
    h = divides(f, g)
    if h is None:
        print("NO", file=out)
        return 1
    print(f"YES {h}", file=out)
    return 0


def cmd_planar_reps(args, out) -> int:
    for t in planar_representations(RootedTree.from_brackets(args.tree)):
        print(t.brackets, file=out)
    return 0


def cmd_propf(args, out) -> int:
    _tree(args.u)
    result = property_F_decomposition(RootedTree.from_brackets(args.u), _tree(args.v))
    rhs_head = " ".join(f"rhs_{i + 1}" for i in range(result.e))
    print(f"U | V | lhs | {rhs_head} | ok", file=out)
    print(result.row(), file=out)
    return 0 if result.is_bijection else 1


def cmd_pushout_check(args, out) -> int:
    t, w = _tree(args.tree), _tree(args.probe)
    if not 0 <= args.vertex < t.n_vertices:
        raise UsageError(f"vertex {args.vertex} out of range")
    ok = pushout_universal_check(t, args.vertex, w)
    print("OK" if ok else "FAIL", file=out)
    return 0 if ok else 1


def cmd_lab_good_pairs(args, out) -> int:
    base = _tree(args.base)
    pool = monomial_stream(base, args.max_size)
    if not pool:
        raise UsageError("no morphisms within the size bound")
    rng = random.Random(args.seed)
    seq = [rng.choice(pool) for _ in range(args.len)]
    for i, f in enumerate(seq):
        print(f"SEQ {i} {f}", file=out)
    found = good_pair_search(seq)
    if found is None:
        print("BAD", file=out)
    else:
        i, j, h = found
        print(f"GOOD {i} {j}", file=out)
        print(f"WITNESS {h}", file=out)
    antichain = minimize(MonomialSet(base, tuple(seq)))
    print(f"ANTICHAIN {len(antichain.generators)}", file=out)
    return 0


def cmd_groebner_demo(args, out) -> int:
    base = _tree(args.base)
    stream = monomial_stream(base, args.cap)
    s = MonomialSet(base, tuple(stream))
    for line in minimize(s).lines():
        print(line, file=out)
    print(f"STABLE@{chain_stabilization_demo(stream, args.cap)}", file=out)
    return 0


def cmd_paper_example(args, out) -> int:
    expected = golden_word()
    word = encode(PAPER_EXAMPLE)
    print(word, file=out)
    if str(word) != expected or decode(word) != PAPER_EXAMPLE:
        print("FAIL", file=out)
        return 1
    print("OK", file=out)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="treecat", description="Rooted-tree categories, Catalan words and WQO probes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list a hom-set")
    e.add_argument("--cat", choices=[c.value for c in Category], required=True)
    e.add_argument("--from", dest="source", required=True)
    e.add_argument("--to", dest="target", required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("encode", help="Catalan word of a PT morphism")
    s.add_argument("--morphism", required=True)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="PT morphism of a Catalan word")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("compare", help="compare two Catalan words")
    s.add_argument("--w1", required=True)
    s.add_argument("--w2", required=True)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("divides", help="search for h with g = h f")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.set_defaults(func=cmd_divides)

    s = sub.add_parser("planar-reps", help="all plane structures of a rooted tree")
    s.add_argument("--tree", required=True)
    s.set_defaults(func=cmd_planar_reps)

    s = sub.add_parser("propf", help="property (F) hom-set decomposition")
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.set_defaults(func=cmd_propf)

    s = sub.add_parser("pushout-check", help="pushout universal property at a probe")
    s.add_argument("--tree", required=True)
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--probe", required=True)
    s.set_defaults(func=cmd_pushout_check)

    lab = sub.add_parser("lab", help="finite WQO experiments")
    lab_sub = lab.add_subparsers(dest="lab_command", required=True, parser_class=_Parser)
    s = lab_sub.add_parser("good-pairs", help="random sequence, first good pair")
    s.add_argument("--base", required=True)
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(func=cmd_lab_good_pairs)

    gb = sub.add_parser("groebner", help="monomial-level Gröbner demos")
    gb_sub = gb.add_subparsers(dest="groebner_command", required=True, parser_class=_Parser)
    s = gb_sub.add_parser("demo", help="ascending chain stabilization on a truncation")
    s.add_argument("--base", required=True)
    s.add_argument("--cap", type=int, required=True)
    s.set_defaults(func=cmd_groebner_demo)

    s = sub.add_parser("paper-example", help="reproduce the worked Catalan word")
    s.set_defaults(func=cmd_paper_example)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(str(exc).rstrip(), file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
