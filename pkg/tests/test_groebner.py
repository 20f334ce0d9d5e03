import random
from fractions import Fraction

import pytest

from conftest import trees_up_to
from treecat import (
    POINT,
    Category,
    FormalElement,
    MonomialSet,
    OrderEmbedding,
    antichain_check,
    build_Bn,
    chain_stabilization_demo,
    compose,
    encode,
    enumerate_morphisms,
    identity,
    leading_term,
    member,
    minimize,
    monomial_stream,
    parse_brackets,
)

P = parse_brackets
CHAIN3 = P("(())")
LOW = OrderEmbedding(P("()"), CHAIN3, (0, 1))
HIGH = OrderEmbedding(P("()"), CHAIN3, (0, 2))


def member_brute_force(s, m):
    return any(
        compose(g, h) == m
        for g in s.generators
        for h in enumerate_morphisms(g.codomain, m.codomain, Category.PT)
    )


def test_leading_term_examples():
    f, g = enumerate_morphisms(build_Bn(1), build_Bn(2), Category.PT)
    assert leading_term(FormalElement({f: 5})) == f
    assert leading_term(FormalElement({f: 3, g: 2})) == g
    assert str(encode(g)) == "(0 )0 ( )"
    with pytest.raises(ValueError):
        leading_term(FormalElement({f: 0}))


def test_leading_term_ignores_positive_scaling():
    ms = monomial_stream(build_Bn(1), 4)
    rng = random.Random(3)
    for _ in range(30):
        terms = {m: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for m in rng.sample(ms, 4)}
        e = FormalElement(terms)
        assert leading_term(e) == leading_term(e.scale(Fraction(7, 3)))


def test_formal_element_drops_zeros_and_checks_domain():
    e = FormalElement({LOW: 0, HIGH: Fraction(1, 2)})
    assert list(e.terms) == [HIGH]
    with pytest.raises(ValueError):
        FormalElement({LOW: 1, identity(POINT): 1})


def test_member_examples():
    s = MonomialSet(P("()"), (LOW,))
    assert member(s, LOW) == (LOW, identity(CHAIN3))
    assert member(MonomialSet(P("()"), (HIGH,)), LOW) is None
    assert member(MonomialSet(P("()"), (LOW,)), HIGH) is None
    with pytest.raises(ValueError):
        member(s, identity(POINT))


def test_member_point_generator_covers_everything_bigger():
    s = MonomialSet(POINT, (OrderEmbedding(POINT, P("()"), (0,)),))
    for m in monomial_stream(POINT, 6):
        found = member(s, m)
        assert (found is not None) == (m.codomain.n_vertices >= 2)


@pytest.mark.parametrize("base", [t for t in trees_up_to(3)])
def test_member_matches_brute_force(base):
    ms = monomial_stream(base, 5)
    rng = random.Random(base.n_vertices)
    for _ in range(4):
        gens = tuple(rng.sample(ms, min(3, len(ms))))
        s = MonomialSet(base, gens)
        for m in ms:
            assert (member(s, m) is not None) == member_brute_force(s, m)


def test_minimize_examples():
    assert minimize(MonomialSet(P("()"), (LOW,))).generators == (LOW,)
    h = OrderEmbedding(CHAIN3, P("((()))"), (0, 1, 2))
    assert minimize(MonomialSet(P("()"), (compose(LOW, h), LOW))).generators == (LOW,)
    anti = MonomialSet(P("()"), (LOW, HIGH))
    assert antichain_check(anti.generators)
    assert set(minimize(anti).generators) == {LOW, HIGH}


def test_minimize_idempotent_and_closure_preserving():
    for base in (POINT, build_Bn(1), CHAIN3):
        ms = monomial_stream(base, 5)
        rng = random.Random(11)
        for _ in range(5):
            s = MonomialSet(base, tuple(rng.sample(ms, min(6, len(ms)))))
            small = minimize(s)
            assert minimize(small) == small
            assert antichain_check(small.generators)
            for m in ms:
                assert (member(s, m) is None) == (member(small, m) is None)


def test_stabilization_constant_stream():
    f = enumerate_morphisms(POINT, CHAIN3, Category.PT)[0]
    assert chain_stabilization_demo([f] * 5, 3) == 1
    assert chain_stabilization_demo([], 3) == 0


def test_stabilization_reports_last_change():
    # LOW then HIGH are incomparable, then something both divide
    top = OrderEmbedding(P("()"), P("((()))"), (0, 1))
    assert chain_stabilization_demo([top, LOW, HIGH], 4) == 3


def test_stabilization_size_cap():
    with pytest.raises(ValueError):
        chain_stabilization_demo([LOW], 2)


def block_shuffled(stream, rng):
    blocks = {}
    for m in stream:
        blocks.setdefault(m.codomain.n_vertices, []).append(m)
    out = []
    for n in sorted(blocks):
        b = blocks[n][:]
        rng.shuffle(b)
        out.extend(b)
    return out


def test_b1_final_set_order_independent():
    stream = monomial_stream(build_Bn(1), 5)
    base_set = set(minimize(MonomialSet(build_Bn(1), tuple(stream))).generators)
    for seed in range(3):
        shuffled = block_shuffled(stream, random.Random(seed))
        assert set(minimize(MonomialSet(build_Bn(1), tuple(shuffled))).generators) == base_set
        assert chain_stabilization_demo(shuffled, 5) == chain_stabilization_demo(stream, 5)
