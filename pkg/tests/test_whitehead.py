import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagpeak.errors import MalformedInput
from raagpeak.graph import Graph, complete
from raagpeak.whitehead import (
    Automorphism,
    Type1,
    Type2,
    apply,
    apply_cyclic,
    apply_word,
    aut_from_json,
    aut_to_json,
    check_well_defined,
    classify,
    compose,
    conjugation_by,
    enumerate_omega,
    equal_auts,
    fz,
    identity,
    images,
    in_long,
    in_short,
    inversion,
    invert,
    is_identity,
    make_type2,
    parse_aut,
    partial_conjugation,
    split_ls,
    transvection,
    type1_group,
)
from raagpeak.words import equal_classes, parse_word, reduce_word

from _util import F2, K3, L, P3, P4, T2, small_zoo

ZOO = [g for g in small_zoo() if g.n <= 4]


def img(g, aut):
    return {g.vertices[i]: " ".join(g.letter_name(c) for c in w) for i, w in enumerate(images(g, aut))}


def test_check_well_defined_examples():
    g = P4()
    assert check_well_defined(g, set(L(g, "c a")), g.parse_letter("c"))[0]
    ok, diag = check_well_defined(g, set(L(g, "a d")), g.parse_letter("a"))
    assert not ok and "condition 2" in diag and "d" in diag
    assert check_well_defined(g, set(L(g, "a")), g.parse_letter("a"))[0]
    with pytest.raises(MalformedInput):
        check_well_defined(g, set(L(g, "a a^-1")), g.parse_letter("a"))


def test_condition_one_split_component():
    # a - st(c) leaves the component {a, b}; taking a both-sided but not b is invalid
    g = Graph(["a", "b", "c"], [("a", "b")])
    ok, diag = check_well_defined(g, set(L(g, "c a a^-1")), g.parse_letter("c"))
    assert not ok and "condition 1" in diag


def test_apply_examples():
    g = Graph(["x", "a"])
    t = T2(g, "a x", "a")
    assert apply_word(g, t, parse_word(g, "x")) == tuple(L(g, "x a"))
    p4 = P4()
    triv = make_type2(p4, set(L(p4, "a b b^-1")), p4.parse_letter("a"))
    assert is_identity(p4, triv)
    w = parse_word(p4, "a b c d^-1")
    assert apply(p4, triv, w) == reduce_word(p4, w)
    assert apply(p4, identity(p4), w) == reduce_word(p4, w)


def test_invert_examples():
    g = Graph(["x", "a"])
    t = T2(g, "a x", "a")
    assert invert(g, t) == T2(g, "a^-1 x", "a^-1")
    assert invert(g, identity(g)) == identity(g)
    p4 = P4()
    inv_b = inversion(p4, "b")
    assert invert(p4, inv_b) == inv_b


def test_compose_examples():
    g = Graph(["x", "a"])
    t = T2(g, "a x", "a")
    assert is_identity(g, fz(t, T2(g, "a^-1 x", "a^-1")))
    p4 = P4()
    tba = transvection(p4, "b", "a")
    assert img(p4, tba) == {"a": "a b", "b": "b", "c": "c", "d": "d"}
    assert img(p4, fz(tba, tba))["a"] == "a b b"


def test_equal_auts_examples():
    g = P4()
    c = g.parse_letter("c")
    lhs = T2(g, "c a", "c")
    rhs = fz(conjugation_by(g, c), make_type2(g, set(g.letters) - set(L(g, "c a")), c ^ 1))
    assert equal_auts(g, lhs, rhs)
    s = inversion(g, "a")
    assert equal_auts(g, fz(s), fz(s, identity(g)))
    assert not equal_auts(g, transvection(g, "b", "a"), transvection(g, "c", "d"))


def test_classify_examples():
    g = P4()
    assert classify(g, T2(g, "c a", "c"))["long_range"]
    assert classify(g, T2(g, "b a", "b"))["short_range"]
    mixed = classify(g, T2(g, "b a d", "b"))
    assert not mixed["long_range"] and not mixed["short_range"]


def test_split_examples():
    g = P4()
    s, l = split_ls(g, T2(g, "b a d", "b"))
    assert s == T2(g, "b a", "b") and l == T2(g, "b d", "b")
    s, l = split_ls(g, T2(g, "c a", "c"))
    assert is_identity(g, s) and l == T2(g, "c a", "c")
    s, l = split_ls(g, T2(g, "b a", "b"))
    assert s == T2(g, "b a", "b") and is_identity(g, l)


def test_constructors():
    g = P4()
    assert transvection(g, "b", "a") == T2(g, "b a", "b")
    with pytest.raises(MalformedInput):
        transvection(g, "a", "d")
    # the only component of P4 minus st(b) is {d}
    assert partial_conjugation(g, "b", {"d"}) == T2(g, "b d d^-1", "b")
    with pytest.raises(MalformedInput):
        partial_conjugation(g, "b", {"c", "d"})
    b = g.parse_letter("b")
    assert conjugation_by(g, b).A == frozenset(set(g.letters) - {b ^ 1}) - g.lkl(b)


def test_enumerate_counts():
    assert len(enumerate_omega(Graph(["x"]))) == 2
    g = P4()
    assert len(type1_group(g)) == 32
    assert len(enumerate_omega(g, "type1")) == 32
    k3 = K3()
    for t in enumerate_omega(k3, "long"):
        if isinstance(t, Type2):
            assert is_identity(k3, t) or equal_auts(k3, t, conjugation_by(k3, t.a))


def test_enumeration_is_deduplicated():
    for g in ZOO:
        om = enumerate_omega(g, "all")
        assert len({images(g, t) for t in om}) == len(om)


@pytest.mark.parametrize("g", ZOO, ids=lambda g: "-".join(g.vertices) + f"-{len(g.edges)}")
def test_inverse_undoes_every_generator(g):
    import random
    rnd = random.Random(1)
    for t in enumerate_omega(g, "all"):
        assert is_identity(g, fz(invert(g, t), t))
        for _ in range(3):
            w = tuple(rnd.choice(list(g.letters)) for _ in range(rnd.randint(0, 6)))
            assert apply_word(g, invert(g, t), apply_word(g, t, w)) == reduce_word(g, w)


@pytest.mark.parametrize("g", ZOO, ids=lambda g: "-".join(g.vertices) + f"-{len(g.edges)}")
def test_split_property(g):
    for t in enumerate_omega(g, "all"):
        if isinstance(t, Type2):
            s, l = split_ls(g, t)
            assert in_short(g, s) and in_long(g, l)
            assert equal_auts(g, fz(s, l), t)


@pytest.mark.parametrize("g", ZOO, ids=lambda g: "-".join(g.vertices) + f"-{len(g.edges)}")
def test_images_of_commuting_generators_commute(g):
    for t in enumerate_omega(g, "all"):
        im = images(g, t)
        for x in range(g.n):
            for y in range(g.n):
                if g.adj[x, y]:
                    assert reduce_word(g, im[x] + im[y]) == reduce_word(g, im[y] + im[x])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ZOO).flatmap(lambda g: st.tuples(
    st.just(g),
    st.integers(0, 10 ** 6),
    st.lists(st.integers(0, 2 * g.n - 1), max_size=6).map(tuple),
    st.integers(0, 2 * g.n - 1))))
def test_apply_respects_conjugacy(data):
    g, k, w, c = data
    om = enumerate_omega(g, "all")
    t = om[k % len(om)]
    assert equal_classes(g, apply_cyclic(g, t, w), apply_cyclic(g, t, (c,) + w + (c ^ 1,)))


def test_json_round_trip():
    g = P4()
    for t in [T2(g, "c a", "c"), inversion(g, "b"), type1_group(g)[17]]:
        assert aut_from_json(g, json.loads(json.dumps(aut_to_json(g, t)))) == t
    f = fz(T2(g, "c a", "c"), inversion(g, "d"))
    assert aut_from_json(g, aut_to_json(g, f)) == f
    a = compose(g, f)
    assert isinstance(aut_from_json(g, aut_to_json(g, a)), Automorphism)
    assert parse_aut(g, '{"type":"type2","multiplier":"c","set":["c","a"]}') == T2(g, "c a", "c")
    with pytest.raises(MalformedInput):
        parse_aut(g, '{"type":"type2","multiplier":"a","set":["a","d"]}')
    with pytest.raises(MalformedInput):
        parse_aut(g, "not json")


def test_type1_validation():
    g = P3()
    from raagpeak.whitehead import make_type1
    with pytest.raises(MalformedInput):
        make_type1(g, [2, 3, 0, 1, 4, 5])  # swaps a and b, breaks adjacency
    assert isinstance(make_type1(g, [4, 5, 2, 3, 0, 1]), Type1)


def test_k3_type1_group_size():
    assert len(type1_group(complete(["p", "q", "r"]))) == 6 * 8
