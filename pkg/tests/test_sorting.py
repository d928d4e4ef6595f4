import pytest

from raagpeak.errors import MalformedInput
from raagpeak.sorting import expand, sort_factorization, sorting_substitution
from raagpeak.whitehead import (
    Factorization,
    Type2,
    enumerate_omega,
    equal_auts,
    fz,
    in_long,
    in_short,
    inversion,
    transvection,
)

from _util import P3, P4, T2, random_factorization, rng, small_zoo

ZOO = [g for g in small_zoo() if g.n >= 2]


def test_short_only_is_unchanged():
    g = P4()
    b = transvection(g, "b", "a")
    s, l = sort_factorization(g, fz(b))
    assert s == fz(b) and l == Factorization(())


def test_type1_passes_through():
    g = P4()
    alpha = inversion(g, "a")
    beta = transvection(g, "b", "a")
    out = sorting_substitution(g, alpha, beta)
    assert equal_auts(g, out, fz(alpha, beta))
    assert in_short(g, out.factors[0]) and out.factors[1] == alpha


def test_mixed_generator_is_split():
    g = P4()
    s, l = sort_factorization(g, fz(T2(g, "b a d", "b")))
    assert s == fz(T2(g, "b a", "b")) and l == fz(T2(g, "b d", "b"))


def test_substitution_rejects_bad_inputs():
    g = P4()
    with pytest.raises(MalformedInput):
        sorting_substitution(g, transvection(g, "b", "a"), transvection(g, "b", "a"))
    with pytest.raises(MalformedInput):
        sorting_substitution(g, T2(g, "c a", "c"), T2(g, "c a", "c"))


def test_adjacent_case_on_p3():
    g = P3()
    alpha = T2(g, "a c", "a")  # c -> c a, long-range
    beta = transvection(g, "b", "a")  # a -> a b, short-range
    out = sorting_substitution(g, alpha, beta)
    assert equal_auts(g, out, fz(alpha, beta))
    kinds = ["s" if in_short(g, x) else "l" for x in out.factors]
    assert kinds == sorted(kinds, key="sl".index)


@pytest.mark.parametrize("g", ZOO, ids=lambda g: "-".join(g.vertices) + f"-{len(g.edges)}")
def test_every_substitution_is_an_identity(g):
    longs = enumerate_omega(g, "long")
    shorts = [t for t in enumerate_omega(g, "short") if isinstance(t, Type2)]
    for alpha in longs:
        for beta in shorts:
            out = sorting_substitution(g, alpha, beta)
            assert equal_auts(g, out, fz(alpha, beta))


@pytest.mark.parametrize("g", ZOO, ids=lambda g: "-".join(g.vertices) + f"-{len(g.edges)}")
def test_random_sorts(g):
    rnd = rng(17 + g.n + len(g.edges))
    for _ in range(30):
        f = random_factorization(g, rnd, "all", 6)
        s, l = sort_factorization(g, f)
        assert equal_auts(g, s + l, f)
        assert all(isinstance(x, Type2) and in_short(g, x) for x in s.factors)
        assert all(in_long(g, x) for x in l.factors)
        s2, l2 = sort_factorization(g, s + l)
        assert equal_auts(g, s2, s) and equal_auts(g, l2, l)


def test_expand_drops_trivial():
    g = P4()
    triv = T2(g, "a b b^-1", "a")
    assert expand(g, fz(triv, inversion(g, "d"))) == [inversion(g, "d")]
