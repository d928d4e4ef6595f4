import itertools

import pytest

from raagpeak.errors import MalformedInput
from raagpeak.p4lab import (
    formula_class,
    homomorphism_check,
    image_formula_check,
    level_orbit_check,
    partial_conjugations_are_inner,
    phi,
    phi_images,
    phi_matches_images,
    p4,
    stabilizer_scan,
    w_class,
)
from raagpeak.whitehead import Type2, apply_tuple, is_identity
from raagpeak.words import format_word, parse_tuple


def test_phi_images_examples():
    g = p4()
    aut = phi_images(1, 0, 0, 0)
    assert format_word(g, aut.images[0]) == "a b"
    assert format_word(g, phi_images(0, 0, 0, 1).images[3]) == "c d"
    assert is_identity(g, phi(0, 0, 0, 0))
    assert all(isinstance(t, Type2) and len(t.A) == 2 for t in phi(1, -2, 1, 3).factors)


def test_w_class():
    g = p4()
    assert w_class(2) == parse_tuple(g, "a d d")


def test_formula_examples():
    g = p4()
    assert formula_class(2, 0, 0, 0, 0) == w_class(2)
    assert formula_class(2, 1, 0, 0, 0) == parse_tuple(g, "a b d d")
    assert formula_class(2, 0, -2, 0, 1) == w_class(2)


@pytest.mark.parametrize("k", [2, 3])
def test_image_formula_box(k):
    for v in itertools.product(range(-1, 2), repeat=4):
        assert image_formula_check(k, *v)


def test_phi_factorization_matches_images():
    for v in itertools.product(range(-2, 3), repeat=4):
        assert phi_matches_images(*v)


def test_homomorphism():
    for v in [(1, 0, 0, 0), (0, 1, 2, -1), (-2, 1, 1, 1)]:
        for v2 in [(0, 0, 1, 0), (1, -1, 0, 2)]:
            assert homomorphism_check(v, v2)


def test_stabilizer_scan_examples():
    assert stabilizer_scan(2, 1) == {(0, 0, 0, 0)}
    assert stabilizer_scan(2, 2) == {(0, 0, 0, 0), (0, -2, 0, 1), (0, 2, 0, -1)}
    with pytest.raises(MalformedInput):
        stabilizer_scan(1, 2)


def test_stabilizer_independent_check():
    # direct application of phi_images, without the scan's shortcut
    g = p4()
    w = w_class(2)
    for v in itertools.product(range(-2, 3), repeat=4):
        fixed = apply_tuple(g, phi_images(*v), w) == w
        assert fixed == (v[0] == v[2] == 0 and v[1] == -2 * v[3])


def test_partial_conjugations_are_inner():
    assert partial_conjugations_are_inner()


def test_level_orbit_k2():
    rep = level_orbit_check(2)
    assert rep["passed"] and rep["P_images"] == 8 and rep["low_classes"] == 8
    assert rep["moves_checked"] == rep["moves_in_P"] > 0
    with pytest.raises(MalformedInput):
        level_orbit_check(4)
