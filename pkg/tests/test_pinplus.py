"""Mod-2 quadratic functions on mod-4 homology and their existence pattern."""

import itertools

import pytest

from pinforms import (
    Mod4Homology,
    PinPlusForm,
    enumerate_pinplus,
    identity_form,
    is_well_defined,
    mod4_homology,
    nonorientable_surface,
    orientable_surface,
)


def test_mod4_homology_presentations():
    s = mod4_homology(orientable_surface(2))
    assert s.generator_count == 4
    assert s.relations == ()

    n = mod4_homology(nonorientable_surface(3))
    assert n.generator_count == 3
    assert n.relations == ((2, 2, 2),)


def test_relation_validation():
    with pytest.raises(ValueError):
        Mod4Homology(identity_form(2), ((2,),))
    with pytest.raises(ValueError):
        Mod4Homology(identity_form(2), ((1, 2),))


def test_value_validation():
    model = mod4_homology(nonorientable_surface(2))
    with pytest.raises(ValueError):
        PinPlusForm(model, (0,))
    with pytest.raises(ValueError):
        PinPlusForm(model, (0, 2))


def test_evaluation_doubling_and_tripling_rules():
    model = mod4_homology(nonorientable_surface(2))
    for values in itertools.product((0, 1), repeat=2):
        q = PinPlusForm(model, values)
        for i, gen in enumerate([(1, 0), (0, 1)]):
            double = tuple(2 * c for c in gen)
            triple = tuple(3 * c for c in gen)
            # q(2v) = v.v and q(3v) = q(v) + v.v; core classes have v.v = 1
            assert q(double) == 1
            assert q(triple) == (q(gen) + 1) % 2


def test_evaluation_defining_identity_on_disjoint_supports():
    # for classes x, y supported on different generators the stepwise
    # evaluation gives q(x + y) = q(x) + q(y) + x.y directly
    model = mod4_homology(nonorientable_surface(4))
    q = PinPlusForm(model, (1, 0, 1, 0))
    x = (1, 2, 0, 0)
    y = (0, 0, 3, 1)
    xy = tuple((a + b) % 4 for a, b in zip(x, y))
    form = model.form
    xm2 = sum(1 << i for i, c in enumerate(x) if c % 2)
    ym2 = sum(1 << i for i, c in enumerate(y) if c % 2)
    assert q(xy) == (q(x) + q(y) + form.pairing_bits(xm2, ym2)) % 2


def test_odd_genus_has_no_structures():
    for k in (1, 3, 5):
        assert enumerate_pinplus(nonorientable_surface(k)) == []


def test_odd_genus_witness_is_the_relation():
    model = mod4_homology(nonorientable_surface(3))
    verdict = is_well_defined(PinPlusForm(model, (0, 0, 0)))
    assert not verdict.ok
    assert verdict.relation == (2, 2, 2)


def test_even_genus_counts():
    assert len(enumerate_pinplus(nonorientable_surface(2))) == 4
    assert len(enumerate_pinplus(nonorientable_surface(4))) == 16
    assert len(enumerate_pinplus(nonorientable_surface(6))) == 64


def test_orientable_counts():
    assert len(enumerate_pinplus(orientable_surface(1))) == 4
    assert len(enumerate_pinplus(orientable_surface(2))) == 16


def test_relation_value_is_genus_parity():
    for k in range(1, 9):
        model = mod4_homology(nonorientable_surface(k))
        q = PinPlusForm(model, (0,) * k)
        assert q((2,) * k) == k % 2


def test_coefficient_validation():
    model = mod4_homology(nonorientable_surface(2))
    q = PinPlusForm(model, (0, 0))
    with pytest.raises(ValueError):
        q((4, 0))
    with pytest.raises(ValueError):
        q((1,))
