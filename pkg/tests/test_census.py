"""Structure censuses by invariant value, closed forms, and bordism classes."""

import pytest

from pinforms import (
    FLAG_CONFIRMED,
    FLAG_CONJECTURED_CONFIRMED,
    FLAG_DISPUTED,
    THEORY_PIN_MINUS,
    THEORY_SPIN,
    Enhancement,
    LimitError,
    Refinement,
    bordism_class,
    cobordant,
    hyperbolic_form,
    identity_form,
    nonorientable_surface,
    orientable_surface,
    pin_census_closed_form,
    pin_census_enumerated,
    pin_census_recursive,
    reference_census,
)

# exhaustively enumerated counts of enhancements by Brown invariant
ENUMERATED = {
    "N:1": {1: 1, 7: 1},
    "N:2": {0: 2, 2: 1, 6: 1},
    "N:3": {1: 3, 3: 1, 5: 1, 7: 3},
    "N:4": {0: 6, 2: 4, 4: 2, 6: 4},
    "S:1": {0: 3, 4: 1},
    "S:2": {0: 10, 4: 6},
}


def surface_for(label):
    kind, genus = label.split(":")
    if kind == "S":
        return orientable_surface(int(genus))
    return nonorientable_surface(int(genus))


@pytest.mark.parametrize("label", sorted(ENUMERATED))
def test_enumerated_census(label):
    assert pin_census_enumerated(surface_for(label)) == ENUMERATED[label]


def test_enumeration_limit():
    with pytest.raises(LimitError):
        pin_census_enumerated(nonorientable_surface(8), limit=6)


def test_recursive_census_matches_enumeration():
    for k in range(1, 11):
        assert pin_census_recursive(k) == pin_census_enumerated(nonorientable_surface(k))


def test_recursive_census_rejects_zero():
    with pytest.raises(ValueError):
        pin_census_recursive(0)


def test_census_totals():
    for k in range(1, 13):
        assert sum(pin_census_recursive(k).values()) == 1 << k


def test_reference_census_beyond_enumeration_uses_recursion():
    k = 6
    ref = reference_census(nonorientable_surface(k), limit=4)
    assert ref == pin_census_recursive(k)


def test_closed_form_orientable_confirmed():
    for g in (1, 2, 3):
        entries = pin_census_closed_form(orientable_surface(g))
        assert [e.invariant for e in entries] == [0, 4]
        assert all(e.flag == FLAG_CONFIRMED for e in entries)
        assert entries[0].formula_count - entries[1].formula_count == 1 << g


def test_closed_form_odd_genus_confirmed():
    for k in (1, 3, 5, 7):
        entries = pin_census_closed_form(nonorientable_surface(k))
        assert [e.invariant for e in entries] == [1, 3, 5, 7]
        assert all(e.flag == FLAG_CONFIRMED for e in entries)


def test_closed_form_klein_bottle_disputed_at_zero():
    entries = {e.invariant: e for e in pin_census_closed_form(nonorientable_surface(2))}
    zero = entries[0]
    assert zero.formula_count == 1
    assert zero.reference_count == 2
    assert zero.flag == FLAG_DISPUTED
    assert zero.corrected_count == 2
    assert zero.corrected_flag == FLAG_CONJECTURED_CONFIRMED
    for invariant in (2, 4, 6):
        assert entries[invariant].flag == FLAG_CONFIRMED
        assert entries[invariant].corrected_count is None


def test_closed_form_even_genus_pattern():
    for k in (4, 6, 8):
        entries = {e.invariant: e for e in pin_census_closed_form(nonorientable_surface(k))}
        zero = entries[0]
        assert zero.formula_count == 1 << ((3 * k - 6) // 2)
        assert zero.flag == FLAG_DISPUTED
        assert zero.corrected_count == (1 << (k - 2)) + (1 << ((k - 2) // 2))
        assert zero.corrected_flag == FLAG_CONJECTURED_CONFIRMED
        for invariant in (2, 6):
            assert entries[invariant].formula_count == 1 << (k - 2)
            assert entries[invariant].flag == FLAG_CONFIRMED
        assert entries[4].flag == FLAG_CONFIRMED


def test_bordism_class_spin():
    s = orientable_surface(1)
    q = Refinement(s.form, (1, 1))
    cls = bordism_class(s, q)
    assert cls.theory == THEORY_SPIN
    assert cls.value == 1


def test_bordism_class_pin_minus():
    n = nonorientable_surface(2)
    e = Enhancement(n.form, (1, 1))
    cls = bordism_class(n, e)
    assert cls.theory == THEORY_PIN_MINUS
    assert cls.value == 2


def test_bordism_class_validation():
    s = orientable_surface(1)
    n = nonorientable_surface(2)
    with pytest.raises(ValueError):
        bordism_class(s, Refinement(hyperbolic_form(2), (0,) * 4))
    with pytest.raises(ValueError):
        bordism_class(n, Enhancement(identity_form(3), (1, 1, 1)))


def test_cobordant_pairs():
    n2 = nonorientable_surface(2)
    a = (n2, Enhancement(n2.form, (1, 3)))
    b = (n2, Enhancement(n2.form, (3, 1)))
    c = (n2, Enhancement(n2.form, (1, 1)))
    assert cobordant(a, b)
    assert not cobordant(a, c)

    # same invariant across different surfaces is still cobordant
    n1 = nonorientable_surface(1)
    n3 = nonorientable_surface(3)
    d = (n1, Enhancement(n1.form, (1,)))
    e = (n3, Enhancement(n3.form, (3, 1, 1)))
    assert cobordant(d, e)


def test_cobordant_rejects_mixed_theories():
    s = orientable_surface(1)
    n = nonorientable_surface(1)
    with pytest.raises(ValueError):
        cobordant((s, Refinement(s.form, (0, 0))), (n, Enhancement(n.form, (1,))))
