import pytest

from markoff import characters as ch
from markoff.errors import DiscriminantMismatch
from markoff.forms import (
    MarkoffForm,
    discriminant,
    form_u_inverse,
    form_u_scan,
    markoff_form,
    markoff_ratio_check,
    verify_minimum,
)
from markoff.tree import enumerate_numbers, iter_farey_values, sort_triple
from oracles import markoff_bfs


def test_construction_examples():
    f = markoff_form((1, 1, 1))
    assert (f.u, f.v, (f.a, f.b, f.c), discriminant(f)) == (0, 1, (1, 3, 1), 5)
    f = markoff_form((2, 1, 1))
    assert (f.u, f.v, (f.a, f.b, f.c), discriminant(f)) == (1, 1, (2, 4, -2), 32)
    f = markoff_form((5, 2, 1))
    assert (f.u, f.v, (f.a, f.b, f.c), discriminant(f)) == (2, 1, (5, 11, -5), 221)
    assert markoff_form((1, 2, 5)) == f
    with pytest.raises(ValueError):
        markoff_form((2, 3, 7))


def test_json():
    assert markoff_form((5, 2, 1)).to_json() == {
        "triple": ["5", "2", "1"], "u": "2", "v": "1", "form": ["5", "11", "-5"], "delta": "221",
    }


def test_bad_discriminant():
    f = MarkoffForm(5, 11, -4, (5, 2, 1), 2, 1)
    with pytest.raises(DiscriminantMismatch):
        discriminant(f)


def test_minimum_examples():
    for triple, m in (((5, 2, 1), 5), ((1, 1, 1), 1), ((2, 1, 1), 2)):
        rep = verify_minimum(markoff_form(triple), 50)
        assert rep.minimum == m and rep.at == (1, 0) and rep.equals_m


def test_minimum_box_brute():
    # direct double loop as the oracle
    for triple in sorted(markoff_bfs(500)):
        f = markoff_form(triple)
        best = min(abs(f(x, y)) for x in range(-12, 13) for y in range(-12, 13) if (x, y) != (0, 0))
        assert verify_minimum(f, 12).minimum == best


def test_ratio():
    for triple in ((1, 1, 1), (5, 2, 1), (29, 5, 2)):
        assert markoff_ratio_check(markoff_form(triple))


def test_discriminant_up_to_a_million():
    for rec in enumerate_numbers(10**6):
        f = markoff_form(rec.triple)
        assert discriminant(f) == 9 * rec.m**2 - 4
        assert (f.u * f.u + 1) % f.m == 0


def test_scan_and_inverse_agree():
    for t in markoff_bfs(10**5):
        m, m1, m2 = sorted(t, reverse=True)
        assert form_u_scan(m, m1, m2) == form_u_inverse(m, m1, m2)


def test_form_u_is_character():
    for (r, t, s), vals in iter_farey_values(max_level=10):
        assert markoff_form(sort_triple(*vals)).u == ch.u_of(t)
