import random
from fractions import Fraction

import pytest

from markoff.errors import NotFareyPair, ZeroDenominator
from markoff.farey import INF, ONE, ZERO, Slope, farey_level, sorted_slopes
from markoff.matrix import (
    A,
    B,
    IDENTITY,
    Mat2,
    alt_markoff_matrix,
    alt_structure_ok,
    commutator,
    commutator_trace,
    fricke_check,
    mat_inv,
    mat_mul,
    markoff_matrix,
    rho,
    structure_check,
    trace,
)
from markoff.tree import markoff_number
from oracles import mediant_table
from reference import MATRICES

S = Slope.parse


def test_basic_ops():
    assert mat_mul(A, B) == Mat2(3, 4, 2, 3)
    assert mat_inv(A) == Mat2(1, -1, -1, 2)
    assert trace(Mat2(3, 4, 2, 3)) == 6
    assert A @ mat_inv(A) == IDENTITY
    assert Mat2(1, 2, 3, 4).to_json() == [["1", "2"], ["3", "4"]]


def test_reference_matrices():
    for t, want in MATRICES.items():
        assert markoff_matrix(S(t)) == Mat2(*want)
    assert markoff_matrix(ZERO) == A and markoff_matrix(INF) == A @ B


def test_matches_mediant_oracle():
    table, _ = mediant_table(12)
    for key, (_, M) in table.items():
        assert markoff_matrix(Slope(*key)) == Mat2(*M)


def test_fricke():
    res = fricke_check(A, A @ B)
    assert res.ok and res.commutator_trace == -2 and res.markoff_identity
    # [[-7,6],[-6,5]] is the commutator of the generators A, B; the
    # commutator of M_{0/1} = A and M_{1/0} = AB has the same trace
    assert commutator(A, B) == Mat2(-7, 6, -6, 5)
    assert commutator(A, A @ B) == Mat2(-37, 54, -24, 35)
    res = fricke_check(IDENTITY, IDENTITY)
    assert res.sum_identity and res.commutator_identity
    assert res.commutator_trace == 2 and res.markoff_identity is None


def test_fricke_random_unimodular():
    rng = random.Random(11)
    gens = [Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1)]

    def word():
        m = IDENTITY
        for _ in range(rng.randrange(1, 12)):
            m = m @ rng.choice(gens)
        return m

    for _ in range(300):
        res = fricke_check(word(), word())
        assert res.sum_identity and res.commutator_identity


def test_commutator_trace():
    assert commutator_trace(ZERO, INF) == -2
    assert commutator_trace(ZERO, ONE) == -2
    assert commutator_trace(S("1/2"), ONE) == -2
    with pytest.raises(NotFareyPair):
        commutator_trace(S("1/3"), S("2/3"))


def test_commutator_all_pairs():
    row = sorted_slopes(10)
    for r, s in zip(row, row[1:]):
        assert commutator_trace(r, s) == -2
        assert markoff_matrix(r) @ markoff_matrix(s) != markoff_matrix(s) @ markoff_matrix(r)


def test_structure_examples():
    assert structure_check(S("1/2")).ok
    assert structure_check(S("2/1")).ok
    assert structure_check(INF).ok
    rep = structure_check(ZERO)
    # M_{0/1} = [[2,1],[1,1]] has a > b; closed form, ratios and trace rule hold
    assert rep.formula and rep.ratios and rep.trace_rule
    assert rep.failures == ("a<=b",)


def test_structure_off_roots():
    for t in sorted_slopes(12):
        if t.is_root():
            continue
        assert structure_check(t).ok, t


def test_entries_positive_det_one():
    for t in sorted_slopes(12):
        M = markoff_matrix(t)
        assert M.det == 1 and min(M) > 0
        assert trace(M) == 3 * M.c == 3 * markoff_number(t)


def test_rho():
    assert rho(A) == Fraction(2)
    assert rho(A @ B) == Fraction(3, 2)
    assert rho(markoff_matrix(S("1/2"))) == Fraction(21, 13)
    with pytest.raises(ZeroDenominator):
        rho(Mat2(1, 0, 0, 1))


def test_rho_decreasing_and_distinct():
    row = sorted_slopes(10)
    mats = [markoff_matrix(t) for t in row]
    rhos = [rho(M) for M in mats]
    assert all(a > b for a, b in zip(rhos, rhos[1:]))
    assert len(set(mats)) == len(mats)


def test_alt_matrices():
    assert alt_markoff_matrix(ZERO) == Mat2(2, 1, 1, 1)
    assert alt_markoff_matrix(INF) == Mat2(5, 2, 2, 1)
    assert alt_markoff_matrix(ONE) == Mat2(12, 5, 7, 3)
    for t in sorted_slopes(9):
        assert alt_structure_ok(t), t
