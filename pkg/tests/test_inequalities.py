from __future__ import annotations

import random

from naive import random_generators
from semibounds.inequalities import (
    CHECK_IDS,
    InequalityVerdict,
    ag_bookkeeping,
    check_all,
    equality_analysis,
    evaluate,
)
from semibounds.semigroup import NumericalSemigroup


def S(*gens):
    return NumericalSemigroup.from_generators(gens)


def by_id(T):
    return {v.check_id: v for v in check_all(T)}


def test_bookkeeping_almost_symmetric_example():
    bk = ag_bookkeeping(S(7, 9, 11, 19))
    assert (bk.len_m_xc, bk.len_xRbar_m, bk.len_ker_phi, bk.e_c) == (18, 7, 30, 25)


def test_verdict_values():
    v = by_id(S(7, 9, 11, 19))
    assert (v["wilf"].lhs, v["wilf"].rhs) == (25, 48)
    assert (v["lech"].lhs, v["lech"].rhs) == (25, 84)
    assert (v["depth"].lhs, v["depth"].rhs) == (4, 12)
    v = by_id(S(17, 27, 29))
    assert (v["wilf"].lhs, v["wilf"].rhs) == (158, 222)
    v = by_id(S(7, 9, 11, 15))
    assert (v["wilf"].lhs, v["wilf"].rhs) == (20, 32)
    assert all(x.holds for x in v.values())


def test_full_monoid_all_hold():
    v = by_id(S(1))
    assert set(v) == set(CHECK_IDS)
    assert all(x.holds for x in v.values())
    assert v["dimd"].equality and v["lech"].equality
    eq = equality_analysis(S(1))
    assert eq.dimd_class == "full_monoid" and eq.consistent


def test_equality_cases():
    eq = equality_analysis(S(5, 6, 7, 8, 9))
    assert eq.dimd_equality and eq.dimd_class == "ordinary"
    eq = equality_analysis(S(3, 7, 8))
    assert eq.lech_equality and eq.lech_k == 2
    eq = equality_analysis(S(7, 9, 11, 19))
    assert not eq.dimd_equality and not eq.lech_equality and eq.consistent


def test_small_bookkeeping():
    bk = ag_bookkeeping(S(2, 3))
    assert (bk.len_m_xc, bk.len_xRbar_m, bk.len_ker_phi) == (2, 0, 0)


def test_ag_key_matches_wilf_difference():
    # len_ker - len_xRbar = nu n - c, so ag_key and wilf agree everywhere
    rng = random.Random(3)
    for _ in range(300):
        T = S(*random_generators(rng))
        bk = ag_bookkeeping(T)
        assert bk.len_ker_phi - bk.len_xRbar_m == T.embedding_dimension * T.n - T.conductor
        v = by_id(T)
        assert v["ag_key"].holds == v["wilf"].holds


def test_evaluate_and_csv():
    vs = evaluate(3, 3, 5, 2, 1, 2, label=(1, 2))
    assert [v.check_id for v in vs] == list(CHECK_IDS)
    assert InequalityVerdict.of("wilf", 5, 6, (7, 9)).csv_row() == "wilf,7 9,5,6,1,0"
