"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines (they are
also written when output is captured).
"""
from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

from semibounds import NumericalSemigroup
from semibounds import enumeration as E
from semibounds import ideals as I
from semibounds import plane as P
from semibounds.classify import wilf_generator_exists
from semibounds.inequalities import ag_bookkeeping, check_all
from semibounds.parametrization import load_parametrization, from_parametrization

from naive import KNOWN_COUNTS, random_generators
from test_plane import small_family

MAX_GENUS = 30


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            dt = time.perf_counter() - t0
            ok = ok and dt < limit
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({dt:.2f} s, limit {limit:g} s)")
        assert dt < limit, f"took {dt:.1f} s, limit {limit} s"

    return run


def S(*gens):
    return NumericalSemigroup.from_generators(gens)


def test_criterion_1_numerical_fixtures(criterion):
    with criterion(1, "numerical semigroup fixtures", 1.0):
        T = S(7, 9, 11, 19)
        r = E.full_report(T)
        book = ag_bookkeeping(T)
        assert (r.e, r.nu, r.conductor, r.n) == (7, 4, 25, 12)
        assert book.e_c == 25
        assert r.flags["almost_symmetric"]
        assert I.canonical_ideal(T) == I.ideal_from_generators(T, [0, 12])
        assert (book.len_m_xc, book.len_ker_phi, book.len_xRbar_m) == (18, 30, 7)

        r = E.full_report(S(7, 9, 11, 13))
        assert (r.n, r.nu, r.conductor) == (8, 4, 20)
        assert r.flags["positioned"] and not r.flags["almost_symmetric"]
        assert wilf_generator_exists(S(7, 9, 11, 13)) == (True, 9)

        T = S(17, 27, 29)
        r = E.full_report(T)
        assert (r.n, r.nu, r.conductor) == (74, 3, 158)
        assert r.flags["positioned"] and not r.flags["wilf_generator"]
        wilf = next(v for v in check_all(T) if v.check_id == "wilf")
        assert (wilf.lhs, wilf.rhs, wilf.holds) == (158, 222, True)

        T = S(7, 9, 11, 15)
        r = E.full_report(T)
        assert (r.n, r.nu, r.conductor) == (8, 4, 20)
        assert not r.flags["positioned"]
        wilf = next(v for v in check_all(T) if v.check_id == "wilf")
        assert (wilf.lhs, wilf.rhs, wilf.holds) == (20, 32, True)


def test_criterion_2_good_semigroup_fixtures(criterion, tmp_path):
    from pathlib import Path

    data = Path(__file__).resolve().parent.parent / "data"
    with criterion(2, "two-branch good semigroup fixtures", 5.0):
        cusps, omega = P.load_file(data / "two_cusps.json")
        r = P.invariants_plane(cusps, 4, omega)
        assert (r.e, r.e_c, r.length_R_c) == (6, 12, 5)
        assert (r.len_m_xc, r.len_ker_phi, r.len_xRbar_m) == (10, 10, 2)
        x_inv_c = P.translate(P.conductor_ideal(cusps), (-3, -3))
        assert P.distance(omega, P.intersect(x_inv_c, omega), check=True) == 2
        assert r.len_xRbar_m_dual == 2

        gens, N = load_parametrization(data / "param_t_u2.json")
        r = P.invariants_plane(from_parametrization(gens, N), 3)
        assert (r.e, r.e_c, r.length_R_c) == (3, 5, 2)


def test_criterion_3_census_against_brute_force(criterion):
    with criterion(3, "tree census equals brute force for genus <= 10", 30.0):
        tree = E.enumerate_by_genus(10).counts["total"]
        brute = E.brute_force_census(10)
        assert tree == brute == KNOWN_COUNTS[:11]


def _divisors(g):
    return sum(1 for d in range(1, g + 1) if g % d == 0)


def test_criterion_4_sweeps(criterion, capsys):
    with criterion(4, f"inequality sweeps to genus {MAX_GENUS}", 300.0):
        full = E.sweep(MAX_GENUS)
        assert full.counts["total"] == KNOWN_COUNTS[: MAX_GENUS + 1]
        for check in ("abhyankar", "dimd", "cor13_strong", "cor13_weak", "lech", "depth"):
            assert full.violation_count(check) == 0, check
        assert full.inconsistency_count() == 0
        # full monoid at genus 0, one ordinary semigroup per positive genus
        assert full.counts["dimd_equality"] == [1] * (MAX_GENUS + 1)
        # S_k of genus g <-> k (e - 1) = g
        lech_family = [1] + [_divisors(g) for g in range(1, MAX_GENUS + 1)]
        assert full.counts["lech_equality"] == full.counts["lech_extremal"] == lech_family

        for name in ("almost-symmetric", "wilf-generator"):
            part = E.sweep(MAX_GENUS, checks=("wilf", "ag_key"), filter=name)
            key = name.replace("-", "_")
            assert part.counts["checked"] == full.counts[key]
            assert part.violation_count("wilf") == 0, name
            assert part.violation_count("ag_key") == 0, name
            assert part.inconsistency_count() == 0

        wilf_all = full.violation_count("wilf")
        assert full.violation_count("ag_key") == wilf_all
        with capsys.disabled():
            print(f"\n  wilf over all {sum(full.counts['total'])} semigroups of genus <= {MAX_GENUS}: "
                  f"{wilf_all} violations")
        assert wilf_all == 0, "a Wilf counterexample: see violation_witnesses['wilf']"


def test_criterion_5_property_suites(criterion):
    with criterion(5, "duality, chain-length and parallel determinism properties", 600.0):
        rng = random.Random(2024)
        n_ideals = 0
        for _ in range(50):
            T = S(*random_generators(rng, 3, 20))
            omega = I.canonical_ideal(T)
            M = I.maximal_ideal(T)
            for _ in range(10):
                J = I.ideal_from_generators(T, rng.sample(range(-8, 20), rng.randint(1, 3)))
                assert I.difference(omega, I.difference(omega, J)) == J
                K = I.add(J, M) if rng.random() < 0.5 else I.intersect(J, I.translate(J, rng.randint(1, 9)))
                assert I.length_between(J, K) == I.length_between(I.difference(omega, K), I.difference(omega, J))
                n_ideals += 1
        assert n_ideals == 500

        # every good ideal between the conductor ideal and N^2 (box <= (6, 6))
        for T in small_family():
            top = P.natural_ideal(T)
            bottom = P.conductor_ideal(T) if T.conductor != (0, 0) else P.quadrant(T, (6, 6))
            census = P.chain_census(top, bottom, max_box=(6, 6), keep=True)
            assert census.graded
            for G, rank in census.ranked:
                assert P.distance(G, bottom, check=True) == rank
                assert P.distance(top, G, check=True) == census.longest - rank

        one = E.sweep(20, workers=1).to_json()
        assert E.sweep(20, workers=2).to_json() == one
        assert E.sweep(20, workers=3, frontier_genus=10).to_json() == one
