from __future__ import annotations

import itertools

import pytest

from semibounds import plane as P
from semibounds.errors import (
    ChainAmbiguity,
    CompletionFails,
    MultiplicityVectorMissing,
    NoConductor,
    NotAdditivelyClosed,
    NotContained,
    NotGoodIdeal,
    NotMinClosed,
    OracleTooLarge,
)

GS = P.GoodSemigroupPlane.from_small_elements


@pytest.fixture(scope="module")
def cusps():
    return P.two_cusps_semigroup()


def diagonal():
    return GS([(0, 0), (1, 1)], (1, 1))


def small_family():
    return [
        P.GoodSemigroupPlane.natural(),
        diagonal(),
        GS([(0, 0), (1, 2), (2, 3)], (2, 3)),
        GS([(0, 0), (2, 2), (2, 4), (4, 2), (4, 4)], (4, 4)),
        GS([(0, 0), (2, 2)], (2, 2)),
        P.two_cusps_semigroup(),
    ]


def test_validation_of_figure_semigroup(cusps):
    assert cusps.conductor == (6, 6)
    # points given beyond the conductor are clamped
    pts = [(0, 0), (3, 3), (3, 4), (4, 3), (4, 4)]
    pts += [(x, y) for x in (3, 4) for y in range(6, 10)] + [(y, x) for x in (3, 4) for y in range(6, 10)]
    pts += [(x, y) for x in range(6, 10) for y in range(6, 10)]
    assert GS(pts, (6, 6)) == cusps
    for p in [(3, 9), (9, 3), (7, 7), (4, 4), (0, 0)]:
        assert p in cusps
    for p in [(5, 5), (3, 5), (0, 3), (1, 1), (5, 9)]:
        assert p not in cusps
    p1, p2 = cusps.projections
    assert p1.minimal_generators == (3, 4) == p2.minimal_generators


def test_trivial_semigroups():
    N2 = GS([(0, 0)], (0, 0))
    assert N2 == P.GoodSemigroupPlane.natural()
    assert (5, 0) in N2
    D = diagonal()
    assert (1, 1) in D and (0, 1) not in D and (3, 2) in D


def test_validation_errors():
    with pytest.raises(NotMinClosed):
        GS([(0, 0), (1, 2), (2, 1), (2, 2)], (2, 2))
    with pytest.raises(CompletionFails):
        GS([(0, 0), (2, 2), (2, 3), (3, 3)], (3, 3))
    with pytest.raises(NotAdditivelyClosed):
        GS([(0, 0), (2, 2), (5, 5)], (5, 5))
    with pytest.raises(NoConductor):
        GS([(0, 0), (1, 1)], (2, 2))


def test_projections_have_bounded_conductors():
    for S in small_family():
        for i, proj in enumerate(S.projections):
            assert proj.conductor <= S.conductor[i]


def test_intersections_and_translations():
    D = diagonal()
    S = P.semigroup_ideal(D)
    shifted = P.translate(S, (1, 1))
    assert P.intersect(S, shifted) == shifted
    assert P.intersect(S, P.quadrant(D, (1, 1))) == P.quadrant(D, (1, 1))
    assert P.contains_ideal(P.quadrant(D, (1, 1)), shifted)
    assert P.translate(S, (0, 0)) == S
    assert P.maximal_ideal(D) == P.quadrant(D, (1, 1))


def test_figure_distances(cusps):
    S = P.semigroup_ideal(cusps)
    C = P.conductor_ideal(cusps)
    assert P.distance(S, C) == 5
    assert P.distance(S, S) == 0
    omega = P.two_cusps_canonical(cusps)
    x_inv_c = P.translate(C, (-3, -3))
    assert P.distance(omega, P.intersect(x_inv_c, omega)) == 2


def test_not_contained(cusps):
    with pytest.raises(NotContained):
        P.distance(P.conductor_ideal(cusps), P.semigroup_ideal(cusps))


def test_unit_box_oracle():
    N2 = P.GoodSemigroupPlane.natural()
    assert P.distance_oracle(P.natural_ideal(N2), P.quadrant(N2, (1, 1))) == 2
    assert P.distance(P.natural_ideal(N2), P.quadrant(N2, (1, 1))) == 2


def test_quadrant_colength_formula():
    N2 = P.GoodSemigroupPlane.natural()
    top = P.natural_ideal(N2)
    for g in itertools.product(range(9), repeat=2):
        assert P.distance(top, P.quadrant(N2, g)) == g[0] + g[1]
    for g in [(1, 3), (2, 2), (3, 1)]:
        assert P.distance_oracle(top, P.quadrant(N2, g)) == g[0] + g[1]


def _ideal_pool(S):
    base = [P.semigroup_ideal(S), P.natural_ideal(S), P.conductor_ideal(S)]
    if S.conductor != (0, 0):
        base.append(P.maximal_ideal(S))
    pool = set(base)
    for I in base:
        for v in [(1, 0), (0, 1), (1, 1), (2, 1)]:
            pool.add(P.translate(I, v))
    pool = list(pool)
    for a, b in itertools.combinations(list(pool), 2):
        pool.append(P.intersect(a, b))
    return sorted(set(pool), key=repr)


def _within(E, F, size=6):
    lo, hi = P._common_box(E, F)
    return hi[0] - lo[0] <= size and hi[1] - lo[1] <= size


@pytest.mark.parametrize("S", small_family()[:5], ids=repr)
def test_chains_graded_and_greedy_exact(S):
    """Every interval has chains of one length, which the greedy chain finds."""
    pool = _ideal_pool(S)
    checked = 0
    for E, F in itertools.product(pool, repeat=2):
        if E != F and P.contains_ideal(E, F) and _within(E, F):
            census = P.chain_census(E, F)
            assert census.graded
            assert P.distance(E, F, check=True) == census.longest
            checked += 1
    assert checked > 0


def test_chains_graded_figure(cusps):
    S, C, M = P.semigroup_ideal(cusps), P.conductor_ideal(cusps), P.maximal_ideal(cusps)
    omega = P.two_cusps_canonical(cusps)
    for E, F in [(S, C), (M, C), (omega, S), (omega, C), (P.quadrant(cusps, (3, 3)), M)]:
        census = P.chain_census(E, F)
        assert census.graded and census.longest == P.distance(E, F, check=True)


@pytest.mark.parametrize("S", small_family()[:5], ids=repr)
def test_additivity_with_oracle(S):
    pool = _ideal_pool(S)
    count = 0
    for H, E, F in itertools.product(pool, repeat=3):
        if count >= 40:
            break
        if len({H, E, F}) == 3 and P.contains_ideal(H, E) and P.contains_ideal(E, F) and _within(H, F):
            d = P.distance_oracle
            assert d(H, F) == d(H, E) + d(E, F)
            assert P.distance(H, F) == P.distance(H, E) + P.distance(E, F)
            count += 1


def test_oracle_size_guard(cusps):
    with pytest.raises(OracleTooLarge):
        P.chain_census(P.natural_ideal(cusps), P.conductor_ideal(cusps), max_box=(4, 4))


def test_ideal_validation(cusps):
    with pytest.raises(NotGoodIdeal):
        P.ideal_from_points(cusps, [(3, 4), (4, 3), (6, 6)], (6, 6))
    assert P.ideal_from_points(cusps, [(3, 3), (6, 6)], (6, 6)).minimum == (3, 3)
    with pytest.raises(NotGoodIdeal):
        P.maximal_ideal(P.GoodSemigroupPlane.natural())


def test_invariants_figure(cusps):
    r = P.invariants_plane(cusps, 4, P.two_cusps_canonical(cusps))
    assert (r.e, r.e_c, r.length_R_c, r.len_m_xc, r.len_ker_phi, r.len_xRbar_m) == (6, 12, 5, 10, 10, 2)
    assert r.len_xRbar_m_dual == 2
    assert r.multiplicity_vector == (3, 3)
    assert r.e_c == r.len_xRbar_m + r.len_m_xc
    assert all(v.holds for v in r.verdicts)


def test_invariants_diagonal():
    r = P.invariants_plane(diagonal(), 2)
    assert (r.e, r.e_c, r.length_R_c) == (2, 2, 1)
    dimd = next(v for v in r.verdicts if v.check_id == "dimd")
    assert (dimd.lhs, dimd.rhs, dimd.equality) == (2, 2, True)


def test_natural_plane_lengths():
    N2 = P.GoodSemigroupPlane.natural()
    assert P.conductor_lengths(N2) == (0, 0)
    with pytest.raises(MultiplicityVectorMissing):
        P.invariants_plane(N2, 2)


def test_chain_ambiguity_is_an_internal_error():
    assert issubclass(ChainAmbiguity, AssertionError)


def test_json_roundtrip(tmp_path, cusps):
    import json
    rec = cusps.to_record()
    rec["canonical_ideal"] = P.two_cusps_canonical(cusps).to_record()
    path = tmp_path / "s.json"
    path.write_text(json.dumps(rec))
    S, omega = P.load_file(path)
    assert S == cusps and omega == P.two_cusps_canonical(cusps)
