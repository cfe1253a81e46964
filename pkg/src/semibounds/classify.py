"""Classifiers for almost symmetric, positioned, ordinary and Lech-extremal semigroups.

Where two characterizations of a class are available both are evaluated and
compared; a disagreement raises :class:`InternalInconsistency`.
"""
from __future__ import annotations

from typing import Optional

from .errors import FullMonoid, InternalInconsistency
from .ideals import (
    canonical_ideal,
    contains_ideal,
    difference,
    maximal_ideal,
    semigroup_ideal,
    translate,
)
from .semigroup import NumericalSemigroup


def _reflected_gaps_shifted_in(S: NumericalSemigroup, shift: int) -> bool:
    """True iff ``F - a + shift`` lies in S for every gap ``a``."""
    F = S.frobenius
    return all((F - a + shift) in S for a in S.gap_list())


def _agree(name, S, via_ideals, via_scan):
    if via_ideals != via_scan:
        raise InternalInconsistency(
            f"{name} characterizations disagree on {S!r}: ideals={via_ideals} scan={via_scan}"
        )
    return via_ideals


def is_almost_symmetric(S: NumericalSemigroup) -> bool:
    M = maximal_ideal(S)
    via_ideals = contains_ideal(difference(M, M), canonical_ideal(S))
    via_scan = all(_reflected_gaps_shifted_in(S, g) for g in S.minimal_generators)
    return _agree("almost symmetric", S, via_ideals, via_scan)


def is_positioned(S: NumericalSemigroup) -> bool:
    e = S.multiplicity
    M = maximal_ideal(S)
    via_ideals = contains_ideal(translate(M, -e), canonical_ideal(S))
    via_scan = _reflected_gaps_shifted_in(S, e)
    return _agree("positioned", S, via_ideals, via_scan)


def is_symmetric(S: NumericalSemigroup) -> bool:
    return canonical_ideal(S) == semigroup_ideal(S)


def wilf_generator_exists(S: NumericalSemigroup) -> tuple[bool, Optional[int]]:
    """Smallest minimal generator ``n != e`` with ``n + omega`` inside ``M``."""
    if S.is_full:
        raise FullMonoid("the full monoid has no generator besides the multiplicity")
    e = S.multiplicity
    M = maximal_ideal(S)
    omega = canonical_ideal(S)
    for g in S.minimal_generators:
        if g != e and contains_ideal(M, translate(omega, g)):
            return True, g
    return False, None


def is_ordinary(S: NumericalSemigroup) -> bool:
    return S.n <= 1


def is_lech_extremal(S: NumericalSemigroup) -> tuple[bool, Optional[int]]:
    """Whether S is ``{0, e, ..., (k-1)e} U [ke, oo)``; returns ``k = n(S)`` if so."""
    e, c = S.multiplicity, S.conductor
    structural = c % e == 0 and all(((z % e == 0) == (z in S)) for z in range(c))
    arithmetic = c == e * S.n
    if structural != arithmetic:
        raise InternalInconsistency(f"Lech extremality tests disagree on {S!r}")
    return (True, S.n) if structural else (False, None)


def flags(S: NumericalSemigroup) -> dict[str, bool]:
    return {
        "almost_symmetric": is_almost_symmetric(S),
        "positioned": is_positioned(S),
        "symmetric": is_symmetric(S),
        "ordinary": is_ordinary(S),
        "lech_extremal": is_lech_extremal(S)[0],
        "wilf_generator": False if S.is_full else wilf_generator_exists(S)[0],
    }
