"""Multiplicity and conductor bounds evaluated on concrete semigroups.

Each quantity in the length bookkeeping is computed twice, once as a set
cardinality over relative ideals and once by closed formula.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from . import classify
from .errors import InternalInconsistency
from .ideals import (
    canonical_ideal,
    conductor_ideal,
    intersect,
    length_between,
    maximal_ideal,
    natural_ideal,
    translate,
)
from .semigroup import NumericalSemigroup

CHECK_IDS = ("abhyankar", "dimd", "cor13_strong", "cor13_weak", "lech", "wilf", "depth", "ag_key")


@dataclass(frozen=True)
class InequalityVerdict:
    check_id: str
    lhs: int
    rhs: int
    holds: bool
    equality: bool
    semigroup: tuple[int, ...]

    @classmethod
    def of(cls, check_id, lhs, rhs, semigroup=()):
        return cls(check_id, lhs, rhs, lhs <= rhs, lhs == rhs, tuple(semigroup))

    def csv_row(self) -> str:
        gens = " ".join(map(str, self.semigroup))
        return f"{self.check_id},{gens},{self.lhs},{self.rhs},{int(self.holds)},{int(self.equality)}"


CSV_HEADER = "check_id,gens,lhs,rhs,holds,equality"


@dataclass(frozen=True)
class BookkeepingReport:
    len_m_xc: int
    len_xRbar_m: int
    len_ker_phi: int
    e_c: int

    def as_record(self):
        return asdict(self)


def evaluate(e, nu, c, n, len_xRbar_m, len_ker_phi, label=()) -> list[InequalityVerdict]:
    """All verdicts from the raw numbers; also used for good semigroups."""
    q = -(-c // e)
    return [
        InequalityVerdict.of("abhyankar", nu, e, label),
        InequalityVerdict.of("dimd", e, (nu - 1) * n + 1, label),
        InequalityVerdict.of("cor13_strong", c, (nu - 1) * n * n + n, label),
        InequalityVerdict.of("cor13_weak", c, nu * n * n, label),
        InequalityVerdict.of("lech", c, e * n, label),
        InequalityVerdict.of("wilf", c, nu * n, label),
        InequalityVerdict.of("depth", q, n, label),
        InequalityVerdict.of("ag_key", len_xRbar_m, len_ker_phi, label),
    ]


def ag_bookkeeping(S: NumericalSemigroup) -> BookkeepingReport:
    e, c, n, nu = S.multiplicity, S.conductor, S.n, S.embedding_dimension
    if S.is_full:
        return BookkeepingReport(0, 0, 0, 0)
    M = maximal_ideal(S)
    C = conductor_ideal(S)
    m_xc = length_between(M, translate(C, e))
    xrbar_m = length_between(translate(natural_ideal(S), e), M)
    # dual route: ell(omega / (x^-1 c  cap  omega))
    omega = canonical_ideal(S)
    xrbar_dual = length_between(omega, intersect(translate(C, -e), omega))
    expected = {
        "len_m_xc": (m_xc, e + n - 1),
        "len_xRbar_m": (xrbar_m, c - e - n + 1),
        "len_xRbar_m (dual)": (xrbar_dual, S.genus - e + 1),
    }
    for name, (card, formula) in expected.items():
        if card != formula:
            raise InternalInconsistency(f"{name} on {S!r}: cardinality {card} != formula {formula}")
    ker = nu * n - m_xc
    report = BookkeepingReport(m_xc, xrbar_m, ker, c)
    if min(m_xc, xrbar_m, ker) < 0:
        raise InternalInconsistency(f"negative length in {report} for {S!r}")
    if report.e_c != report.len_xRbar_m + report.len_m_xc:
        raise InternalInconsistency(f"e(c) split fails for {S!r}: {report}")
    return report


def check_all(S: NumericalSemigroup, bookkeeping: Optional[BookkeepingReport] = None) -> list[InequalityVerdict]:
    bk = bookkeeping or ag_bookkeeping(S)
    return evaluate(
        S.multiplicity, S.embedding_dimension, S.conductor, S.n,
        bk.len_xRbar_m, bk.len_ker_phi, S.minimal_generators,
    )


@dataclass(frozen=True)
class EqualityAnalysis:
    dimd_equality: bool
    dimd_class: str  # full_monoid | ordinary | none
    lech_equality: bool
    lech_k: Optional[int]
    cor13_strong_equality: bool
    cor13_weak_equality: bool
    flagged: tuple[InequalityVerdict, ...] = ()

    @property
    def consistent(self):
        return not self.flagged

    def as_record(self):
        rec = asdict(self)
        rec["flagged"] = [asdict(v) for v in self.flagged]
        return rec


def equality_analysis(S: NumericalSemigroup, verdicts: Optional[Sequence[InequalityVerdict]] = None) -> EqualityAnalysis:
    by_id = {v.check_id: v for v in (verdicts or check_all(S))}
    if S.is_full:
        cls = "full_monoid"
    elif classify.is_ordinary(S):
        cls = "ordinary"
    else:
        cls = "none"
    extremal, k = classify.is_lech_extremal(S)
    flagged = []
    if by_id["dimd"].equality != (cls != "none"):
        flagged.append(by_id["dimd"])
    if by_id["lech"].equality != extremal:
        flagged.append(by_id["lech"])
    return EqualityAnalysis(
        dimd_equality=by_id["dimd"].equality,
        dimd_class=cls,
        lech_equality=by_id["lech"].equality,
        lech_k=k,
        cor13_strong_equality=by_id["cor13_strong"].equality,
        cor13_weak_equality=by_id["cor13_weak"].equality,
        flagged=tuple(flagged),
    )
