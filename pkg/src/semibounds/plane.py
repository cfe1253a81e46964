"""Good semigroups and good ideals in N^2 (two-branch value semigroups).

A set ``E`` bounded below by ``lo`` is stored by its points in the box
``[lo, hi]``; a point ``p >= lo`` belongs to ``E`` iff ``min(p, hi)`` is a
stored cell.  Any ``hi`` at or beyond the conductor works, and instances are
normalized to ``hi = conductor`` so that equal sets compare equal.

Lengths ``d(E \\ F)`` are computed by a greedy chain down to a common
conductor ideal; an exhaustive search over all good ideals between ``F`` and
``E`` is available as an oracle on small boxes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ChainAmbiguity,
    CompletionFails,
    InternalInconsistency,
    MultiplicityVectorMissing,
    NoConductor,
    NotAdditivelyClosed,
    NotContained,
    NotGoodIdeal,
    NotMinClosed,
    OracleTooLarge,
    ParentMismatch,
    SemigroupError,
)
from .inequalities import InequalityVerdict, evaluate
from .semigroup import NumericalSemigroup

Point = tuple[int, int]


def _clamp(p, hi):
    return (min(p[0], hi[0]), min(p[1], hi[1]))


def _pmin(a, b):
    return (min(a[0], b[0]), min(a[1], b[1]))


def _pmax(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]))


def _box(lo, hi):
    return [(x, y) for x in range(lo[0], hi[0] + 1) for y in range(lo[1], hi[1] + 1)]


def _as_point(p) -> Point:
    x, y = p
    return (int(x), int(y))


# -- axioms on a saturated box --------------------------------------------------

def _min_closed_witness(cells):
    pts = sorted(cells)
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            if _pmin(a, b) not in cells:
                return a, b
    return None


def _completion_witness(cells, hi):
    """First pair violating the completion axiom, or None.

    For ``a != b`` with ``a_i = b_i`` some ``c`` must have ``c_i > a_i`` and
    ``c_j = min(a_j, b_j)``.  A cell on the upper face ``a_j = hi_j`` stands
    for infinitely many points, so it is paired with ``a + e_j`` as well.
    """
    for i in (0, 1):
        j = 1 - i
        reach = {}  # value of coordinate j -> largest coordinate i with that value
        groups = {}
        for p in cells:
            reach[p[j]] = max(reach.get(p[j], p[i]), p[i])
            groups.setdefault(p[i], []).append(p)
        for v, pts in groups.items():
            if v >= hi[i]:
                continue  # completion comes from the saturated face
            pts.sort(key=lambda p: p[j])
            needs = [(pts[k], pts[k + 1]) for k in range(len(pts) - 1)]
            top = pts[-1]
            if top[j] >= hi[j]:
                shifted = list(top)
                shifted[j] += 1
                needs.append((top, tuple(shifted)))
            for a, b in needs:
                if reach.get(min(a[j], b[j]), v) <= v:
                    return a, b
    return None


def _conductor_of(cells, lo, hi):
    """Least ``d`` with ``d + N^2`` inside the set."""
    full = [d for d in _box(lo, hi) if all(q in cells for q in _box(d, hi))]
    if not full:
        raise NoConductor(f"{hi} is not a member, so no translate of N^2 is contained")
    d = full[0]
    for q in full[1:]:
        d = _pmin(d, q)
    if all(q in cells for q in _box(d, hi)):
        return d
    raise NoConductor("the points d with d + N^2 inside the set have no least element")


def _resample(member, lo, hi):
    return frozenset(p for p in _box(lo, hi) if member(p))


# -- good semigroups ------------------------------------------------------------------

class GoodSemigroupPlane:
    """A good submonoid of N^2, stored saturated up to its conductor."""

    def __init__(self, cells: frozenset, conductor: Point):
        # trusted constructor: cells are S inside [0, conductor]
        self.conductor = conductor
        self.cells = cells

    @classmethod
    def from_small_elements(cls, points: Iterable[Sequence[int]], conductor: Sequence[int]) -> "GoodSemigroupPlane":
        """Validate and build.  Points beyond ``conductor`` are clamped onto it."""
        hi = _as_point(conductor)
        if min(hi) < 0:
            raise SemigroupError(f"conductor {hi} must lie in N^2")
        pts = {_as_point(p) for p in points}
        bad = [p for p in pts if min(p) < 0]
        if bad:
            raise SemigroupError(f"point {bad[0]} lies outside N^2")
        cells = frozenset(_clamp(p, hi) for p in pts)
        if (0, 0) not in cells:
            raise SemigroupError("(0, 0) must be a member")
        if hi not in cells:
            raise NoConductor(f"the conductor {hi} is not a member")
        w = _min_closed_witness(cells)
        if w:
            raise NotMinClosed(*w)
        w = _completion_witness(cells, hi)
        if w:
            raise CompletionFails(*w)
        for a in sorted(cells):
            for b in sorted(cells):
                if _clamp((a[0] + b[0], a[1] + b[1]), hi) not in cells:
                    raise NotAdditivelyClosed(a, b)
        gamma = _conductor_of(cells, (0, 0), hi)
        member = lambda p: _clamp(p, hi) in cells  # noqa: E731
        small = _resample(member, (0, 0), gamma)
        S = cls(small, gamma)
        if any(S.contains(p) != member(p) for p in _box((0, 0), _pmax(hi, (1, 1)))):
            raise NoConductor(f"membership is not determined by the box up to {gamma}")
        return S

    @classmethod
    def natural(cls) -> "GoodSemigroupPlane":
        return cls(frozenset({(0, 0)}), (0, 0))

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def contains(self, p) -> bool:
        return p[0] >= 0 and p[1] >= 0 and _clamp(p, self.conductor) in self.cells

    def members_in(self, hi: Point) -> list[Point]:
        return [p for p in _box((0, 0), hi) if self.contains(p)]

    @property
    def small_elements(self) -> list[Point]:
        return sorted(self.cells)

    def __eq__(self, other):
        if not isinstance(other, GoodSemigroupPlane):
            return NotImplemented
        return self.conductor == other.conductor and self.cells == other.cells

    def __hash__(self):
        return hash((self.conductor, self.cells))

    def __repr__(self):
        return f"GoodSemigroupPlane({self.small_elements}, conductor={self.conductor})"

    def _projection(self, i) -> NumericalSemigroup:
        g = self.conductor[i]
        values = {p[i] for p in self.cells}
        return NumericalSemigroup.from_gaps([v for v in range(g) if v not in values])

    @cached_property
    def projections(self) -> tuple[NumericalSemigroup, NumericalSemigroup]:
        return self._projection(0), self._projection(1)

    def to_record(self) -> dict:
        return {"small_elements": [list(p) for p in self.small_elements], "conductor": list(self.conductor)}


def load_semigroup(record: dict) -> GoodSemigroupPlane:
    try:
        return GoodSemigroupPlane.from_small_elements(record["small_elements"], record["conductor"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SemigroupError):
            raise
        raise SemigroupError(f"malformed good semigroup record: {exc}") from None


# -- good ideals ------------------------------------------------------------------------

class GoodIdealPlane:
    """A good relative ideal ``E`` of a good semigroup, with ``E + S`` inside ``E``."""

    __slots__ = ("parent", "lo", "hi", "cells")

    def __init__(self, parent: GoodSemigroupPlane, lo: Point, hi: Point, cells: frozenset):
        # trusted constructor: normalized (lo = least element, hi = conductor)
        self.parent = parent
        self.lo = lo
        self.hi = hi
        self.cells = cells

    def contains(self, p) -> bool:
        return p[0] >= self.lo[0] and p[1] >= self.lo[1] and _clamp(p, self.hi) in self.cells

    __contains__ = contains

    @property
    def minimum(self) -> Point:
        return self.lo

    @property
    def conductor(self) -> Point:
        return self.hi

    def sample(self, lo: Point, hi: Point) -> frozenset:
        """Cells of this ideal in the box ``[lo, hi]``, which must cover ``[self.lo, self.hi]``."""
        return _resample(self.contains, lo, hi)

    def __eq__(self, other):
        if not isinstance(other, GoodIdealPlane):
            return NotImplemented
        return self.parent == other.parent and (self.lo, self.hi, self.cells) == (other.lo, other.hi, other.cells)

    def __hash__(self):
        return hash((self.lo, self.hi, self.cells))

    def __repr__(self):
        return f"GoodIdealPlane({sorted(self.cells)}, conductor={self.hi})"

    def to_record(self) -> dict:
        return {"small_elements": [list(p) for p in sorted(self.cells)], "conductor": list(self.hi)}


def _ideal_witness(S: GoodSemigroupPlane, cells, lo, hi):
    """Reason why the saturated box set is not a good ideal of S, or None."""
    if hi not in cells:
        return f"{hi} is not a member"
    w = _min_closed_witness(cells)
    if w:
        return f"min({w[0]}, {w[1]}) is missing"
    w = _completion_witness(cells, hi)
    if w:
        return f"completion fails for {w[0]}, {w[1]}"
    span = _pmax((hi[0] - lo[0], hi[1] - lo[1]), S.conductor)
    smembers = S.members_in(span)
    for a in cells:
        for s in smembers:
            if _clamp((a[0] + s[0], a[1] + s[1]), hi) not in cells:
                return f"{a} + {s} is missing"
    return None


def _make_ideal(S, member, lo, hi, check=True) -> GoodIdealPlane:
    cells = _resample(member, lo, hi)
    if not cells:
        raise NotGoodIdeal("the ideal is empty")
    if check:
        why = _ideal_witness(S, cells, lo, hi)
        if why:
            raise NotGoodIdeal(why)
    lo2 = min(cells)
    for p in cells:
        lo2 = _pmin(lo2, p)
    try:
        hi2 = _conductor_of(cells, lo2, hi)
    except NoConductor as exc:
        raise NotGoodIdeal(str(exc)) from None
    hi2 = _pmax(hi2, lo2)
    E = GoodIdealPlane(S, lo2, hi2, _resample(member, lo2, hi2))
    if check and any(E.contains(p) != member(p) for p in _box(lo, _pmax(hi, (lo[0] + 1, lo[1] + 1)))):
        raise NotGoodIdeal(f"membership is not determined by the box up to {hi2}")
    return E


def ideal_from_points(S: GoodSemigroupPlane, points: Iterable[Sequence[int]], box: Sequence[int]) -> GoodIdealPlane:
    """Good ideal whose members ``p`` satisfy ``min(p, box)`` in ``points``."""
    hi = _as_point(box)
    cells = {_clamp(_as_point(p), hi) for p in points}
    if not cells:
        raise NotGoodIdeal("no points given")
    lo = min(cells)
    for p in cells:
        lo = _pmin(lo, p)
    return _make_ideal(S, lambda p: p[0] >= lo[0] and p[1] >= lo[1] and _clamp(p, hi) in cells, lo, hi)


def load_ideal(S: GoodSemigroupPlane, record: dict) -> GoodIdealPlane:
    try:
        return ideal_from_points(S, record["small_elements"], record["conductor"])
    except (KeyError, TypeError) as exc:
        raise SemigroupError(f"malformed good ideal record: {exc}") from None


def semigroup_ideal(S: GoodSemigroupPlane) -> GoodIdealPlane:
    return GoodIdealPlane(S, (0, 0), S.conductor, S.cells)


def maximal_ideal(S: GoodSemigroupPlane) -> GoodIdealPlane:
    if S.conductor == (0, 0):
        raise NotGoodIdeal("N^2 minus the origin is not min-closed")
    member = lambda p: p != (0, 0) and S.contains(p)  # noqa: E731
    return _make_ideal(S, member, (0, 0), S.conductor)


def conductor_ideal(S: GoodSemigroupPlane) -> GoodIdealPlane:
    return quadrant(S, S.conductor)


def natural_ideal(S: GoodSemigroupPlane) -> GoodIdealPlane:
    return quadrant(S, (0, 0))


def quadrant(S: GoodSemigroupPlane, v: Sequence[int]) -> GoodIdealPlane:
    """The ideal ``v + N^2``."""
    v = _as_point(v)
    return GoodIdealPlane(S, v, v, frozenset({v}))


def translate(E: GoodIdealPlane, v: Sequence[int]) -> GoodIdealPlane:
    dx, dy = _as_point(v)
    return GoodIdealPlane(
        E.parent, (E.lo[0] + dx, E.lo[1] + dy), (E.hi[0] + dx, E.hi[1] + dy),
        frozenset((x + dx, y + dy) for x, y in E.cells),
    )


def _same_parent(E, F):
    if E.parent != F.parent:
        raise ParentMismatch("ideals of different good semigroups")


def intersect(E: GoodIdealPlane, F: GoodIdealPlane) -> GoodIdealPlane:
    _same_parent(E, F)
    lo = _pmax(E.lo, F.lo)
    hi = _pmax(_pmax(E.hi, F.hi), lo)
    return _make_ideal(E.parent, lambda p: E.contains(p) and F.contains(p), lo, hi)


def contains_ideal(E: GoodIdealPlane, F: GoodIdealPlane) -> bool:
    """True iff F is a subset of E."""
    return _outside_witness(E, F) is None


def _outside_witness(E, F):
    _same_parent(E, F)
    lo = _pmin(E.lo, F.lo)
    hi = _pmax(E.hi, F.hi)
    for p in _box(lo, hi):
        if F.contains(p) and not E.contains(p):
            return p
    return None


# -- distance ----------------------------------------------------------------------------

def _common_box(E, F):
    return _pmin(E.lo, F.lo), _pmax(E.hi, F.hi)


def _greedy_steps(S, cells, hi, prefer, check):
    """Steps of the min-removal chain from ``cells`` down to ``hi + N^2``."""
    cur = set(cells)
    steps = 0
    while len(cur) > 1:
        alpha = min(cur)
        for p in cur:
            alpha = _pmin(alpha, p)
        i = prefer if alpha[prefer] < hi[prefer] else 1 - prefer
        if alpha[i] >= hi[i]:
            raise InternalInconsistency(f"chain stalled at {alpha}")
        cur = {p for p in cur if p[i] > alpha[i]}
        steps += 1
        if check and len(cur) > 1:
            lo = alpha
            why = _ideal_witness(S, frozenset(cur), _pmin(lo, hi), hi)
            if why:
                raise InternalInconsistency(f"greedy chain left the good ideals: {why}")
    return steps


def chain_steps(E: GoodIdealPlane, hi: Point, prefer: int = 0, check: bool = False) -> int:
    """Length of the min-removal chain from E down to ``hi + N^2`` (``hi >= E.hi``)."""
    lo = _pmin(E.lo, hi)
    cells = {p for p in _box(lo, hi) if E.contains(p)}
    return _greedy_steps(E.parent, cells, hi, prefer, check)


def distance(E: GoodIdealPlane, F: GoodIdealPlane, check: bool = False) -> int:
    """``d(E \\ F)`` for good ideals ``F`` inside ``E``.

    Both ideals are walked down to a common ``hi + N^2`` by removing the
    least element's row or column at each step; each such step is a
    saturated inclusion, so the difference of step counts is the length.
    The walk is run preferring either coordinate and the results compared.
    """
    w = _outside_witness(E, F)
    if w is not None:
        raise NotContained(w, f"{w} lies in the smaller ideal but not in the larger one")
    _, hi = _common_box(E, F)
    results = set()
    for prefer in (0, 1):
        results.add(chain_steps(E, hi, prefer, check) - chain_steps(F, hi, prefer, check))
    if len(results) != 1:
        raise ChainAmbiguity(f"greedy chains disagree: {sorted(results)}")
    return results.pop()


@dataclass(frozen=True)
class ChainCensus:
    """All good ideals between F and E, with their maximal chain lengths."""
    ideals: int
    shortest: int
    longest: int
    # (ideal, longest chain length from F) when requested
    ranked: tuple = field(default=(), compare=False, repr=False)

    @property
    def graded(self) -> bool:
        return self.shortest == self.longest


def chain_census(
    E: GoodIdealPlane, F: GoodIdealPlane, max_box: Point = (8, 8), max_ideals: int = 20000, keep: bool = False
) -> ChainCensus:
    """Exhaustive search over good ideals ``G`` with ``F <= G <= E``.

    With ``keep`` the result also lists every such ideal with its rank.
    """
    w = _outside_witness(E, F)
    if w is not None:
        raise NotContained(w, f"{w} lies in the smaller ideal but not in the larger one")
    lo, hi = _common_box(E, F)
    if hi[0] - lo[0] > max_box[0] or hi[1] - lo[1] > max_box[1]:
        raise OracleTooLarge(f"box {lo}..{hi} exceeds {max_box}")
    S = E.parent
    box = _box(lo, hi)
    fcells = frozenset(p for p in box if F.contains(p))
    # columns right to left, each top to bottom: S-closure and min-closure
    # then only look ahead, and a finished column can be checked for the
    # completion axiom along the first coordinate
    free = sorted((p for p in box if E.contains(p) and p not in fcells), key=lambda p: (-p[0], -p[1]))
    index = {p: k for k, p in enumerate(free)}
    span = _pmax((hi[0] - lo[0], hi[1] - lo[1]), S.conductor)
    steps = [s for s in S.members_in(span) if s != (0, 0)]
    succ = []
    for p in free:
        req = set()
        for s in steps:
            q = _clamp((p[0] + s[0], p[1] + s[1]), hi)
            if q in index and q != p:
                req.add(index[q])
        succ.append(sorted(req))

    def later(q):
        k = index.get(q)
        return [k] if k is not None else []

    forced_by_f = [sorted({k for f in fcells for k in later(_pmin(p, f))}) for p in free]
    f_rowmax = {}
    f_column = {}
    for f in fcells:
        f_rowmax[f[1]] = max(f_rowmax.get(f[1], f[0]), f[0])
        f_column.setdefault(f[0], []).append(f[1])
    closed = []
    chosen = [False] * len(free)
    forced = [0] * len(free)
    row_stack = {}  # row -> first coordinates of chosen cells, largest first
    col_chosen = {}

    def column_ok(v):
        if v >= hi[0]:
            return True
        ys = sorted(f_column.get(v, []) + col_chosen.get(v, []))
        needs = ys[:-1]
        if ys and ys[-1] >= hi[1]:
            needs.append(ys[-1])
        for y in needs:
            if f_rowmax.get(y, v) <= v and not (row_stack.get(y) and row_stack[y][0] > v):
                return False
        return True

    def dfs(k):
        if k and (k == len(free) or free[k][0] != free[k - 1][0]):
            if not column_ok(free[k - 1][0]):
                return
        if k == len(free):
            closed.append(chosen.copy())
            if len(closed) > 50 * max_ideals:
                raise OracleTooLarge(f"more than {50 * max_ideals} candidate sets")
            return
        if not forced[k]:
            dfs(k + 1)
        if all(chosen[r] for r in succ[k]):
            p = free[k]
            new = list(forced_by_f[k])
            for q in range(k):
                if chosen[q]:
                    new.extend(later(_pmin(p, free[q])))
            new = [r for r in new if r > k]
            chosen[k] = True
            row_stack.setdefault(p[1], []).append(p[0])
            col_chosen.setdefault(p[0], []).append(p[1])
            for r in new:
                forced[r] += 1
            dfs(k + 1)
            for r in new:
                forced[r] -= 1
            row_stack[p[1]].pop()
            col_chosen[p[0]].pop()
            chosen[k] = False

    dfs(0)
    masks = []
    for sel in closed:
        cells = fcells | {free[k] for k in range(len(free)) if sel[k]}
        if _ideal_witness(S, cells, lo, hi) is None:
            masks.append(sum(1 << k for k in range(len(free)) if sel[k]))
    if len(masks) > max_ideals:
        raise OracleTooLarge(f"{len(masks)} good ideals exceed the limit {max_ideals}")
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    if masks[0] != 0 or masks[-1] != (1 << len(free)) - 1:
        raise InternalInconsistency("the end points of the interval are not good ideals")
    census = _grade(masks, len(free))
    if not keep:
        return census
    ranked = []
    for m, r in zip(masks, census.ranked):
        cells = fcells | {free[k] for k in range(len(free)) if m >> k & 1}
        member = lambda p, cells=cells: p[0] >= lo[0] and p[1] >= lo[1] and _pmin(p, hi) in cells
        ranked.append((_make_ideal(S, member, lo, hi, check=False), r))
    return ChainCensus(census.ideals, census.shortest, census.longest, tuple(ranked))


def _grade(masks, width):
    words = (width + 63) // 64 or 1
    arr = np.zeros((len(masks), words), dtype=np.uint64)
    for r, m in enumerate(masks):
        for w in range(words):
            arr[r, w] = (m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    pop = np.array([bin(m).count("1") for m in masks])
    longest = np.zeros(len(masks), dtype=np.int64)
    shortest = np.zeros(len(masks), dtype=np.int64)
    for j in range(1, len(masks)):
        below = np.nonzero(pop < pop[j])[0]
        sub = below[np.all((arr[below] & ~arr[j]) == 0, axis=1)]
        covers = []
        while sub.size:
            k = sub[-1]
            covers.append(k)
            sub = sub[~np.all((arr[sub] & ~arr[k]) == 0, axis=1)]
        longest[j] = 1 + max(longest[k] for k in covers)
        shortest[j] = 1 + min(shortest[k] for k in covers)
    return ChainCensus(len(masks), int(shortest[-1]), int(longest[-1]), tuple(int(x) for x in longest))


def distance_oracle(E: GoodIdealPlane, F: GoodIdealPlane, max_box: Point = (8, 8)) -> int:
    census = chain_census(E, F, max_box)
    if not census.graded:
        raise ChainAmbiguity(f"saturated chains of lengths {census.shortest} and {census.longest}")
    return census.longest


# -- invariants ----------------------------------------------------------------------------

def multiplicity_vector(S: GoodSemigroupPlane) -> Point:
    """The componentwise least nonzero member, when it is a member."""
    nonzero = [p for p in S.cells if p != (0, 0)]
    if not nonzero:
        raise MultiplicityVectorMissing("N^2 has no least nonzero element")
    v = nonzero[0]
    for p in nonzero[1:]:
        v = _pmin(v, p)
    if v not in S:
        raise MultiplicityVectorMissing(f"the componentwise minimum {v} of the nonzero members is not a member")
    return v


@dataclass(frozen=True)
class PlaneReport:
    e: int
    nu: int
    e_c: int
    length_R_c: int
    multiplicity_vector: Point
    conductor: Point
    len_m_xc: int
    len_xRbar_m: int
    len_ker_phi: int
    len_xRbar_m_dual: Optional[int] = None
    projections: tuple = ()
    verdicts: tuple[InequalityVerdict, ...] = field(default=(), repr=False)

    def as_record(self) -> dict:
        rec = {k: getattr(self, k) for k in (
            "e", "nu", "e_c", "length_R_c", "len_m_xc", "len_xRbar_m", "len_ker_phi", "len_xRbar_m_dual")}
        rec["multiplicity_vector"] = list(self.multiplicity_vector)
        rec["conductor"] = list(self.conductor)
        rec["projections"] = [list(g) for g in self.projections]
        rec["verdicts"] = {
            v.check_id: {"lhs": v.lhs, "rhs": v.rhs, "holds": v.holds, "equality": v.equality}
            for v in self.verdicts
        }
        return rec


def conductor_lengths(S: GoodSemigroupPlane) -> tuple[int, int]:
    """``(e_c, d(S \\ C))``: the conductor's multiplicity and the colength of C."""
    return sum(S.conductor), distance(semigroup_ideal(S), conductor_ideal(S))


def invariants_plane(S: GoodSemigroupPlane, nu: int, canonical: Optional[GoodIdealPlane] = None) -> PlaneReport:
    """Invariants and inequality verdicts; ``nu`` must come from the presentation."""
    if nu < 1:
        raise SemigroupError("nu must be positive")
    p1, p2 = S.projections
    e = p1.multiplicity + p2.multiplicity
    ev = multiplicity_vector(S)
    e_c, n = conductor_lengths(S)
    M = maximal_ideal(S)
    C = conductor_ideal(S)
    m_xc = distance(M, translate(C, ev))
    xr = distance(quadrant(S, ev), M)
    dual = None
    if canonical is not None:
        dual = distance(canonical, intersect(translate(C, (-ev[0], -ev[1])), canonical))
        if dual != xr:
            raise InternalInconsistency(f"two routes to the same length disagree: {xr} vs {dual}")
    ker = nu * n - m_xc
    if e_c != xr + m_xc:
        raise InternalInconsistency(f"e(c) split fails: {e_c} != {xr} + {m_xc}")
    verdicts = evaluate(e, nu, e_c, n, xr, ker)
    return PlaneReport(
        e=e, nu=nu, e_c=e_c, length_R_c=n, multiplicity_vector=ev, conductor=S.conductor,
        len_m_xc=m_xc, len_xRbar_m=xr, len_ker_phi=ker, len_xRbar_m_dual=dual,
        projections=(p1.minimal_generators, p2.minimal_generators), verdicts=tuple(verdicts),
    )


def load_file(path) -> tuple[GoodSemigroupPlane, Optional[GoodIdealPlane]]:
    """Read ``{"small_elements", "conductor"}`` plus an optional ``"canonical_ideal"`` record."""
    with open(path) as fh:
        try:
            record = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SemigroupError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(record, dict):
        raise SemigroupError(f"{path}: expected a JSON object")
    S = load_semigroup(record)
    omega = load_ideal(S, record["canonical_ideal"]) if "canonical_ideal" in record else None
    return S, omega


# -- fixtures -----------------------------------------------------------------------------

def two_cusps_semigroup() -> GoodSemigroupPlane:
    """Value semigroup of the union of two (t^3, t^4) cusps meeting transversally."""
    pts = [(0, 0), (3, 3), (3, 4), (4, 3), (4, 4), (6, 6)]
    for a, b in product((3, 4), (6,)):
        pts += [(a, b), (b, a)]
    return GoodSemigroupPlane.from_small_elements(pts, (6, 6))


def two_cusps_canonical(S: Optional[GoodSemigroupPlane] = None) -> GoodIdealPlane:
    """A canonical ideal between the two-cusp semigroup and N^2."""
    S = S or two_cusps_semigroup()
    extra = [(3, 5), (4, 5), (5, 5), (5, 3), (5, 4)]
    extra += [(x, 0) for x in range(3, 7)] + [(0, x) for x in range(3, 7)]
    return ideal_from_points(S, list(S.cells) + extra, (6, 6))
