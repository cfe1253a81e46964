"""Enumeration of numerical semigroups by genus.

Every numerical semigroup of genus ``g > 0`` has a unique parent of genus
``g - 1``, obtained by adjoining its Frobenius number; the children of a node
remove one minimal generator larger than the Frobenius number.  Walking this
tree visits each semigroup exactly once.

Two walkers share one summary format: an object-level walker that builds
:class:`NumericalSemigroup` values and calls the classification and
inequality modules (slow, accepts Python filters and visitors), and a
compiled walker used for large sweeps.
"""
from __future__ import annotations

import itertools
import json
import multiprocessing
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import _kernel as K
from . import classify
from .errors import InternalInconsistency, OracleTooLarge, ResourceLimit
from .inequalities import CHECK_IDS, ag_bookkeeping, check_all, equality_analysis
from .semigroup import InvariantReport, NumericalSemigroup, invariants


COUNT_KEYS = (
    "total", "checked", "almost_symmetric", "positioned", "symmetric", "ordinary",
    "lech_extremal", "wilf_generator", "dimd_equality", "lech_equality",
    "cor13_strong_equality", "cor13_weak_equality",
)
INCONSISTENCY_KEYS = ("bookkeeping", "negative_length", "dimd_equality_class", "lech_equality_class", "conductor_split")
FILTERS = tuple(K.FILTER_CODES)
WITNESS_CAP = 100
DEFAULT_FRONTIER = 12


# -- tree --------------------------------------------------------------------

@dataclass(frozen=True)
class TreeNode:
    semigroup: NumericalSemigroup
    genus: int
    effective_generators: tuple[int, ...]

    @classmethod
    def of(cls, S: NumericalSemigroup) -> "TreeNode":
        F = S.frobenius
        return cls(S, S.genus, tuple(g for g in S.minimal_generators if g > F))


def root() -> TreeNode:
    return TreeNode.of(NumericalSemigroup.full())


def children(node: TreeNode) -> list[TreeNode]:
    S = node.semigroup
    return [TreeNode.of(S.remove_generator(g)) for g in node.effective_generators]


def parent(node: TreeNode) -> Optional[TreeNode]:
    S = node.semigroup
    if S.is_full:
        return None
    bits = S.bits_upto(S.conductor) | (1 << S.frobenius)
    holes = ~bits & ((1 << S.conductor) - 1)
    c = holes.bit_length()
    return TreeNode.of(NumericalSemigroup(bits & ((1 << c) - 1), c))


# -- summary -----------------------------------------------------------------

def _witness(genus, gens, lhs, rhs):
    return {"genus": int(genus), "generators": [int(g) for g in gens], "lhs": int(lhs), "rhs": int(rhs)}


def _witness_key(w):
    return (w["genus"], w["generators"], w["lhs"], w["rhs"])


@dataclass
class CensusSummary:
    max_genus: int
    filter: str
    checks: tuple[str, ...]
    counts: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)
    violation_witnesses: dict = field(default_factory=dict)
    inconsistencies: dict = field(default_factory=dict)
    inconsistency_witnesses: dict = field(default_factory=dict)

    @classmethod
    def empty(cls, max_genus, filter="all", checks=CHECK_IDS):
        zeros = lambda: [0] * (max_genus + 1)  # noqa: E731
        return cls(
            max_genus, filter, tuple(checks),
            {k: zeros() for k in COUNT_KEYS},
            {k: zeros() for k in checks},
            {k: [] for k in checks},
            {k: zeros() for k in INCONSISTENCY_KEYS},
            {k: [] for k in INCONSISTENCY_KEYS},
        )

    def merge(self, other: "CensusSummary") -> "CensusSummary":
        """Order-independent combination of two partial summaries."""
        if (self.max_genus, self.filter, self.checks) != (other.max_genus, other.filter, other.checks):
            raise ValueError("summaries of different sweeps cannot be merged")
        out = CensusSummary.empty(self.max_genus, self.filter, self.checks)
        for attr in ("counts", "violations", "inconsistencies"):
            a, b, dst = getattr(self, attr), getattr(other, attr), getattr(out, attr)
            for k in dst:
                dst[k] = [x + y for x, y in zip(a[k], b[k])]
        for attr in ("violation_witnesses", "inconsistency_witnesses"):
            a, b, dst = getattr(self, attr), getattr(other, attr), getattr(out, attr)
            for k in dst:
                dst[k] = sorted(a[k] + b[k], key=_witness_key)[:WITNESS_CAP]
        return out

    def violation_count(self, check_id=None) -> int:
        keys = [check_id] if check_id else self.checks
        return sum(sum(self.violations[k]) for k in keys)

    def inconsistency_count(self) -> int:
        return sum(sum(v) for v in self.inconsistencies.values())

    @property
    def exit_status(self) -> int:
        return 1 if self.violation_count() or self.inconsistency_count() else 0

    def as_record(self) -> dict:
        return {
            "max_genus": self.max_genus,
            "filter": self.filter,
            "checks": list(self.checks),
            "counts": self.counts,
            "violations": {
                k: {"count": sum(v), "per_genus": v, "witnesses": self.violation_witnesses[k]}
                for k, v in self.violations.items()
            },
            "inconsistencies": {
                k: {"count": sum(v), "per_genus": v, "witnesses": self.inconsistency_witnesses[k]}
                for k, v in self.inconsistencies.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_record(), sort_keys=True, indent=1)


# -- object-level walker -------------------------------------------------------

def _named_filter(name):
    if callable(name) or name is None:
        return name
    if name == "all":
        return None
    key = {"almost-symmetric": "almost_symmetric", "positioned": "positioned", "wilf-generator": "wilf_generator"}[name]
    return lambda S, report: report.flags[key]


def full_report(S: NumericalSemigroup) -> InvariantReport:
    rep = invariants(S)
    return InvariantReport(**{**rep.__dict__, "flags": classify.flags(S)})


def enumerate_by_genus(
    g_max: int,
    filter=None,
    visitor: Optional[Callable[[NumericalSemigroup, InvariantReport], None]] = None,
    checks: Iterable[str] = CHECK_IDS,
    node_budget: Optional[int] = None,
    debug: bool = False,
) -> CensusSummary:
    """Visit every semigroup of genus <= g_max with the object-level walker.

    ``filter`` is ``None``, a filter name or a predicate ``(S, report) -> bool``;
    it selects which semigroups are checked and passed to ``visitor`` but
    never prunes the tree.
    """
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    checks = tuple(checks)
    pred = _named_filter(filter)
    fname = filter if isinstance(filter, str) else ("all" if filter is None else "custom")
    summary = CensusSummary.empty(g_max, fname, checks)
    seen = set() if debug else None
    stack = [root()]
    visited = 0
    while stack:
        node = stack.pop()
        visited += 1
        if node_budget is not None and visited > node_budget:
            raise ResourceLimit(f"node budget {node_budget} exceeded")
        S = node.semigroup
        if seen is not None:
            if S.gaps in seen:
                raise InternalInconsistency(f"{S!r} visited twice")
            seen.add(S.gaps)
        _account(summary, S, node.genus, pred, visitor)
        if node.genus < g_max:
            stack.extend(reversed(children(node)))
    return _sorted_witnesses(summary)


def _account(summary, S, genus, pred, visitor):
    report = full_report(S)
    fl = report.flags
    cnt = summary.counts
    cnt["total"][genus] += 1
    for key in ("almost_symmetric", "positioned", "symmetric", "ordinary", "lech_extremal", "wilf_generator"):
        cnt[key][genus] += fl[key]
    if pred is not None and not pred(S, report):
        return
    cnt["checked"][genus] += 1
    gens = S.minimal_generators
    try:
        bk = ag_bookkeeping(S)
    except InternalInconsistency:
        summary.inconsistencies["bookkeeping"][genus] += 1
        summary.inconsistency_witnesses["bookkeeping"].append(_witness(genus, gens, 0, 0))
        return
    verdicts = check_all(S, bk)
    for v in verdicts:
        if v.check_id in summary.violations and not v.holds:
            summary.violations[v.check_id][genus] += 1
            summary.violation_witnesses[v.check_id].append(_witness(genus, gens, v.lhs, v.rhs))
    eq = equality_analysis(S, verdicts)
    cnt["dimd_equality"][genus] += eq.dimd_equality
    cnt["lech_equality"][genus] += eq.lech_equality
    cnt["cor13_strong_equality"][genus] += eq.cor13_strong_equality
    cnt["cor13_weak_equality"][genus] += eq.cor13_weak_equality
    for v in eq.flagged:
        key = "dimd_equality_class" if v.check_id == "dimd" else "lech_equality_class"
        summary.inconsistencies[key][genus] += 1
        summary.inconsistency_witnesses[key].append(_witness(genus, gens, v.lhs, v.rhs))
    if visitor is not None:
        visitor(S, report)


def _sorted_witnesses(summary):
    for d in (summary.violation_witnesses, summary.inconsistency_witnesses):
        for k in d:
            d[k] = sorted(d[k], key=_witness_key)[:WITNESS_CAP]
    return summary


# -- brute-force oracle --------------------------------------------------------

def brute_force_census(g_max: int) -> list[int]:
    """Semigroup counts per genus by direct gap-set enumeration, no tree."""
    if g_max > 10:
        raise OracleTooLarge(f"brute force census is limited to genus 10, asked {g_max}")
    counts = []
    for g in range(g_max + 1):
        width = 2 * g
        total = 0
        # gaps of a genus-g semigroup lie in [1, 2g - 1]
        for gap_set in itertools.combinations(range(1, width + 1), g):
            gap_mask = 0
            for x in gap_set:
                gap_mask |= 1 << x
            members = ~gap_mask & ((1 << (width + 1)) - 1)
            ok = True
            for s in range(1, width + 1):
                if members >> s & 1 and (members << s) & gap_mask:
                    ok = False
                    break
            total += ok
        counts.append(total)
    return counts


# -- compiled walker -------------------------------------------------------------

def _check_mask(checks):
    mask = 0
    for c in checks:
        mask |= 1 << CHECK_IDS.index(c)
    return mask


def _buffers(g_max, emit_capacity=0):
    size = K.array_size(g_max)
    gens_width = 4 + g_max + 3
    return dict(
        counts=np.zeros((K.N_COUNTS, g_max + 1), dtype=np.int64),
        viol=np.zeros((K.N_CHECKS, g_max + 1), dtype=np.int64),
        wit=np.zeros((K.N_CHECKS, WITNESS_CAP, gens_width), dtype=np.int64),
        wit_n=np.zeros(K.N_CHECKS, dtype=np.int64),
        incons=np.zeros((K.N_INCONS, g_max + 1), dtype=np.int64),
        inc_wit=np.zeros((K.N_INCONS, WITNESS_CAP, gens_width), dtype=np.int64),
        inc_n=np.zeros(K.N_INCONS, dtype=np.int64),
        emit=np.zeros((max(emit_capacity, 1), size), dtype=np.int16),
        emit_meta=np.zeros((max(emit_capacity, 1), 3), dtype=np.int64),
    )


def _summary_from_buffers(buf, g_max, filter, checks):
    s = CensusSummary.empty(g_max, filter, checks)
    counts_order = ("total", "checked", "almost_symmetric", "positioned", "symmetric", "ordinary",
                    "lech_extremal", "wilf_generator", "dimd_equality", "lech_equality",
                    "cor13_strong_equality", "cor13_weak_equality")
    for i, key in enumerate(counts_order):
        s.counts[key] = [int(v) for v in buf["counts"][i]]

    def rows(wit, n, k):
        out = []
        for j in range(int(n[k])):
            r = wit[k, j]
            nu = int(r[3])
            out.append(_witness(r[0], r[4:4 + nu], r[1], r[2]))
        return out

    for k, cid in enumerate(CHECK_IDS):
        if cid in s.violations:
            s.violations[cid] = [int(v) for v in buf["viol"][k]]
            s.violation_witnesses[cid] = rows(buf["wit"], buf["wit_n"], k)
    for k, key in enumerate(INCONSISTENCY_KEYS):
        s.inconsistencies[key] = [int(v) for v in buf["incons"][k]]
        s.inconsistency_witnesses[key] = rows(buf["inc_wit"], buf["inc_n"], k)
    return _sorted_witnesses(s)


def _run(roots, metas, g_max, emit_genus, filter, checks, node_budget=0, emit_capacity=0):
    buf = _buffers(g_max, emit_capacity)
    status, visited, emitted = K.walk(
        roots, metas[:, 0].copy(), metas[:, 1].copy(), metas[:, 2].copy(),
        g_max, emit_genus, K.FILTER_CODES[filter], _check_mask(checks),
        buf["counts"], buf["viol"], buf["wit"], buf["wit_n"],
        buf["incons"], buf["inc_wit"], buf["inc_n"],
        buf["emit"], buf["emit_meta"], node_budget,
    )
    return status, visited, emitted, buf


def _frontier(g_max, frontier_genus, filter, checks, node_budget):
    """Walk the top of the tree; return its summary and the subtree roots."""
    dec = K.root_state(g_max)[None, :]
    meta = np.array([[-1, 1, 0]], dtype=np.int64)
    capacity = 1024
    while True:
        status, visited, emitted, buf = _run(dec, meta, g_max, frontier_genus, filter, checks,
                                             node_budget, capacity)
        if status == K.STATUS_EMIT_FULL:
            capacity *= 4
            continue
        if status == K.STATUS_BUDGET:
            raise ResourceLimit(f"node budget {node_budget} exceeded")
        top = _summary_from_buffers(buf, g_max, filter, checks)
        return top, buf["emit"][:emitted].copy(), buf["emit_meta"][:emitted].copy(), visited


def _subtree_task(args):
    roots, metas, g_max, filter, checks = args
    status, visited, _, buf = _run(roots, metas, g_max, -1, filter, checks)
    return _summary_from_buffers(buf, g_max, filter, checks), visited


def sweep(
    g_max: int,
    checks: Iterable[str] = CHECK_IDS,
    filter: str = "all",
    workers: int = 1,
    frontier_genus: int = DEFAULT_FRONTIER,
    chunk: int = 16,
    node_budget: int = 0,
    progress: bool = False,
) -> CensusSummary:
    """Run every selected check on every semigroup of genus <= g_max.

    The tree is cut at ``frontier_genus``; subtrees below the cut are handed
    to ``workers`` processes through a dynamic queue.  The cut does not
    depend on ``workers``, so the serialized summary is identical for any
    worker count.
    """
    if g_max < 0:
        raise ValueError("g_max must be nonnegative")
    checks = tuple(c for c in CHECK_IDS if c in set(checks))
    if filter not in K.FILTER_CODES:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    emit_genus = frontier_genus if 0 < frontier_genus <= g_max else -1
    summary, roots, metas, visited = _frontier(g_max, emit_genus, filter, checks, node_budget)
    tasks = [(roots[i:i + chunk], metas[i:i + chunk], g_max, filter, checks)
             for i in range(0, len(roots), chunk)]
    t0 = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.get_context("spawn").Pool(workers) as pool:
            results = pool.imap_unordered(_subtree_task, tasks)
            summary, visited = _collect(summary, visited, results, len(tasks), t0, progress)
    else:
        summary, visited = _collect(summary, visited, map(_subtree_task, tasks), len(tasks), t0, progress)
    if node_budget and visited > node_budget:
        raise ResourceLimit(f"node budget {node_budget} exceeded")
    return summary


def _collect(summary, visited, results, n_tasks, t0, progress):
    for i, (part, v) in enumerate(results, 1):
        summary = summary.merge(part)
        visited += v
        if progress:
            rate = visited / max(time.perf_counter() - t0, 1e-9)
            print(f"[{i}/{n_tasks}] {visited} nodes, {rate:,.0f} nodes/s", file=sys.stderr)
    return summary, visited


def census_counts(g_max: int, **kw) -> list[int]:
    return sweep(g_max, checks=(), **kw).counts["total"]
