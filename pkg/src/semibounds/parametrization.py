"""Value semigroups of algebras generated by pairs of power series.

Each generator is a pair ``(f(t), g(u))`` of truncated power series with
rational coefficients.  The algebra they generate, truncated at degree
``N`` in each branch, is a finite-dimensional space ``A``.  A pair
``(a, b)`` is a value of ``A`` iff the subspace ``W(a, b)`` of elements with
orders at least ``(a, b)`` strictly contains both ``W(a + 1, b)`` and
``W(a, b + 1)`` (over an infinite field a space is never a union of two
proper subspaces).  Dimensions come from exact Gaussian elimination.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .errors import SemigroupError, TruncationTooSmall, ZeroGenerator
from .plane import GoodSemigroupPlane


def _series(terms, N) -> list[Fraction]:
    vec = [Fraction(0)] * N
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = [(t[0], Fraction(t[1], t[2]) if len(t) == 3 else Fraction(t[1])) for t in terms]
    for exp, coef in items:
        exp = int(exp)
        if exp < 0:
            raise SemigroupError(f"negative exponent {exp}")
        if exp < N:
            vec[exp] += Fraction(coef)
    return vec


def _mul(a, b, N):
    out = [Fraction(0)] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


class _Echelon:
    """Row-reduced basis of a growing subspace of Q^k."""

    def __init__(self):
        self.rows = {}  # pivot column -> row with 1 at pivot

    def reduce(self, v):
        v = list(v)
        for col, row in self.rows.items():
            c = v[col]
            if c:
                for j, r in enumerate(row):
                    if r:
                        v[j] -= c * r
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        for col, c in enumerate(v):
            if c:
                v = [x / c for x in v]
                for p, row in self.rows.items():
                    if row[col]:
                        k = row[col]
                        self.rows[p] = [r - k * x for r, x in zip(row, v)]
                self.rows[col] = v
                return True
        return False


def _algebra_basis(gens, N):
    """Basis of the truncated algebra generated by ``gens`` (vectors of length 2N)."""
    one = [Fraction(1)] + [Fraction(0)] * (N - 1)
    ech = _Echelon()
    basis = [(one, one)]
    ech.add(one + one)
    frontier = list(basis)
    while frontier:
        nxt = []
        for f, g in frontier:
            for a, b in gens:
                h = (_mul(f, a, N), _mul(g, b, N))
                if ech.add(h[0] + h[1]):
                    basis.append(h)
                    nxt.append(h)
        frontier = nxt
    return [f + g for f, g in basis]


def _rank_profile(vectors, columns):
    """Ranks of every prefix of ``columns`` restricted to ``vectors``.

    One elimination in column order; the rank of a prefix is the number of
    pivot columns inside it.
    """
    m = [[v[c] for c in columns] for v in vectors]
    rank = 0
    pivots = set()
    for col in range(len(columns)):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                k = m[i][col] / p[col]
                m[i] = [x - k * y for x, y in zip(m[i], p)]
        pivots.add(col)
        rank += 1
    prefix = [0] * (len(columns) + 1)
    for k in range(len(columns)):
        prefix[k + 1] = prefix[k] + (k in pivots)
    return prefix


def value_set(generators, truncation: int) -> set[tuple[int, int]]:
    """Finite values ``(a, b)`` with ``a, b < truncation`` of the generated algebra."""
    N = int(truncation)
    if N < 1:
        raise SemigroupError("truncation must be positive")
    gens = []
    for k, (f, g) in enumerate(generators):
        a, b = _series(f, N), _series(g, N)
        if a[0] or b[0]:
            raise SemigroupError(f"generator {k} has a nonzero constant term")
        if not any(a) and not any(b):
            raise ZeroGenerator(f"generator {k} vanishes in both branches")
        gens.append((a, b))
    if not gens:
        raise SemigroupError("no generators")
    basis = _algebra_basis(gens, N)
    d = len(basis)
    T = list(range(N))
    U = [N + j for j in range(N)]
    # dims[a][b] = dim W(a, b) = d - rank of coordinates T0..T(a-1), U0..U(b-1)
    dims = []
    for a in range(N + 1):
        prefix = _rank_profile(basis, T[:a] + U)
        dims.append([d - prefix[a + b] for b in range(N + 1)])
    values = set()
    for a in range(N):
        for b in range(N):
            if dims[a][b] > dims[a + 1][b] and dims[a][b] > dims[a][b + 1]:
                values.add((a, b))
    return values


def from_parametrization(generators, truncation: int) -> GoodSemigroupPlane:
    """Good semigroup of finite values of the algebra generated by ``generators``.

    ``generators`` is a sequence of pairs ``(branch1, branch2)``; each branch
    is a mapping exponent -> coefficient or a list of ``[exp, num, den]``.
    The conductor ``g`` found inside the window must satisfy
    ``truncation >= 2 g_i + 2`` so that truncation cannot fake values.
    """
    N = int(truncation)
    V = value_set(generators, N)
    box = [(a, b) for a in range(N) for b in range(N)]
    full = [d for d in box if all((a, b) in V for a in range(d[0], N) for b in range(d[1], N))]
    if not full:
        raise TruncationTooSmall(f"no conductor below truncation {N}")
    g = (min(d[0] for d in full), min(d[1] for d in full))
    if g not in full:
        raise TruncationTooSmall(f"conductor not stabilized below truncation {N}")
    if N < 2 * g[0] + 2 or N < 2 * g[1] + 2:
        raise TruncationTooSmall(f"conductor {g} needs truncation >= {2 * max(g) + 2}, got {N}")
    for p in box:
        if (p in V) != ((min(p[0], g[0]), min(p[1], g[1])) in V):
            raise TruncationTooSmall(f"value set is not saturated at {p}; increase truncation")
    small = [p for p in V if p[0] <= g[0] and p[1] <= g[1]]
    return GoodSemigroupPlane.from_small_elements(small, g)


def load_parametrization(path) -> tuple[list, int]:
    """Read ``{"generators": [{"branch1": [[exp,num,den],...], "branch2": [...]}], "truncation": N}``."""
    with open(path) as fh:
        try:
            record = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SemigroupError(f"{path}: not valid JSON ({exc})") from None
    try:
        gens = [(g.get("branch1", []), g.get("branch2", [])) for g in record["generators"]]
        return gens, int(record.get("truncation", 16))
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise SemigroupError(f"{path}: malformed parametrization ({exc})") from None


def monomial(exp: int) -> dict:
    return {exp: Fraction(1)}
