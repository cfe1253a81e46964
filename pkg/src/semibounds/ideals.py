"""Relative ideals of a numerical semigroup.

An ideal ``I`` is normalized as ``(mu, tau, window)``: ``mu`` is its least
element, every integer ``>= tau`` belongs to ``I`` with ``tau`` minimal, and
``window`` is a bitset over ``[mu, tau)`` (bit ``i`` stands for ``mu + i``).
"""
from __future__ import annotations

import re
from typing import Iterable

from .errors import EmptyGenerators, NotContained, ParentMismatch, SemigroupError
from .semigroup import NumericalSemigroup


def _mask(width):
    return (1 << width) - 1 if width > 0 else 0


class RelativeIdeal:
    __slots__ = ("parent", "min_element", "threshold", "window")

    def __init__(self, parent: NumericalSemigroup, lo: int, bits: int, hi: int):
        """Build from membership ``bits`` on ``[lo, hi)``; ``[hi, oo)`` is inside."""
        width = hi - lo
        bits &= _mask(width)
        mu = lo + (bits & -bits).bit_length() - 1 if bits else hi
        bits >>= mu - lo
        width = hi - mu
        holes = ~bits & _mask(width)
        tau = mu + holes.bit_length()
        self.parent = parent
        self.min_element = mu
        self.threshold = tau
        self.window = bits & _mask(tau - mu)

    # -- membership --------------------------------------------------------

    def __contains__(self, z: int) -> bool:
        if z >= self.threshold:
            return True
        if z < self.min_element:
            return False
        return bool(self.window >> (z - self.min_element) & 1)

    def bits_on(self, lo: int, hi: int) -> int:
        """Membership bitset of [lo, hi) (bit i stands for lo + i)."""
        if hi <= lo:
            return 0
        mu, tau = self.min_element, self.threshold
        full = _mask(hi - lo)
        tail = full & ~_mask(tau - lo) if tau > lo else full
        if mu >= lo:
            body = self.window << (mu - lo)
        else:
            body = self.window >> (lo - mu)
        return (body | tail) & full

    def elements_below(self, hi: int) -> list[int]:
        return [z for z in range(self.min_element, hi) if z in self]

    # -- equality ----------------------------------------------------------

    def _key(self):
        return (self.min_element, self.threshold, self.window)

    def __eq__(self, other):
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return self.parent == other.parent and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        shown = self.elements_below(self.threshold)
        return f"RelativeIdeal({shown} U [{self.threshold}, oo))"

    def is_closed(self) -> bool:
        """Check ``I + S`` inside ``I`` on the finite window."""
        return all(
            (z + g) in self
            for z in self.elements_below(self.threshold)
            for g in self.parent.minimal_generators
        )


def _same_parent(I, J):
    if I.parent != J.parent:
        raise ParentMismatch(f"{I.parent!r} vs {J.parent!r}")


# -- constructors -----------------------------------------------------------

def ideal_from_generators(S: NumericalSemigroup, xs: Iterable[int]) -> RelativeIdeal:
    xs = sorted(set(int(x) for x in xs))
    if not xs:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = xs[0]
    hi = xs[0] + S.conductor
    sbits = S.bits_upto(hi - lo)
    bits = 0
    for x in xs:
        if x < hi:
            bits |= sbits << (x - lo)
    return RelativeIdeal(S, lo, bits, hi)


def semigroup_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    return ideal_from_generators(S, [0])


def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    hi = max(S.conductor, 1)
    return RelativeIdeal(S, 0, S.bits_upto(hi) & ~1, hi)


def conductor_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal(S, S.conductor, 0, S.conductor)


def natural_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The nonnegative integers, i.e. the value set of the integral closure."""
    return RelativeIdeal(S, 0, 0, 0)


def canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """The standard canonical ideal ``{F - a : a not in S}``."""
    F = S.frobenius
    bits = 0
    for z in range(S.conductor):
        if (F - z) not in S:
            bits |= 1 << z
    return RelativeIdeal(S, 0, bits, S.conductor)


# -- operations ---------------------------------------------------------------

def translate(I: RelativeIdeal, z: int) -> RelativeIdeal:
    return RelativeIdeal(I.parent, I.min_element + z, I.window, I.threshold + z)


def add(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    _same_parent(I, J)
    lo = I.min_element + J.min_element
    hi = min(I.threshold + J.min_element, J.threshold + I.min_element)
    width = hi - lo
    jbits = J.bits_on(J.min_element, J.min_element + width)
    bits = 0
    for a in range(I.min_element, hi - J.min_element):
        if a in I:
            bits |= jbits << (a - I.min_element)
    return RelativeIdeal(I.parent, lo, bits, hi)


def intersect(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    _same_parent(I, J)
    lo = max(I.min_element, J.min_element)
    hi = max(I.threshold, J.threshold, lo)
    return RelativeIdeal(I.parent, lo, I.bits_on(lo, hi) & J.bits_on(lo, hi), hi)


def union(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    _same_parent(I, J)
    lo = min(I.min_element, J.min_element)
    hi = max(min(I.threshold, J.threshold), lo)
    return RelativeIdeal(I.parent, lo, I.bits_on(lo, hi) | J.bits_on(lo, hi), hi)


def difference(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    """The ideal quotient ``I - J = {z : z + J inside I}``."""
    _same_parent(I, J)
    mu_j, tau_j = J.min_element, J.threshold
    lo = I.min_element - mu_j
    hi = max(I.threshold - mu_j, lo)
    jw = J.window
    ibits = I.bits_on(lo + mu_j, hi + tau_j)
    bits = 0
    for z in range(lo, hi):
        # the tail [z + tau_j, oo) must lie in I
        if z + tau_j < I.threshold:
            continue
        if (ibits >> (z - lo)) & jw == jw:
            bits |= 1 << (z - lo)
    return RelativeIdeal(I.parent, lo, bits, hi)


def contains_ideal(I: RelativeIdeal, J: RelativeIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_parent(I, J)
    return _first_outside(I, J) is None


def _first_outside(I, J):
    lo = J.min_element
    hi = max(I.threshold, J.threshold, lo)
    extra = J.bits_on(lo, hi) & ~I.bits_on(lo, hi)
    if extra:
        return lo + (extra & -extra).bit_length() - 1
    return None


def length_between(I: RelativeIdeal, J: RelativeIdeal) -> int:
    """``|I \\ J|`` for ``J`` inside ``I``."""
    _same_parent(I, J)
    w = _first_outside(I, J)
    if w is not None:
        raise NotContained(w, f"{w} lies in the smaller ideal but not in the larger one")
    lo = I.min_element
    hi = max(I.threshold, J.threshold, lo)
    return bin(I.bits_on(lo, hi) & ~J.bits_on(lo, hi)).count("1")


# -- expression syntax used by the CLI ---------------------------------------

_TOKEN = re.compile(r"\s*(gens:\s*-?\d+(?:\s*,\s*-?\d+)*|shift|omega|[MCSN]|-?\d+|[()+\-&,])")


def parse_ideal_expression(S: NumericalSemigroup, text: str) -> RelativeIdeal:
    """Evaluate an ideal expression over ``S``.

    Atoms: ``omega``, ``M``, ``C`` (conductor), ``S``, ``N`` (nonnegative
    integers), ``gens: z1,z2,...`` and ``shift(expr, k)``.  Binary
    operators, left associative with equal precedence: ``+`` sum,
    ``-`` quotient ``{z : z + J in I}``, ``&`` intersection.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SemigroupError(f"cannot parse ideal expression at {text[pos:]!r}")
        tokens.append(m.group(1).replace(" ", ""))
        pos = m.end()
    named = {
        "omega": canonical_ideal,
        "M": maximal_ideal,
        "C": conductor_ideal,
        "S": semigroup_ideal,
        "N": natural_ideal,
    }
    idx = [0]

    def peek():
        return tokens[idx[0]] if idx[0] < len(tokens) else None

    def take(expected=None):
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise SemigroupError(f"expected {expected or 'a term'} in {text!r}")
        idx[0] += 1
        return tok

    def atom():
        tok = take()
        if tok in named:
            return named[tok](S)
        if tok.startswith("gens:"):
            return ideal_from_generators(S, [int(v) for v in tok[5:].split(",")])
        if tok == "(":
            val = expr()
            take(")")
            return val
        if tok == "shift":
            take("(")
            val = expr()
            take(",")
            k = take()
            take(")")
            try:
                return translate(val, int(k))
            except ValueError:
                raise SemigroupError(f"shift amount must be an integer, got {k!r}") from None
        raise SemigroupError(f"unexpected token {tok!r} in {text!r}")

    def expr():
        val = atom()
        while peek() in ("+", "-", "&"):
            op = take()
            rhs = atom()
            if op == "+":
                val = add(val, rhs)
            elif op == "-":
                val = difference(val, rhs)
            else:
                val = intersect(val, rhs)
        return val

    result = expr()
    if peek() is not None:
        raise SemigroupError(f"trailing input {tokens[idx[0]:]} in {text!r}")
    return result
