"""Numerical semigroups and their scalar invariants.

A semigroup is stored as a single integer bitset of its members in
``[0, c)``; every integer ``>= c`` is implicitly a member.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Mapping

from .errors import EmptyGenerators, NotAMember, NotCofinite, SemigroupError


def _closure_bits(gens, bound):
    """Bitset of the additive closure of ``gens`` restricted to [0, bound]."""
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for g in gens:
        step = g
        while step <= bound:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


def _popcount(x):
    return bin(x).count("1")


class NumericalSemigroup:
    """Cofinite submonoid of the nonnegative integers.

    Instances are immutable; derived invariants are computed on first use.
    """

    def __init__(self, member_bits: int, conductor: int):
        # trusted constructor: bits of S on [0, conductor), conductor minimal
        self._bits = member_bits
        self.conductor = conductor

    # -- construction ------------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] <= 0:
            raise SemigroupError(f"generators must be positive, got {gens[0]}")
        d = reduce(math.gcd, gens)
        if d != 1:
            raise NotCofinite(d)
        # (min gen)(max gen) bounds the Frobenius number from above
        bound = gens[0] * gens[-1]
        bits = _closure_bits(gens, bound)
        holes = ~bits & ((1 << (bound + 1)) - 1)
        conductor = holes.bit_length()
        return cls(bits & ((1 << conductor) - 1), conductor)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gaps = set(int(x) for x in gaps)
        if any(x <= 0 for x in gaps):
            raise SemigroupError("gaps must be positive integers")
        conductor = max(gaps) + 1 if gaps else 0
        bits = 0
        for x in range(conductor):
            if x not in gaps:
                bits |= 1 << x
        S = cls(bits, conductor)
        for a in S.elements_below(conductor):
            for b in S.elements_below(conductor - a):
                if a and b and (a + b) in gaps:
                    raise SemigroupError(f"{a} + {b} = {a + b} is listed as a gap")
        return S

    @classmethod
    def full(cls) -> "NumericalSemigroup":
        return cls(0, 0)

    # -- membership --------------------------------------------------------

    def __contains__(self, z: int) -> bool:
        if z >= self.conductor:
            return True
        if z < 0:
            return False
        return bool(self._bits >> z & 1)

    def contains(self, z: int) -> bool:
        return z in self

    def bits_upto(self, hi: int) -> int:
        """Membership bitset of [0, hi)."""
        if hi <= self.conductor:
            return self._bits & ((1 << max(hi, 0)) - 1)
        return self._bits | (((1 << hi) - 1) ^ ((1 << self.conductor) - 1))

    def elements_below(self, hi: int):
        return [z for z in range(max(hi, 0)) if z in self]

    # -- basic invariants --------------------------------------------------

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def gaps(self) -> int:
        """Bitset over [0, c) marking the integers not in S."""
        return ~self._bits & ((1 << self.conductor) - 1)

    def gap_list(self) -> list[int]:
        g = self.gaps
        return [z for z in range(self.conductor) if g >> z & 1]

    @cached_property
    def genus(self) -> int:
        return _popcount(self.gaps)

    @cached_property
    def multiplicity(self) -> int:
        z = 1
        while z not in self:
            z += 1
        return z

    @property
    def n(self) -> int:
        """Number of elements of S below the conductor."""
        return _popcount(self._bits)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        e = self.multiplicity
        hi = self.conductor + e + 1
        members = self.bits_upto(hi)
        nonzero = members & ~1
        sums = 0
        for a in range(e, hi):
            if nonzero >> a & 1:
                sums |= nonzero << a
        atoms = nonzero & ~sums & ((1 << hi) - 1)
        return tuple(z for z in range(hi) if atoms >> z & 1)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def is_full(self) -> bool:
        return self.conductor == 0

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self._bits == other._bits

    def __hash__(self):
        return hash((self.conductor, self._bits))

    def __repr__(self):
        return f"NumericalSemigroup<{', '.join(map(str, self.minimal_generators))}>"

    # -- derived sets ------------------------------------------------------

    def apery_set(self, m: int) -> list[int]:
        if m <= 0 or m not in self:
            raise NotAMember(f"{m} is not a nonzero element of {self!r}")
        found: dict[int, int] = {}
        z = 0
        while len(found) < m:
            if z in self and z % m not in found:
                found[z % m] = z
            z += 1
        return sorted(found.values())

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        gens = self.minimal_generators
        return tuple(z for z in self.gap_list() if all((z + g) in self for g in gens))

    def remove_generator(self, g: int) -> "NumericalSemigroup":
        """S minus the minimal generator ``g``; requires ``g > F(S)``."""
        if g <= self.frobenius or g not in self.minimal_generators:
            raise SemigroupError(f"{g} is not a removable generator of {self!r}")
        bits = self.bits_upto(g + 1) & ~(1 << g)
        return NumericalSemigroup(bits, g + 1)

    def invariants(self) -> "InvariantReport":
        return invariants(self)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def parse_generators(text: str) -> NumericalSemigroup:
    """Parse the whitespace separated generator format, e.g. ``"7 9 11 19"``."""
    try:
        gens = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise SemigroupError(f"not an integer list: {text!r}") from exc
    return NumericalSemigroup.from_generators(gens)


def contains(S: NumericalSemigroup, z: int) -> bool:
    return z in S


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    return S.apery_set(m)


@dataclass(frozen=True)
class InvariantReport:
    e: int
    nu: int
    frobenius: int
    conductor: int
    n: int
    genus: int
    depth_q: int
    type_t: int
    pseudo_frobenius: tuple[int, ...]
    minimal_generators: tuple[int, ...]
    flags: Mapping[str, bool] = field(default_factory=dict)

    def as_record(self) -> dict:
        rec = {
            "e": self.e,
            "nu": self.nu,
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "n": self.n,
            "genus": self.genus,
            "depth_q": self.depth_q,
            "type_t": self.type_t,
            "pseudo_frobenius": list(self.pseudo_frobenius),
            "minimal_generators": list(self.minimal_generators),
        }
        rec.update(self.flags)
        return rec


def invariants(S: NumericalSemigroup) -> InvariantReport:
    e = S.multiplicity
    c = S.conductor
    pf = S.pseudo_frobenius
    return InvariantReport(
        e=e,
        nu=S.embedding_dimension,
        frobenius=S.frobenius,
        conductor=c,
        n=S.n,
        genus=S.genus,
        depth_q=-(-c // e),
        type_t=len(pf),
        pseudo_frobenius=pf,
        minimal_generators=S.minimal_generators,
    )
