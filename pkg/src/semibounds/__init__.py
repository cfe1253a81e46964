"""Invariants, ideals and inequality checks for numerical and good semigroups."""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .semigroup import InvariantReport, NumericalSemigroup, from_generators, invariants, parse_generators
from .ideals import (
    RelativeIdeal,
    canonical_ideal,
    conductor_ideal,
    difference,
    ideal_from_generators,
    length_between,
    maximal_ideal,
)
from .classify import is_almost_symmetric, is_lech_extremal, is_positioned, is_symmetric, wilf_generator_exists
from .inequalities import CHECK_IDS, ag_bookkeeping, check_all, equality_analysis
from .enumeration import CensusSummary, brute_force_census, children, enumerate_by_genus, root, sweep
from .plane import GoodIdealPlane, GoodSemigroupPlane, distance, distance_oracle, invariants_plane
from .parametrization import from_parametrization
