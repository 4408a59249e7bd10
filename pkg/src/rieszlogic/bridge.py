"""Translations between RL and BAL.

The two logics describe the same models with different assertion modes:
an RL formula asserts its value is positive, a BAL formula asserts its
value is zero.  Consequently:

* an RL statement ``x`` becomes the single BAL statement
  ``(x -> 0) ^+`` (the negative part of x is zero);
* a BAL statement ``x`` becomes the pair of RL statements ``x`` and
  ``x -> 0`` (zero is the only vector that is positive both ways).

BAL has no ``0`` constant and no join, so the forward translation
encodes them:

* ``0`` is rendered as ``z -> z`` for the reserved variable ``z``;
  its value is the group zero under every valuation;
* ``x \\/ y`` is rendered through the lattice-group identity
  ``x \\/ y = x + (y - x)^+`` as ``((x -> y) ^+ -> (z -> z)) -> x``.
  The encoding is checked semantically (see check_equivalence and the
  test suite) rather than taken on faith.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .syntax import Formula, Imp, Join, Pos, Var, Zero, variables
from .semantics import Valuation, holds_bal, holds_rl

#: variable reserved for the zero encoding in translated formulas
RESERVED_ZERO_VAR = "z"


class ReservedVariableError(Exception):
    """The input formula uses the variable reserved for the translation."""


@dataclass(frozen=True)
class RlPair:
    """The two RL statements equivalent to one BAL statement."""

    first: Formula
    second: Formula  # always first -> 0

    def __post_init__(self):
        if self.second != Imp(self.first, Zero()):
            raise ValueError("second component must be first -> 0")


def _bal_zero() -> Formula:
    z = Var(RESERVED_ZERO_VAR)
    return Imp(z, z)


def rl_to_bal(f: Formula) -> Formula:
    """BAL statement equivalent to the RL statement f, as ``(T(f) -> 0)^+``."""
    if RESERVED_ZERO_VAR in variables(f):
        raise ReservedVariableError(
            f"formula uses the reserved variable {RESERVED_ZERO_VAR!r}"
        )
    return Pos(Imp(_translate(f), _bal_zero()))


def _translate(f: Formula) -> Formula:
    if isinstance(f, Var):
        return f
    if isinstance(f, Zero):
        return _bal_zero()
    if isinstance(f, Imp):
        return Imp(_translate(f.left), _translate(f.right))
    if isinstance(f, Join):
        left, right = _translate(f.left), _translate(f.right)
        # x \/ y = x + (y - x)^+, written with -> and ^+ only
        return Imp(Imp(Pos(Imp(left, right)), _bal_zero()), left)
    raise TypeError(f"not an RL formula: {f!r}")


def bal_to_rl(f: Formula) -> RlPair:
    """The pair of RL statements equivalent to the BAL statement f."""
    first = _untranslate(f)
    return RlPair(first, Imp(first, Zero()))


def _untranslate(f: Formula) -> Formula:
    if isinstance(f, Var):
        return f
    if isinstance(f, Imp):
        return Imp(_untranslate(f.left), _untranslate(f.right))
    if isinstance(f, Pos):
        return Join(_untranslate(f.inner), Zero())
    raise TypeError(f"not a BAL formula: {f!r}")


@dataclass(frozen=True)
class EquivalenceReport:
    trials: int
    discrepancy: Optional[tuple[int, Valuation]]  # lowest failing trial, if any

    @property
    def agreed(self) -> bool:
        return self.discrepancy is None


def check_equivalence(
    f: Formula,
    trials: int = 1000,
    seed: int = 0,
    dimension: int = 1,
    bound: int = 10,
) -> EquivalenceReport:
    """Sample valuations and compare holds_rl(f) with holds_bal(rl_to_bal(f))."""
    translated = rl_to_bal(f)
    names = sorted(variables(f))
    rng = random.Random(seed)
    span = 2 * bound + 1
    for trial in range(trials):
        assignment = {
            name: tuple(Fraction(rng.randrange(span) - bound) for _ in range(dimension))
            for name in names
        }
        v = Valuation(dimension, assignment)
        if holds_rl(f, v) != holds_bal(translated, v):
            return EquivalenceReport(trials, (trial, v))
    return EquivalenceReport(trials, None)
