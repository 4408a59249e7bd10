"""Shared helpers: seeded random formulas and valuations."""

from __future__ import annotations

import random
from fractions import Fraction

from rieszlogic.syntax import Formula, Imp, Join, MetaVar, Pos, Var, ZERO
from rieszlogic.semantics import Valuation

VAR_NAMES = ("a", "b", "c", "d")


def random_rl_formula(rng: random.Random, max_connectives: int = 12, max_vars: int = 4) -> Formula:
    names = VAR_NAMES[:max_vars]

    def build(budget: int) -> Formula:
        if budget <= 0:
            return ZERO if rng.random() < 0.15 else Var(rng.choice(names))
        split = rng.randrange(budget)
        left, right = build(split), build(budget - 1 - split)
        return Imp(left, right) if rng.random() < 0.55 else Join(left, right)

    return build(rng.randint(1, max_connectives))


def random_bal_formula(rng: random.Random, max_connectives: int = 12, max_vars: int = 4) -> Formula:
    names = VAR_NAMES[:max_vars]

    def build(budget: int) -> Formula:
        if budget <= 0:
            return Var(rng.choice(names))
        if rng.random() < 0.3:
            return Pos(build(budget - 1))
        split = rng.randrange(budget)
        return Imp(build(split), build(budget - 1 - split))

    return build(rng.randint(1, max_connectives))


def random_schema(rng: random.Random, max_connectives: int = 8) -> Formula:
    metas = ("PHI", "PSI", "CHI")

    def build(budget: int) -> Formula:
        if budget <= 0:
            r = rng.random()
            if r < 0.4:
                return MetaVar(rng.choice(metas))
            if r < 0.5:
                return ZERO
            return Var(rng.choice(VAR_NAMES))
        split = rng.randrange(budget)
        left, right = build(split), build(budget - 1 - split)
        return Imp(left, right) if rng.random() < 0.55 else Join(left, right)

    return build(rng.randint(1, max_connectives))


def random_valuation(rng: random.Random, names, dimension: int = 1, bound: int = 10) -> Valuation:
    return Valuation(
        dimension,
        {
            name: tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dimension))
            for name in names
        },
    )
