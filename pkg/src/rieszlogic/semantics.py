"""Models and evaluation.

A model is the additive group of rational n-vectors under the
componentwise order, which is a lattice order.  All arithmetic is exact
(``fractions.Fraction``); no floating point enters the logic side.

A valuation assigns a vector to each variable; unmapped variables
evaluate to the zero vector, so every valuation is total.

Evaluation clauses:

* a variable evaluates to its assigned vector,
* ``0`` evaluates to the zero vector,
* ``x -> y`` evaluates to ``value(y) - value(x)``,
* ``x \\/ y`` evaluates to the componentwise maximum,
* BAL ``x ^+`` evaluates to the componentwise maximum with zero.

An RL formula holds under a valuation when every coordinate of its
value is >= 0; a BAL formula holds when every coordinate equals 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .syntax import Formula, Imp, Join, MetaVar, Pos, Var, Zero, variables

Vector = tuple[Fraction, ...]


class ValuationError(Exception):
    """Malformed valuation (bad dimension or unparsable text)."""


def vector(*coords) -> Vector:
    """Build an exact vector from ints, strings or Fractions."""
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Valuation:
    """Assignment of rational n-vectors to variable names."""

    dimension: int
    assignment: Mapping[str, Vector] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 1:
            raise ValuationError("dimension must be >= 1")
        # detach from the caller's mapping; bindings are fixed at construction
        object.__setattr__(self, "assignment", dict(self.assignment))
        for name, vec in self.assignment.items():
            if len(vec) != self.dimension:
                raise ValuationError(
                    f"vector for {name!r} has length {len(vec)}, expected {self.dimension}"
                )

    def vector(self, name: str) -> Vector:
        zero = (Fraction(0),) * self.dimension
        return self.assignment.get(name, zero)

    def scale(self, factor: Fraction) -> "Valuation":
        return Valuation(
            self.dimension,
            {name: tuple(factor * c for c in vec) for name, vec in self.assignment.items()},
        )


def eval_rl(f: Formula, v: Valuation) -> Vector:
    """Value of an RL formula as a vector of exact rationals."""
    if isinstance(f, Var):
        return v.vector(f.name)
    if isinstance(f, Zero):
        return (Fraction(0),) * v.dimension
    if isinstance(f, Imp):
        lv, rv = eval_rl(f.left, v), eval_rl(f.right, v)
        return tuple(b - a for a, b in zip(lv, rv))
    if isinstance(f, Join):
        lv, rv = eval_rl(f.left, v), eval_rl(f.right, v)
        return tuple(max(a, b) for a, b in zip(lv, rv))
    if isinstance(f, MetaVar):
        raise TypeError(f"cannot evaluate schema metavariable {f.name!r}")
    raise TypeError(f"not an RL formula: {f!r}")


def eval_bal(f: Formula, v: Valuation) -> Vector:
    """Value of a BAL formula; ``x ^+`` takes the positive part."""
    if isinstance(f, Var):
        return v.vector(f.name)
    if isinstance(f, Imp):
        lv, rv = eval_bal(f.left, v), eval_bal(f.right, v)
        return tuple(b - a for a, b in zip(lv, rv))
    if isinstance(f, Pos):
        iv = eval_bal(f.inner, v)
        zero = Fraction(0)
        return tuple(max(c, zero) for c in iv)
    if isinstance(f, MetaVar):
        raise TypeError(f"cannot evaluate schema metavariable {f.name!r}")
    raise TypeError(f"not a BAL formula: {f!r}")


def holds_rl(f: Formula, v: Valuation) -> bool:
    """True iff every coordinate of the value is >= 0."""
    return all(c >= 0 for c in eval_rl(f, v))


def holds_bal(f: Formula, v: Valuation) -> bool:
    """True iff every coordinate of the value equals 0."""
    return all(c == 0 for c in eval_bal(f, v))


@dataclass(frozen=True)
class EvalResult:
    value: Vector
    holds: bool


def evaluate(f: Formula, v: Valuation, system: str = "RL") -> EvalResult:
    """Evaluate under either reading and report value plus holds flag."""
    if system == "RL":
        value = eval_rl(f, v)
        return EvalResult(value, all(c >= 0 for c in value))
    if system == "BAL":
        value = eval_bal(f, v)
        return EvalResult(value, all(c == 0 for c in value))
    raise ValueError(f"unknown system {system!r}")


# ---------------------------------------------------------------------------
# randomized falsifier

def compile_scalar(f: Formula) -> "tuple[tuple[str, ...], object]":
    """Compile an RL formula to a fast one-coordinate evaluator.

    Returns the sorted variable names and a function taking one integer
    (or Fraction) per variable.  Coordinates are independent under all
    connectives, so an n-dimensional evaluation is n scalar calls.
    """
    names = tuple(sorted(variables(f)))
    args = ", ".join(f"v_{name}" for name in names)

    def expr(g: Formula) -> str:
        if isinstance(g, Var):
            return f"v_{g.name}"
        if isinstance(g, Zero):
            return "0"
        if isinstance(g, Imp):
            return f"({expr(g.right)} - {expr(g.left)})"
        if isinstance(g, Join):
            return f"max({expr(g.left)}, {expr(g.right)})"
        raise TypeError(f"not an RL formula: {g!r}")

    fn = eval(f"lambda {args}: {expr(f)}" if names else f"lambda: {expr(f)}")
    return names, fn


def random_falsify(
    f: Formula,
    trials: int,
    dimension: int = 1,
    seed: int = 0,
    bound: int = 10,
) -> Optional[Valuation]:
    """Search for a valuation falsifying an RL formula.

    Samples integer coordinates uniformly from [-bound, bound].  Returns
    the valuation from the lowest-index successful trial, or None.
    Deterministic for a fixed seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    names, fn = compile_scalar(f)
    rng = random.Random(seed)
    span = 2 * bound + 1
    for _ in range(trials):
        coords = [
            tuple(rng.randrange(span) - bound for _ in range(dimension)) for _ in names
        ]
        falsified = False
        for k in range(dimension):
            if fn(*(coords[i][k] for i in range(len(names)))) < 0:
                falsified = True
                break
        if falsified:
            assignment = {
                name: tuple(Fraction(c) for c in coords[i]) for i, name in enumerate(names)
            }
            return Valuation(dimension, assignment)
    return None


# ---------------------------------------------------------------------------
# valuation text format: one binding per line, `var = (r1, r2, ..., rn)`

def parse_valuation(text: str) -> Valuation:
    assignment: dict[str, Vector] = {}
    dimension: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValuationError(f"line {lineno}: expected `var = (r1, ..., rn)`")
        name, _, rhs = line.partition("=")
        name, rhs = name.strip(), rhs.strip()
        if not name or not (name[0].islower() and name.isidentifier()):
            raise ValuationError(f"line {lineno}: bad variable name {name!r}")
        if not (rhs.startswith("(") and rhs.endswith(")")):
            raise ValuationError(f"line {lineno}: vector must be parenthesized")
        body = rhs[1:-1].strip()
        if not body:
            raise ValuationError(f"line {lineno}: empty vector")
        try:
            vec = tuple(Fraction(part.strip()) for part in body.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValuationError(f"line {lineno}: {exc}") from None
        if name in assignment:
            raise ValuationError(f"line {lineno}: duplicate binding for {name!r}")
        if dimension is None:
            dimension = len(vec)
        elif len(vec) != dimension:
            raise ValuationError(
                f"line {lineno}: vector length {len(vec)} != dimension {dimension}"
            )
        assignment[name] = vec
    if dimension is None:
        raise ValuationError("no bindings found")
    return Valuation(dimension, assignment)


def format_vector(vec: Iterable[Fraction]) -> str:
    return "(" + ", ".join(str(c) for c in vec) + ")"


def format_valuation(v: Valuation) -> str:
    lines = [f"{name} = {format_vector(vec)}" for name, vec in sorted(v.assignment.items())]
    return "\n".join(lines)
