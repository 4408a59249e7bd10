import random
from fractions import Fraction

import pytest

from rieszlogic.kernel import RL_AXIOMS
from rieszlogic.semantics import (
    Valuation,
    ValuationError,
    eval_bal,
    eval_rl,
    evaluate,
    format_valuation,
    holds_bal,
    holds_rl,
    parse_valuation,
    random_falsify,
    vector,
)
from rieszlogic.syntax import Imp, Join, Var, parse_bal, parse_rl, substitute, variables
from util import random_rl_formula, random_valuation

# rows from the shipped term-document fixture, reused as handy vectors
ORANGE = vector(0, 2, 1, 0, 0, 7, 0, 3)
FRUIT = vector(0, 1, 3, 0, 4, 3, 5, 3)


def test_eval_implication_subtracts():
    v = Valuation(2, {"p": vector(2, 0), "q": vector(1, 3)})
    assert eval_rl(parse_rl("p -> q"), v) == vector(-1, 3)


def test_eval_zero_formula():
    v = Valuation(3, {"x": vector(1, 2, 3)})
    assert eval_rl(parse_rl("0"), v) == vector(0, 0, 0)


def test_eval_join_is_componentwise_max():
    v = Valuation(8, {"orange": ORANGE, "fruit": FRUIT})
    assert eval_rl(parse_rl("orange \\/ fruit"), v) == vector(0, 2, 3, 0, 4, 7, 5, 3)


def test_eval_bal_positive_part():
    v = Valuation(2, {"x": vector(-2, 5)})
    assert eval_bal(parse_bal("x ^+"), v) == vector(0, 5)


def test_eval_bal_implication():
    v = Valuation(1, {"x": vector(1), "y": vector(1)})
    assert eval_bal(parse_bal("x -> y"), v) == vector(0)


def test_eval_bal_clamped_difference():
    v = Valuation(2, {"x": vector(3, 1), "y": vector(1, 4)})
    assert eval_bal(parse_bal("(x -> y) ^+"), v) == vector(0, 3)


def test_holds_rl_examples():
    v = Valuation(2, {"p": vector(2, 0), "q": vector(1, 3)})
    assert not holds_rl(parse_rl("p -> q"), v)
    assert holds_bal(parse_bal("x -> y"), Valuation(1, {"x": vector(1), "y": vector(1)}))


def test_every_formula_holds_at_zero_valuation():
    # all values are homogeneous, so the zero valuation gives the zero vector
    rng = random.Random(11)
    v = Valuation(1, {})
    for _ in range(50):
        f = random_rl_formula(rng)
        assert eval_rl(f, v) == vector(0)
        assert holds_rl(f, v)


def test_unmapped_variables_default_to_zero():
    v = Valuation(2, {})
    assert eval_rl(parse_rl("p -> q"), v) == vector(0, 0)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValuationError):
        Valuation(2, {"x": vector(1)})


def test_evaluate_wrapper():
    v = Valuation(1, {"x": vector(-1)})
    rl = evaluate(parse_rl("x"), v, "RL")
    assert (rl.value, rl.holds) == (vector(-1), False)
    bal = evaluate(parse_bal("x -> x"), v, "BAL")
    assert (bal.value, bal.holds) == (vector(0), True)


# -- falsifier ----------------------------------------------------------------

def test_falsify_finds_witness():
    f = parse_rl("a \\/ b -> a")
    witness = random_falsify(f, trials=200, seed=5)
    assert witness is not None
    assert not holds_rl(f, witness)


def test_falsify_axiom_has_no_witness():
    assert random_falsify(parse_rl("a -> a \\/ b"), trials=2000, seed=5) is None


def test_falsify_zero_has_no_witness():
    assert random_falsify(parse_rl("0"), trials=50, seed=5) is None


def test_falsify_deterministic_per_seed():
    f = parse_rl("a \\/ b -> a")
    assert random_falsify(f, trials=100, seed=9) == random_falsify(f, trials=100, seed=9)


def test_falsify_higher_dimension():
    f = parse_rl("a \\/ b -> a")
    witness = random_falsify(f, trials=200, dimension=3, seed=1)
    assert witness is not None and witness.dimension == 3
    assert not holds_rl(f, witness)


# -- semantic laws ------------------------------------------------------------

def test_modus_ponens_preserved_by_every_valuation():
    rng = random.Random(12)
    for _ in range(200):
        f = random_rl_formula(rng, max_connectives=6)
        g = random_rl_formula(rng, max_connectives=6)
        v = random_valuation(rng, variables(f) | variables(g), dimension=2)
        if holds_rl(f, v) and holds_rl(Imp(f, g), v):
            assert holds_rl(g, v)


def test_join_monotonicity_preserved_by_every_valuation():
    rng = random.Random(13)
    for _ in range(200):
        f = random_rl_formula(rng, max_connectives=5)
        g = random_rl_formula(rng, max_connectives=5)
        c = random_rl_formula(rng, max_connectives=4)
        names = variables(f) | variables(g) | variables(c)
        v = random_valuation(rng, names, dimension=2)
        if holds_rl(Imp(f, g), v):
            assert holds_rl(Imp(Join(f, c), Join(g, c)), v)


def test_axiom_instances_hold_everywhere():
    rng = random.Random(14)
    fresh = {"PHI": Var("p"), "PSI": Var("q"), "CHI": Var("r")}
    for name, schema in RL_AXIOMS.items():
        inst = substitute(schema, fresh)
        for _ in range(100):
            v = random_valuation(rng, variables(inst), dimension=2)
            assert holds_rl(inst, v), name


def test_positive_negative_decomposition():
    # x = x^+ - x^- pointwise; x^- is (x -> 0) \/ 0
    rng = random.Random(15)
    x = parse_rl("x")
    difference = parse_rl("((x -> 0) \\/ 0) -> x \\/ 0")
    for _ in range(100):
        v = random_valuation(rng, {"x"}, dimension=3)
        assert eval_rl(x, v) == eval_rl(difference, v)


def test_homogeneity_under_nonnegative_scaling():
    rng = random.Random(16)
    for _ in range(100):
        f = random_rl_formula(rng)
        v = random_valuation(rng, variables(f), dimension=2)
        scaled = v.scale(Fraction(3, 2))
        assert eval_rl(f, scaled) == tuple(Fraction(3, 2) * c for c in eval_rl(f, v))


def test_meet_sugar_evaluates_to_componentwise_min():
    rng = random.Random(17)
    meet = parse_rl("a /\\ b")
    for _ in range(100):
        v = random_valuation(rng, {"a", "b"}, dimension=2)
        expected = tuple(min(x, y) for x, y in zip(v.vector("a"), v.vector("b")))
        assert eval_rl(meet, v) == expected


def test_oplus_sugar_evaluates_to_addition():
    rng = random.Random(18)
    plus = parse_rl("a (+) b")
    for _ in range(100):
        v = random_valuation(rng, {"a", "b"}, dimension=2)
        expected = tuple(x + y for x, y in zip(v.vector("a"), v.vector("b")))
        assert eval_rl(plus, v) == expected


# -- valuation text format ------------------------------------------------------

def test_parse_valuation_text():
    v = parse_valuation("x = (1, -2/3)\n# comment\ny = (0, 5)\n")
    assert v.dimension == 2
    assert v.vector("x") == (Fraction(1), Fraction(-2, 3))
    assert v.vector("y") == (Fraction(0), Fraction(5))


def test_valuation_round_trip():
    v = Valuation(2, {"x": vector("1/2", 3), "y": vector(-1, 0)})
    assert parse_valuation(format_valuation(v)) == v


def test_parse_valuation_rejects_bad_lines():
    for text in ("x = 1, 2", "x (1)", "x = ()", "X = (1)", "x = (1)\nx = (2)", "x = (1)\ny = (1, 2)", ""):
        with pytest.raises(ValuationError):
            parse_valuation(text)
