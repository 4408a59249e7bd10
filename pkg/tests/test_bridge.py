import random

import pytest

from rieszlogic.bridge import (
    RESERVED_ZERO_VAR,
    ReservedVariableError,
    RlPair,
    bal_to_rl,
    check_equivalence,
    rl_to_bal,
)
from rieszlogic.decide import Valid, decide_bal_valid
from rieszlogic.semantics import eval_bal, eval_rl, holds_bal, holds_rl
from rieszlogic.syntax import (
    Imp,
    Join,
    Zero,
    format_formula,
    parse_bal,
    parse_rl,
    variables,
)
from util import random_bal_formula, random_rl_formula, random_valuation


def test_variable_translates_to_clamped_negation():
    translated = rl_to_bal(parse_rl("a"))
    assert translated == parse_bal("(a -> z -> z) ^+")


def test_zero_translates_to_self_implication():
    translated = rl_to_bal(parse_rl("0"))
    assert translated == parse_bal("((z -> z) -> z -> z) ^+")


def test_join_with_zero_translates_to_bal_tautology():
    translated = rl_to_bal(parse_rl("a \\/ 0"))
    assert isinstance(decide_bal_valid(translated), Valid)


def test_reserved_variable_refused():
    with pytest.raises(ReservedVariableError):
        rl_to_bal(parse_rl(f"{RESERVED_ZERO_VAR} -> a"))


def test_bal_to_rl_implication():
    pair = bal_to_rl(parse_bal("x -> y"))
    assert pair == RlPair(parse_rl("x -> y"), parse_rl("(x -> y) -> 0"))


def test_bal_to_rl_positive_part():
    pair = bal_to_rl(parse_bal("x ^+"))
    assert format_formula(pair.first) == "x \\/ 0"
    assert format_formula(pair.second) == "x \\/ 0 -> 0"


def test_bal_to_rl_nested():
    pair = bal_to_rl(parse_bal("(x -> y) ^+"))
    assert pair.first == parse_rl("(x -> y) \\/ 0")
    assert pair.second == Imp(pair.first, Zero())


def test_pair_invariant_enforced():
    with pytest.raises(ValueError):
        RlPair(parse_rl("a"), parse_rl("b -> 0"))


# -- semantic equivalence -------------------------------------------------------

def test_check_equivalence_examples():
    assert check_equivalence(parse_rl("a -> a \\/ b"), trials=500, seed=3).agreed
    assert check_equivalence(parse_rl("a"), trials=500, seed=3).agreed
    assert check_equivalence(parse_rl("0"), trials=20, seed=3).agreed


def test_forward_round_trip_law_sampled():
    rng = random.Random(31)
    for _ in range(150):
        f = random_rl_formula(rng, max_connectives=8)
        translated = rl_to_bal(f)
        for _ in range(20):
            v = random_valuation(rng, variables(f) | {RESERVED_ZERO_VAR}, dimension=2, bound=6)
            assert holds_rl(f, v) == holds_bal(translated, v)


def test_backward_round_trip_law_sampled():
    rng = random.Random(32)
    for _ in range(150):
        g = random_bal_formula(rng, max_connectives=8)
        pair = bal_to_rl(g)
        for _ in range(20):
            v = random_valuation(rng, variables(g), dimension=2, bound=6)
            assert holds_bal(g, v) == (holds_rl(pair.first, v) and holds_rl(pair.second, v))


def test_join_encoding_matches_join_value():
    # the encoded join evaluates to the componentwise maximum itself
    rng = random.Random(33)
    f = parse_rl("a \\/ b")
    encoded = rl_to_bal(f)
    # strip the outer (.. -> 0)^+ wrapper: evaluate the inner translation
    inner = encoded.inner.left
    for _ in range(200):
        v = random_valuation(rng, {"a", "b", RESERVED_ZERO_VAR}, dimension=2, bound=8)
        assert eval_bal(inner, v) == eval_rl(f, v)


def test_zero_variable_value_is_irrelevant():
    f = parse_rl("a \\/ 0 -> a ^+")
    translated = rl_to_bal(f)
    rng = random.Random(34)
    for _ in range(100):
        v = random_valuation(rng, {"a", RESERVED_ZERO_VAR}, dimension=1, bound=50)
        assert holds_bal(translated, v) == holds_rl(f, v)
