"""Moving between the positivity reading (RL) and the equality reading (BAL).

An RL statement asserts value >= 0; a BAL statement asserts value = 0.
One BAL statement carries the content of a pair of RL statements, and a
single RL statement becomes the BAL statement that its negative part
vanishes.

Run with: python demos/two_logics.py
"""

from rieszlogic import (
    bal_to_rl,
    check_equivalence,
    decide_bal_valid,
    decide_valid,
    format_formula,
    parse_bal,
    parse_rl,
    rl_to_bal,
)
from rieszlogic.decide import Valid

print("== RL to BAL ==")
for text in ["a", "0", "a -> b", "a \\/ 0"]:
    translated = rl_to_bal(parse_rl(text))
    print(f"  {text:10s} becomes {format_formula(translated)}")

print()
print("== BAL to RL: one statement, two halves ==")
for text in ["x -> y", "x ^+", "(x -> y) ^+"]:
    pair = bal_to_rl(parse_bal(text))
    print(f"  {text:12s} becomes {format_formula(pair.first)}  AND  {format_formula(pair.second)}")

print()
print("== the translations preserve validity ==")
axiom = parse_rl("a -> a \\/ b")
print(f"  {format_formula(axiom)} valid in RL: {isinstance(decide_valid(axiom), Valid)}")
translated = rl_to_bal(axiom)
print(f"  its translation valid in BAL: {isinstance(decide_bal_valid(translated), Valid)}")

print()
print("== sampled agreement on arbitrary formulas ==")
for text in ["a", "a -> b", "a \\/ b -> b \\/ a", "a /\\ b -> a"]:
    outcome = check_equivalence(parse_rl(text), trials=2000, seed=11)
    print(f"  {text:18s} agreed on {outcome.trials} sampled valuations: {outcome.agreed}")
