"""Evaluating formulas in rational vector models and refuting non-theorems.

A formula's value is a vector: variables pick their assigned vectors,
0 is the zero vector, x -> y subtracts, x \\/ y takes the componentwise
maximum.  The formula holds when every coordinate is >= 0.

Run with: python demos/models_and_countermodels.py
"""

from rieszlogic import (
    CounterExample,
    Valuation,
    decide_valid,
    eval_rl,
    holds_rl,
    parse_rl,
    random_falsify,
    vector,
)
from rieszlogic.semantics import format_valuation

v = Valuation(2, {"p": vector(2, 0), "q": vector(1, 3)})
f = parse_rl("p -> q")
print(f"value of p -> q at p=(2,0), q=(1,3): {eval_rl(f, v)}")
print(f"holds: {holds_rl(f, v)}   (the first coordinate went negative)")
print()

print("the randomized falsifier samples small integer models:")
bad = parse_rl("a \\/ b -> a")
witness = random_falsify(bad, trials=1000, seed=0)
print(f"  witness against {bad}:")
print("  " + format_valuation(witness).replace("\n", "\n  "))
print()

print("the decision procedure is exact and extracts countermodels:")
for text in ["a -> a \\/ b", "a \\/ (a -> 0)", "a \\/ b -> a", "a (+) b -> a"]:
    verdict = decide_valid(parse_rl(text))
    if isinstance(verdict, CounterExample):
        point = format_valuation(verdict.valuation).replace("\n", ", ")
        print(f"  {text:18s} COUNTEREXAMPLE at {point}")
    else:
        print(f"  {text:18s} VALID")
