"""Tour of the two grammars: core connectives, sugar, and round trips.

Run with: python demos/parsing_and_printing.py
"""

from rieszlogic import format_formula, parse_bal, parse_rl

print("== the RL grammar ==")
for text in [
    "a -> a \\/ b",          # implication is subtraction, join is max
    "a -> b -> c",           # -> associates to the right
    "a \\/ b \\/ c",         # \/ associates to the left
    "(a -> b) -> (c -> a) -> c -> b",
]:
    f = parse_rl(text)
    print(f"  {text:38s} parses to {f}")

print()
print("== sugar expands into the three primitives ==")
for text in ["a ^+", "~a", "a (+) b", "a /\\ b"]:
    print(f"  {text:10s} means {format_formula(parse_rl(text))}")

print()
print("== BAL keeps -> and postfix ^+ only ==")
for text in ["x ^+", "(x -> y) ^+", "x ^+ ^+ -> x ^+"]:
    f = parse_bal(text)
    print(f"  {text:18s} parses to {f}")

print()
print("== canonical text is a fixed point of parse/print ==")
f = parse_rl("((a -> (b)) -> ((c) \\/ 0))")
canonical = format_formula(f)
print(f"  noisy input prints as {canonical!r}")
assert parse_rl(canonical) == f
print("  and reparses to the identical tree")
