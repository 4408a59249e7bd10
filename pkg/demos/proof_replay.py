"""Replaying the shipped Hilbert-style derivations through the checker.

The checker is a pure replayer: every modus ponens is a literal
structural comparison against fully written-out lines, and registered
theorems can be cited as derived rules, instantiated by matching.

Run with: python demos/proof_replay.py
"""

from rieszlogic import TheoremLibrary, check_proof, parse_proof
from rieszlogic.kernel import CORPUS_NAMES, corpus_text
from rieszlogic.syntax import format_formula

print("== replaying the corpus in dependency order ==")
library = TheoremLibrary()
for stem in CORPUS_NAMES:
    proof = parse_proof(corpus_text(stem))
    report = check_proof(proof, library)
    library = library.register(proof)
    conclusion = format_formula(proof.conclusion_formula)
    premises = " , ".join(format_formula(a) for a in proof.assumptions) or "(none)"
    print(f"  {report.summary():14s} {proof.name:22s} {premises}  =>  {conclusion}")

print()
print("== a single broken line is pinpointed ==")
text = corpus_text("balb_plus").replace("mp 1 2", "mp 2 1", 1)
report = check_proof(parse_proof(text))
print(f"  {report.summary()}")

print()
print("== derived rules apply by matching ==")
part3 = parse_proof(corpus_text("balmi_part3"))
for line in part3.lines:
    print(f"  {line.index}: {format_formula(line.formula)}")
print("  (lines 2-4 cite registered theorems, instantiated on the fly)")
