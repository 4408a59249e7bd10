"""Context-count vectors as a lattice: entailment, meet, join, cosine.

Rows of the shipped fixture are occurrence counts of words across eight
document contexts.  The componentwise order reads as distributional
entailment: x <= y when y occurs at least as often in every context.

Run with: python demos/word_vectors.py
"""

from rieszlogic.distrib import (
    cosine,
    entails,
    entails_witness,
    join,
    load_word_counts,
    meet,
)

counts = load_word_counts()

print("term rows over contexts", ", ".join(counts.contexts))
for term in counts.terms:
    cells = " ".join(f"{int(c):2d}" for c in counts.row(term))
    print(f"  {term:9s} {cells}")

print()
print("lattice operations:")
print(f"  meet(orange, fruit) = {tuple(map(int, meet(counts, 'orange', 'fruit')))}")
print(f"  join(orange, fruit) = {tuple(map(int, join(counts, 'orange', 'fruit')))}")

print()
print("entailment is the componentwise order:")
for t1, t2 in [("computer", "apple"), ("orange", "fruit"), ("tree", "tree")]:
    if entails(counts, t1, t2):
        print(f"  {t1} <= {t2}")
    else:
        context, a, b = entails_witness(counts, t1, t2)
        print(f"  {t1} <= {t2} fails: context {context} has {a} > {b}")

print()
print("cosine similarity for comparison:")
for t1, t2 in [("orange", "fruit"), ("banana", "fruit"), ("computer", "tree")]:
    print(f"  cos({t1}, {t2}) = {cosine(counts, t1, t2):.4f}")
