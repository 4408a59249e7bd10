"""The logistic bridge from the real line to (0,1).

Real addition, pushed through the logistic map, becomes the operation
T_R(a,b) = ab / (ab + (1-a)(1-b)): commutative, monotone, associative,
but with T_R(a,1) = 1 instead of the T-norm identity law.  The
Lukasiewicz T-norm is printed alongside for comparison.

Run with: python demos/unit_interval.py
"""

from rieszlogic.fuzzy import grid_csv, logistic, logit, t_lukasiewicz, t_riesz

print("== the logistic map and its inverse ==")
for x in (-2.0, 0.0, 2.0, 4.0):
    p = logistic(x)
    print(f"  x = {x:5.1f}   logistic(x) = {p:.12f}   logit back = {logit(p):5.2f}")

print()
print("== addition carried to the unit interval ==")
for x, y in [(1.0, 1.0), (2.0, 2.0), (-3.0, 1.0)]:
    lhs = t_riesz(logistic(x), logistic(y))
    rhs = logistic(x + y)
    print(f"  T_R(f({x:+.0f}), f({y:+.0f})) = {lhs:.12f}   f({x + y:+.0f}) = {rhs:.12f}")

print()
print("== identity law: satisfied by T_L, violated by T_R ==")
for a in (0.2, 0.5, 0.9):
    print(f"  a = {a}:  T_L(a, 1) = {t_lukasiewicz(a, 1.0)}   T_R(a, 1) = {t_riesz(a, 1.0)}")

print()
print("== surface grids for plotting (undefined corners left empty) ==")
csv_text = grid_csv("tr", 2)
print("  " + csv_text.replace("\n", "\n  ").rstrip())
print()
print("write a full-resolution surface with:")
print("  rieszlogic fuzzy grid --op tr --n 60 > tr_surface.csv")
