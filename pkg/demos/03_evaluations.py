"""Integer evaluations: x = -1 closed forms, zeros at x = -2 and the
3-adic order at x = -3.

Run: python demos/03_evaluations.py
"""
from dompoly import cycle_poly, derivative, evaluate, minus_two_alternation_check, ord_p, path_poly
from dompoly.coeffs import closed_eval_minus1, ord3_allowed

print("n  D(C_n,-1)  D'(C_n,-1)  D(P_n,-1)  D'''(P_n,-1)")
for n in range(3, 13):
    row = [evaluate(cycle_poly(n), -1), evaluate(derivative(cycle_poly(n), 1), -1),
           evaluate(path_poly(n), -1), evaluate(derivative(path_poly(n), 3), -1)]
    closed = [closed_eval_minus1("cycle", n, 0), closed_eval_minus1("cycle", n, 1),
              closed_eval_minus1("path", n, 0), closed_eval_minus1("path", n, 3)]
    assert row == closed
    print(f"{n:<3}", "  ".join(f"{v:>9}" for v in row))

rep = minus_two_alternation_check("path", 1, 40)
print("\nD(P_n,-2) vanishes at n =", rep.zeros)
print("first alternating window starts at n =", rep.window)
print("values at 13..16:", [rep.values[m] for m in range(13, 17)])

print("\nord_3 of D(P_n,-3) against the admissible sets:")
for n in range(1, 13):
    v = ord_p(evaluate(path_poly(n), -3), 3)
    print(f"  n={n:2d}  ord={v}  allowed={sorted(ord3_allowed('path', n))}")
