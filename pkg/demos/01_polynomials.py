"""Computing domination polynomials three ways and checking they agree.

Run: python demos/01_polynomials.py
"""
from dompoly import (
    DomPolynomial, cycle, disjoint_union, dom_poly, dom_poly_bruteforce, path, path_poly,
    pendant_cycle, tilde_path,
)
from dompoly.poly import dom_poly_frontier

# Brute force counts dominating sets of every size directly.
print("D(P4)      =", dom_poly_bruteforce(path(4)))
print("D(C5)      =", dom_poly_bruteforce(cycle(5)))

# Paths and cycles follow a three-term recurrence, so large orders are cheap.
p60 = path_poly(60)
print("D(P60) has", len(p60.coeffs), "coefficients; largest =", max(p60.coeffs))

# The polynomial of a disjoint union is the product of the parts.
g = disjoint_union([pendant_cycle(4), path(2)])
print("D(F4 u K2) =", dom_poly(g))
print("equals D(P7):", dom_poly(g) == path_poly(7))

# Components that are neither paths nor small enough to brute force go
# through a frontier dynamic program instead.
big = tilde_path(45)
print("D(~P45) == D(P45):", dom_poly_frontier(big) == path_poly(45))

# Coefficients are serialised as decimal strings.
text = path_poly(8).to_json()
print("JSON:", text)
assert DomPolynomial.from_json(text) == path_poly(8)
