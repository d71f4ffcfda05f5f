"""Structural invariants (stems, leaves, loops) and the closed forms for the
top few coefficients, checked against brute force.

Run: python demos/02_structure_and_coefficients.py
"""
import random

from dompoly import (
    d_n_minus_3, d_n_minus_4, d_n_minus_k, d_top, dom_poly_bruteforce, from_edge_list,
    gamma, path_top_coeffs, path_poly, structure_profile,
)
from dompoly.generators import random_g2_graph

# A 23-vertex graph with four stems, seven leaves and three loops.
names = ["l1", "l2", "l3", "s1", "s2", "l4", "l5", "v1", "v2", "v3", "v4", "s3", "l6",
         "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12", "s4", "l7"]
ix = {nm: i for i, nm in enumerate(names)}
pairs = ["l1 s1", "l2 s1", "l3 s1", "s1 s2", "s2 l4", "s2 l5", "s2 v1", "v1 v2", "v2 v3",
         "v3 s2", "s2 v4", "v4 s3", "s3 l6", "s3 v5", "v5 v6", "v6 v7", "v7 v8", "v8 v9",
         "v9 v10", "v10 s3", "s3 v11", "v11 v12", "v12 s3", "s3 s4", "s4 l7"]
g = from_edge_list(23, [tuple(ix[x] for x in p.split()) for p in pairs])
prof = structure_profile(g)
print("stems:", sorted(names[s] for s in prof.stems))
print("|T1| =", prof.t(1), " |T2| =", prof.t(2))
print("loops by order:", {r: len(ls) for r, ls in prof.loops.items()})

p = dom_poly_bruteforce(g)
n = g.n
print("d(G,n-1): closed", d_top(g, 1), "brute", p[n - 1])
print("d(G,n-2): closed", d_top(g, 2), "brute", p[n - 2])
print("d(G,n-3): closed", d_n_minus_3(g), "brute", p[n - 3])
print("d(G,n-4): closed", d_n_minus_4(g), "brute", p[n - 4])

# Random graphs where every vertex is a stem or has degree at most two.
rng = random.Random(1)
for _ in range(5):
    h = random_g2_graph(rng, 11)
    q = dom_poly_bruteforce(h)
    four = f"{d_n_minus_4(h)}/{q[h.n - 4]}" if h.n - 4 >= gamma(q) else "out of range"
    print(f"n={h.n:2d}  d(G,n-3) closed/brute {d_n_minus_3(h)}/{q[h.n - 3]}"
          f"  d(G,n-4) {four}  general k=3 form {d_n_minus_k(h, 3) if h.n - 3 >= gamma(q) else '-'}")

# Paths have explicit top coefficients.
for n in (5, 8, 20):
    print(f"P{n}: closed {path_top_coeffs(n)}  recurrence "
          f"{tuple(path_poly(n)[n - i] for i in range(1, 5))}")
