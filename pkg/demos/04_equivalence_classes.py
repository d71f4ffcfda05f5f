"""Domination-equivalence classes of paths: exhaustive search for n <= 8
and candidate elimination beyond.

Run: python demos/04_equivalence_classes.py   (about ten seconds)
"""
from dompoly import canonical_form, enumerate_graphs, path, table1_report, verify_path_class
from dompoly.graph import star

# Canonical forms identify isomorphic graphs regardless of labelling.
print(canonical_form(path(4)) == canonical_form(path(4).relabel([2, 0, 3, 1])))
print(canonical_form(path(4)) == canonical_form(star(3)))
print("graphs of order 1..6:", [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 7)])

for rep in table1_report():
    print(f"[P{rep.n}] ({rep.size}): {', '.join(sorted(rep.descriptions))}")

for n in (9, 15, 24):
    rep = verify_path_class(n)
    print(f"n={n}: {len(rep.survivors)} of {rep.candidates} candidates survive: {rep.survivors}")
print(rep.scope)
