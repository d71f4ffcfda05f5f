"""Batch checks of closed forms against exact computation.

Each suite returns a :class:`SuiteResult`; the first counterexample found is
kept so a failing run says exactly what broke.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coeffs import (
    closed_eval_minus1, d_n_minus_3, d_n_minus_4, d_n_minus_k, d_top, ord3_allowed,
    path_top_coeffs,
)
from .equivalence import table1_report, verify_path_class
from .generators import random_forest, random_g2_graph, random_hypothesis_graph
from .poly import (
    cycle_poly, derivative, dom_poly_bruteforce, evaluate, gamma, growing_alternating,
    minus_two_alternation_check, ord_p, path_poly,
)

SUITES = ("coeffs", "minus1", "minus2", "ord3", "table1", "theorem")
TABLE1_SIZES = (1, 1, 1, 2, 2, 2, 4, 4)
TABLE1_MEMBERS = {
    1: {"K1"}, 2: {"K2"}, 3: {"P3"}, 4: {"P4", "2K2"}, 5: {"P5", "~P5"}, 6: {"P6", "~P6"},
    7: {"P7", "~P7", "F4 ∪ K2", "H4"}, 8: {"P8", "~P8", "F5 ∪ K2", "H5"},
}


@dataclass
class SuiteResult:
    name: str
    passed: bool
    summary: str
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        out = f"{tag} {self.name}: {self.summary}"
        if self.counterexample:
            out += f" | first counterexample: {self.counterexample}"
        return out


def check_coeffs(samples: int = 200, g2_samples: int = 150, max_order: int = 11,
                 path_range: tuple[int, int] = (5, 40), seed: int = 0) -> SuiteResult:
    """Top-coefficient formulas against brute force on random graphs."""
    rng = random.Random(seed)
    checked = {"general": 0, "g2": 0, "n-k": 0, "n-4": 0}

    def compare(g, label):
        p = dom_poly_bruteforce(g)
        n = g.n
        got = {"n-1": d_top(g, 1), "n-2": d_top(g, 2), "n-3": d_n_minus_3(g)}
        want = {"n-1": p[n - 1], "n-2": p[n - 2], "n-3": p[n - 3]}
        for k in (2, 3, 4):
            if 2 <= k <= n - gamma(p):
                got[f"k={k}"], want[f"k={k}"] = d_n_minus_k(g, k), p[n - k]
                checked["n-k"] += 1
        if label == "g2" and n - 4 >= gamma(p):
            got["n-4"], want["n-4"] = d_n_minus_4(g), p[n - 4]
            checked["n-4"] += 1
        for key in got:
            if got[key] != want[key]:
                return f"{key} on {g.edges()} (n={n}): closed {got[key]} vs brute {want[key]}"
        return None

    for _ in range(samples):
        bad = compare(random_hypothesis_graph(rng, max_order), "general")
        checked["general"] += 1
        if bad:
            return SuiteResult("coeffs", False, "general graph mismatch", bad, checked)
    for _ in range(g2_samples):
        bad = compare(random_g2_graph(rng, max_order), "g2")
        checked["g2"] += 1
        if bad:
            return SuiteResult("coeffs", False, "G2 graph mismatch", bad, checked)
    lo, hi = path_range
    for n in range(lo, hi + 1):
        p = path_poly(n)
        if path_top_coeffs(n) != tuple(p[n - i] for i in (1, 2, 3, 4)):
            return SuiteResult("coeffs", False, "path top coefficients", f"n={n}", checked)
    return SuiteResult("coeffs", True,
                       f"{checked['general']} general + {checked['g2']} G2 graphs, "
                       f"{checked['n-k']} n-k and {checked['n-4']} n-4 checks, paths {lo}..{hi}",
                       details=checked)


def check_minus1(max_n: int = 50, forests: int = 200, forest_order: int = 12,
                 seed: int = 0) -> SuiteResult:
    """Derivatives at -1 of path and cycle polynomials, and forests at -1."""
    count = 0
    for family, poly, lo in (("path", path_poly, 1), ("cycle", cycle_poly, 3)):
        for n in range(lo, max_n + 1):
            for order in range(4):
                exact = evaluate(derivative(poly(n), order), -1)
                closed = closed_eval_minus1(family, n, order)
                count += 1
                if exact != closed:
                    return SuiteResult("minus1", False, "closed form mismatch",
                                       f"{family} n={n} order={order}: {closed} vs {exact}")
    rng = random.Random(seed)
    for _ in range(forests):
        f = random_forest(rng.randint(1, forest_order), rng)
        if evaluate(dom_poly_bruteforce(f), -1) not in (1, -1):
            return SuiteResult("minus1", False, "forest value outside {1, -1}", str(f.edges()))
    return SuiteResult("minus1", True, f"{count} closed-form evaluations (n <= {max_n}), "
                                       f"{forests} forests")


def check_minus2(end: int = 200) -> SuiteResult:
    """Zeros of D(P_n, -2) and the alternating-growth window."""
    rep = minus_two_alternation_check("path", 1, end)
    details = {"zeros": rep.zeros, "window": rep.window,
               "values_13_15": [rep.values.get(m) for m in (13, 14, 15)]}
    problems = []
    if rep.window is None or rep.window > 13:
        problems.append(f"first window at {rep.window}, expected by 13")
    elif not growing_alternating([rep.values[m] for m in range(13, end + 1)]):
        problems.append("alternation from n=13 breaks before the end of range")
    if details["values_13_15"] != [-32, 64, -96]:
        problems.append(f"values at 13..15 are {details['values_13_15']}")
    if not (rep.alternating_from_window and rep.nonzero_from_window):
        problems.append("alternation breaks before the end of range")
    # P_2 = K_2 is also a zero; the claim concerns orders 3 and up.
    if [z for z in rep.zeros if z >= 3] != [4, 7, 8][:len([z for z in (4, 7, 8) if z <= end])]:
        problems.append(f"zeros at n >= 3 are {[z for z in rep.zeros if z >= 3]}, expected [4, 7, 8]")
    if problems:
        return SuiteResult("minus2", False, "; ".join(problems), details=details)
    return SuiteResult("minus2", True, f"zeros {rep.zeros}, first window {rep.window}..{rep.window + 3}, "
                                       f"alternation from 13 holds to n={end}",
                       details=details)


def check_ord3(max_n: int = 60) -> SuiteResult:
    for family, poly, lo in (("path", path_poly, 1), ("cycle", cycle_poly, 3)):
        for n in range(lo, max_n + 1):
            got = ord_p(evaluate(poly(n), -3), 3)
            if got not in ord3_allowed(family, n):
                return SuiteResult("ord3", False, "ord_3 outside table",
                                   f"{family} n={n}: {got} not in {sorted(ord3_allowed(family, n))}")
    return SuiteResult("ord3", True, f"paths and cycles up to n={max_n}")


def check_table1(workers: int = 1) -> SuiteResult:
    reports = table1_report(workers)
    sizes = tuple(r.size for r in reports)
    for r in reports:
        if set(r.descriptions) != TABLE1_MEMBERS[r.n]:
            return SuiteResult("table1", False, f"class sizes {sizes}",
                               f"n={r.n}: {r.descriptions}")
        if not r.exhaustive:
            return SuiteResult("table1", False, "enumeration not exhaustive", f"n={r.n}")
    passed = sizes == TABLE1_SIZES
    return SuiteResult("table1", passed, f"class sizes {sizes}",
                       None if passed else f"expected {TABLE1_SIZES}",
                       details={"sizes": sizes, "members": {r.n: r.descriptions for r in reports}})


def check_theorem(lo: int = 9, hi: int = 30) -> SuiteResult:
    total = 0
    for n in range(lo, hi + 1):
        rep = verify_path_class(n)
        total += rep.candidates
        if not rep.ok:
            return SuiteResult("theorem", False, "unexpected survivors",
                               f"n={n}: {rep.survivors}")
    return SuiteResult("theorem", True, f"n={lo}..{hi}: only P_n and ~P_n survive "
                                        f"among {total} candidates (conditional check)")


def run_suite(name: str, lo: int | None = None, hi: int | None = None,
              workers: int = 1) -> list[SuiteResult]:
    """Run one named suite or ``all``; ``lo``/``hi`` override the suite's n-range."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, lo, hi, workers)]
    if name == "coeffs":
        return [check_coeffs(path_range=(lo or 5, hi or 40))]
    if name == "minus1":
        return [check_minus1(max_n=hi or 50)]
    if name == "minus2":
        return [check_minus2(end=hi or 200)]
    if name == "ord3":
        return [check_ord3(max_n=hi or 60)]
    if name == "table1":
        return [check_table1(workers)]
    if name == "theorem":
        return [check_theorem(lo or 9, hi or 30)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all")
