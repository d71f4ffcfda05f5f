"""Exact domination polynomials.

Coefficients are Python ints throughout.  Brute force is vectorised with
numpy over a split of the vertex set into a low block (enumerated as one
array) and a high block (iterated in fixed-size chunks); per-size counts from
each chunk are merged by addition, so the result does not depend on how many
workers process the chunks.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError

DEFAULT_CAP = 26
_LOW_BITS = 14
_CHUNK = 64


class CapExceeded(Exception):
    """A brute-force enumeration was requested above the configured order cap."""


@dataclass(frozen=True)
class DomPolynomial:
    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c or (0,))

    @classmethod
    def one(cls) -> "DomPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "DomPolynomial") -> "DomPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DomPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other: "DomPolynomial") -> "DomPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return DomPolynomial(tuple(out))

    def shift(self, k: int = 1) -> "DomPolynomial":
        """Multiply by x**k."""
        return DomPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def to_json(self) -> str:
        return json.dumps({"n": self.degree, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "DomPolynomial":
        obj = json.loads(text)
        p = cls(tuple(int(c) for c in obj["coeffs"]))
        if p.degree != obj["n"]:
            raise ValueError("declared degree does not match coefficient vector")
        return p

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def evaluate(p: DomPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: DomPolynomial, order: int = 1) -> DomPolynomial:
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    c = list(p.coeffs)
    for _ in range(order):
        c = [i * c[i] for i in range(1, len(c))] or [0]
    return DomPolynomial(tuple(c))


def gamma(p: DomPolynomial) -> int:
    """Domination number: index of the lowest nonzero coefficient."""
    for i, c in enumerate(p.coeffs):
        if c:
            return i
    raise ValueError("zero polynomial has no domination number")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def ord_p(value: int, p: int) -> int:
    """Exponent of ``p`` in ``value``; ``ord_p(0) == 0`` by convention."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if value == 0:
        return 0
    value = abs(value)
    a = 0
    while value % p == 0:
        value //= p
        a += 1
    return a


# -- brute force ----------------------------------------------------------------

def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    cover = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        cover |= g.closed(v)
    return cover == g.full_mask


def _subset_tables(masks: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Coverage and popcount for every subset of ``len(masks)`` vertices."""
    cov = np.zeros(1, dtype=np.uint64)
    pop = np.zeros(1, dtype=np.int64)
    for m in masks:
        cov = np.concatenate([cov, cov | np.uint64(m)])
        pop = np.concatenate([pop, pop + 1])
    return cov, pop


def _union(masks: Sequence[int], sel: int) -> int:
    out = 0
    for b, m in enumerate(masks):
        if sel >> b & 1:
            out |= m
    return out


def _count_range(args) -> np.ndarray:
    closed, low_bits, lo, hi = args
    n = len(closed)
    full = np.uint64((1 << n) - 1)
    cov_low, pop_low = _subset_tables(closed[:low_bits])
    high = closed[low_bits:]
    counts = np.zeros(n + 1, dtype=np.int64)
    rows = max(1, (1 << 20) >> low_bits)
    for start in range(lo, hi, rows):
        hs = range(start, min(hi, start + rows))
        ch = np.array([_union(high, h) for h in hs], dtype=np.uint64)
        ph = np.array([h.bit_count() for h in hs], dtype=np.int64)
        ok = (cov_low[None, :] | ch[:, None]) == full
        sizes = (pop_low[None, :] + ph[:, None])[ok]
        counts += np.bincount(sizes, minlength=n + 1)
    return counts


def dom_poly_bruteforce(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> DomPolynomial:
    """Count dominating sets of every size by enumerating all 2**n subsets."""
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds brute-force cap {cap}")
    if g.n == 0:
        return DomPolynomial.one()
    closed = [g.closed(v) for v in range(g.n)]
    low_bits = min(g.n, _LOW_BITS)
    n_high = 1 << (g.n - low_bits)
    jobs = [(closed, low_bits, lo, min(n_high, lo + _CHUNK)) for lo in range(0, n_high, _CHUNK)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_count_range, jobs))
    else:
        parts = [_count_range(j) for j in jobs]
    total = sum(parts)
    return DomPolynomial(tuple(int(c) for c in total))


# -- closed families ----------------------------------------------------------

_X = DomPolynomial((0, 1))
_PATH = [DomPolynomial.one(), _X, DomPolynomial((0, 2, 1)), DomPolynomial((0, 1, 3, 1))]
# Frozen from dom_poly_bruteforce; regression-tested.
_CYCLE = {
    3: DomPolynomial((0, 3, 3, 1)),
    4: DomPolynomial((0, 0, 6, 4, 1)),
    5: DomPolynomial((0, 0, 5, 10, 5, 1)),
}


def _extend(table: list, n: int):
    # D(G_m) = x (D(G_{m-1}) + D(G_{m-2}) + D(G_{m-3}))
    while len(table) <= n:
        m = len(table)
        table.append((table[m - 1] + table[m - 2] + table[m - 3]).shift())


def path_poly(n: int) -> DomPolynomial:
    if n < 1:
        raise ValueError("path order must be at least 1")
    _extend(_PATH, n)
    return _PATH[n]


_CYCLE_LIST = [None, None, None, _CYCLE[3], _CYCLE[4], _CYCLE[5]]


def cycle_poly(n: int) -> DomPolynomial:
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    _extend(_CYCLE_LIST, n)
    return _CYCLE_LIST[n]


def _frontier_order(g: Graph) -> list[int]:
    """Greedy vertex order keeping the set of open (partly processed) vertices small."""
    remaining = g.degrees()
    placed = [False] * g.n
    active: set[int] = set()
    order = []
    for _ in range(g.n):
        pool = {u for a in active for u in g.neighbors(a) if not placed[u]}
        if not pool:
            pool = {min((v for v in range(g.n) if not placed[v]), key=lambda v: (remaining[v], v))}
        best = None
        for v in pool:
            closing = sum(1 for u in g.neighbors(v) if placed[u] and remaining[u] == 1)
            closing += remaining[v] == sum(1 for u in g.neighbors(v) if placed[u])
            key = (len(active) + 1 - closing, -closing, v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        order.append(v)
        placed[v] = True
        active.add(v)
        for u in g.neighbors(v):
            remaining[u] -= 1
        remaining[v] = sum(1 for u in g.neighbors(v) if not placed[u])
        active = {a for a in active if remaining[a]}
    return order


_IN, _DOM, _UND = 0, 1, 2


def dom_poly_frontier(g: Graph, max_width: int = 14) -> DomPolynomial:
    """Exact count by dynamic programming along a vertex order.

    Each open vertex carries one of three states (in the set, dominated,
    not yet dominated); a vertex is closed once all its neighbours have been
    processed, and closing an undominated vertex discards the state.
    Cost is about n * 3**width where width is the largest open set plus the
    incoming vertex; wider graphs raise ``CapExceeded``.
    """
    order = _frontier_order(g)
    remaining = g.degrees()
    active: list[int] = []
    states: dict[tuple, list[int]] = {(): [1]}
    for v in order:
        if len(active) + 1 > max_width:
            raise CapExceeded(f"frontier width {len(active) + 1} exceeds {max_width}")
        nb = [i for i, a in enumerate(active) if g.has_edge(a, v)]
        nxt: dict[tuple, list[int]] = {}
        for st, counts in states.items():
            hit = any(st[i] == _IN for i in nb)
            out_key = st + ((_DOM if hit else _UND),)
            in_st = list(st)
            for i in nb:
                if in_st[i] == _UND:
                    in_st[i] = _DOM
            in_key = tuple(in_st) + (_IN,)
            for key, vec in ((out_key, counts), (in_key, [0] + counts)):
                acc = nxt.setdefault(key, [])
                if len(acc) < len(vec):
                    acc.extend([0] * (len(vec) - len(acc)))
                for i, c in enumerate(vec):
                    acc[i] += c
        active.append(v)
        for u in g.neighbors(v):
            remaining[u] -= 1
        remaining[v] = sum(1 for u in g.neighbors(v) if u not in active)
        keep = [i for i, a in enumerate(active) if remaining[a]]
        if len(keep) != len(active):
            merged: dict[tuple, list[int]] = {}
            for st, counts in nxt.items():
                if any(st[i] == _UND for i in range(len(st)) if remaining[active[i]] == 0):
                    continue
                key = tuple(st[i] for i in keep)
                acc = merged.setdefault(key, [])
                if len(acc) < len(counts):
                    acc.extend([0] * (len(counts) - len(acc)))
                for i, c in enumerate(counts):
                    acc[i] += c
            nxt = merged
            active = [active[i] for i in keep]
        states = nxt
    return DomPolynomial(tuple(states.get((), [0])))


def classify_component(g: Graph) -> tuple[str, int] | None:
    """('path', k) or ('cycle', k) for a connected graph of that shape, else None."""
    if g.n == 1:
        return ("path", 1)
    if max(g.degrees()) <= 2:
        if g.m == g.n - 1:
            return ("path", g.n)
        if g.m == g.n:
            return ("cycle", g.n)
    return None


@lru_cache(maxsize=4096)
def _component_poly(sub: Graph, cap: int, workers: int) -> DomPolynomial:
    kind = classify_component(sub)
    if kind is not None:
        return path_poly(sub.n) if kind[0] == "path" else cycle_poly(sub.n)
    if sub.n <= cap:
        return dom_poly_bruteforce(sub, cap=cap, workers=workers)
    return dom_poly_frontier(sub)


def dom_poly(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> DomPolynomial:
    """Domination polynomial as a product over connected components.

    Paths and cycles use the three-term recurrence, other components up to
    ``cap`` vertices are brute forced, and larger ones go through
    :func:`dom_poly_frontier` (``CapExceeded`` if they are too wide).
    """
    result = DomPolynomial.one()
    for comp in g.components():
        result = result * _component_poly(g.subgraph(comp), cap, workers)
    return result


# -- behaviour at x = -2 ------------------------------------------------------

@dataclass(frozen=True)
class MinusTwoReport:
    family: str
    start: int
    end: int
    values: dict
    zeros: list
    window: int | None            # first N with the four-term hypothesis at N..N+3
    alternating_from_window: bool  # sign alternation and growth hold from N to end
    nonzero_from_window: bool

    @property
    def ok(self) -> bool:
        return self.window is not None and self.alternating_from_window and self.nonzero_from_window


def growing_alternating(vals: Sequence[int]) -> bool:
    """Nonzero start, strictly growing magnitudes, alternating signs."""
    if not vals or vals[0] == 0:
        return False
    for a, b in zip(vals, vals[1:]):
        if not (abs(b) > abs(a) and (a > 0) != (b > 0)):
            return False
    return True


def minus_two_alternation_check(family: str, start: int, end: int) -> MinusTwoReport:
    """Evaluate D(G_m, -2) for m in [start, end] and look for a four-term
    window of nonzero values that alternate in sign and grow in magnitude;
    the three-term recurrence then rules out zeros beyond it."""
    if start < 1:
        raise ValueError("start must be at least 1")
    poly = {"path": path_poly, "cycle": cycle_poly}[family]
    lo = max(start, 3) if family == "cycle" else start
    values = {m: evaluate(poly(m), -2) for m in range(lo, end + 1)}
    zeros = [m for m, v in values.items() if v == 0]
    window = next((m for m in range(lo, end - 2)
                   if growing_alternating([values[m + i] for i in range(4)])), None)
    alt = nonzero = False
    if window is not None:
        tail = [values[m] for m in range(window, end + 1)]
        alt = growing_alternating(tail)
        nonzero = all(tail)
    return MinusTwoReport(family, start, end, values, zeros, window, alt, nonzero)
