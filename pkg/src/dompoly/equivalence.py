"""Isomorphism classes and D-equivalence classes.

Canonical forms are graph6 strings of a canonically relabelled graph, chosen
as the lexicographically smallest upper-triangle bit string over all vertex
orders reachable by individualisation and equitable refinement of the degree
partition.  Twin vertices (same neighbourhood apart from each other) are
interchangeable, so only one of each twin class is individualised.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .graph import (
    Graph, cycle, disjoint_union, from_graph6, h_graph, path, pendant_cycle,
    read_graph6_file, tilde_path, to_graph6,
)
from .poly import DomPolynomial, classify_component, dom_poly, dom_poly_bruteforce

CANON_MAX_ORDER = 12
BUILTIN_MAX_ORDER = 8
# Number of non-isomorphic simple graphs on n vertices, n = 0..12.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168,
                1018997864, 165091172592)


class MissingCorpus(LookupError):
    """No built-in enumeration and no external corpus for the requested order."""


# -- canonical form -----------------------------------------------------------

def _refine(adj: tuple, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        for idx, cell in enumerate(cells):
            if len(cell) == 1:
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                parts = [[v for v in cell if sig[v] == k] for k in keys]
                cells = cells[:idx] + parts + cells[idx + 1:]
                break
        else:
            return cells


def _code(adj: tuple, order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        col = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (col >> order[i] & 1)
    return code


def _canonical_order(g: Graph) -> list[int]:
    adj = g.adj
    deg = g.degrees()
    cells = [[v for v in range(g.n) if deg[v] == d] for d in sorted(set(deg))]
    best: list = [None, None]

    def search(cells):
        cells = _refine(adj, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search(cells)
    return best[1] or []


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabelling; equal iff isomorphic."""
    if g.n > CANON_MAX_ORDER:
        raise ValueError(f"canonical form limited to order {CANON_MAX_ORDER}")
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return to_graph6(g.relabel(perm))


def canonical_graph(g: Graph) -> Graph:
    return from_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# -- exhaustive enumeration -------------------------------------------------------

def _extend_forms(forms: list[bytes]) -> set[bytes]:
    out = set()
    for f in forms:
        g = from_graph6(f)
        n = g.n
        for mask in range(1 << n):
            adj = [a | ((mask >> v & 1) << n) for v, a in enumerate(g.adj)]
            adj.append(mask)
            out.add(canonical_form(Graph(n + 1, tuple(adj))))
    return out


@lru_cache(maxsize=None)
def _forms(n: int, workers: int = 1) -> tuple[bytes, ...]:
    if n == 0:
        return (to_graph6(Graph(0, ())),)
    parents = list(_forms(n - 1, workers))
    if workers > 1 and len(parents) > 1:
        step = max(1, len(parents) // (workers * 4))
        chunks = [parents[i:i + step] for i in range(0, len(parents), step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            found = set().union(*ex.map(_extend_forms, chunks))
    else:
        found = _extend_forms(parents)
    return tuple(sorted(found))


def enumerate_graphs(n: int, workers: int = 1) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class of order n,
    built by attaching a new vertex to every subset of each order n-1 class."""
    if n < 0:
        raise ValueError("negative order")
    if n > BUILTIN_MAX_ORDER:
        raise MissingCorpus(f"built-in enumeration stops at order {BUILTIN_MAX_ORDER}; "
                            "supply a graph6 corpus")
    for f in _forms(n, workers):
        yield from_graph6(f)


# -- naming -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _named_forms(k: int) -> dict:
    named = {}
    if 5 <= k:
        named[canonical_form(tilde_path(k))] = f"~P{k}"
    if k >= 4:
        named[canonical_form(pendant_cycle(k - 1))] = f"F{k - 1}"
    if k >= 6:
        named[canonical_form(h_graph(k - 3))] = f"H{k - 3}"
    return named


def _component_name(sub: Graph) -> str:
    if sub.n == 1:
        return "K1"
    if sub.n == 2:
        return "K2"
    kind = classify_component(sub)
    if kind is not None:
        return f"{'P' if kind[0] == 'path' else 'C'}{sub.n}"
    if sub.n <= CANON_MAX_ORDER:
        name = _named_forms(sub.n).get(canonical_form(sub))
        if name:
            return name
    return f"G[{to_graph6(sub).decode()}]"


def describe(g: Graph) -> str:
    """Human-readable component decomposition, e.g. ``F4 ∪ K2`` or ``2K2``."""
    if g.n == 0:
        return "K0"
    sizes: dict[str, int] = {}
    counts: Counter = Counter()
    for comp in g.components():
        name = _component_name(g.subgraph(comp))
        counts[name] += 1
        sizes[name] = len(comp)
    names = sorted(counts, key=lambda nm: (-sizes[nm], nm))
    return " ∪ ".join(nm if counts[nm] == 1 else f"{counts[nm]}{nm}" for nm in names)


# -- equivalence classes ------------------------------------------------------------

def d_equivalent(g: Graph, h: Graph) -> bool:
    return g.n == h.n and dom_poly(g) == dom_poly(h)


@dataclass
class EquivalenceClassReport:
    n: int
    target: Graph
    polynomial: DomPolynomial
    members: list = field(default_factory=list)    # (canonical form, description)
    corpus_size: int = 0
    exhaustive: bool = False

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def descriptions(self) -> list[str]:
        return [d for _, d in self.members]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "target": to_graph6(self.target).decode(),
            "exhaustive": self.exhaustive,
            "members": [{"g6": f.decode(), "desc": d} for f, d in self.members],
            "corpus_size": self.corpus_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def load_corpus(path: str | Path, n: int) -> list[Graph]:
    """Order-``n`` graphs from a newline-delimited graph6 file."""
    return [g for g in read_graph6_file(path) if g.n == n]


def equivalence_class_exhaustive(n: int, target: Graph, corpus: str | Path | None = None,
                                 workers: int = 1) -> EquivalenceClassReport:
    """All graphs of order n (built-in enumeration or a corpus) sharing the
    domination polynomial of ``target``."""
    if target.n != n:
        raise ValueError("target order differs from n")
    if corpus is None:
        if n > BUILTIN_MAX_ORDER:
            raise MissingCorpus(f"order {n} needs a graph6 corpus")
        graphs: Iterable[Graph] = enumerate_graphs(n, workers)
    else:
        graphs = load_corpus(corpus, n)
    want = dom_poly(target)
    members, seen, size = [], set(), 0
    for g in graphs:
        key = canonical_form(g) if n <= CANON_MAX_ORDER else to_graph6(g)
        if key in seen:
            continue
        seen.add(key)
        size += 1
        if dom_poly(g) == want:
            members.append((key, describe(g)))
    members.sort()
    exhaustive = corpus is None or (n < len(GRAPH_COUNTS) and n <= CANON_MAX_ORDER
                                    and size == GRAPH_COUNTS[n])
    return EquivalenceClassReport(n, target, want, members, size, exhaustive)


def table1_report(workers: int = 1) -> list[EquivalenceClassReport]:
    """Classes of P_1 .. P_8 from exhaustive enumeration."""
    return [equivalence_class_exhaustive(n, path(n), workers=workers) for n in range(1, 9)]


def recheck_members(report: EquivalenceClassReport) -> bool:
    """Re-derive every member's polynomial by brute force on the whole graph."""
    return all(dom_poly_bruteforce(from_graph6(f)) == report.polynomial for f, _ in report.members)


# -- candidate elimination for n >= 9 --------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    """A path or tilde path on ``head`` vertices plus cycles of the given orders."""
    tilde: bool
    head: int
    cycles: tuple

    def graph(self) -> Graph:
        h = tilde_path(self.head) if self.tilde else path(self.head)
        return disjoint_union([h] + [cycle(c) for c in self.cycles])

    @property
    def desc(self) -> str:
        parts = [f"{'~' if self.tilde else ''}P{self.head}"] + [f"C{c}" for c in self.cycles]
        return " ∪ ".join(parts)


def candidate_specs(n: int) -> Iterator[Candidate]:
    if n < 9:
        raise ValueError("candidate family is defined for n >= 9")
    for head in range(n, 0, -1):
        rest = n - head
        cycle_sets = []
        if rest == 0:
            cycle_sets.append(())
        elif rest >= 3:
            cycle_sets.append((rest,))
            cycle_sets.extend((a, rest - a) for a in range(3, rest // 2 + 1) if rest - a >= 3)
        for cs in cycle_sets:
            yield Candidate(False, head, cs)
            if head >= 5:
                yield Candidate(True, head, cs)


def candidate_family(n: int) -> Iterator[Graph]:
    """Every path-or-tilde-path plus at most two cycles, total order n."""
    for c in candidate_specs(n):
        yield c.graph()


@dataclass
class PathClassReport:
    n: int
    candidates: int
    survivors: list
    first_difference: dict          # candidate desc -> lowest differing coefficient index
    c4_among_survivors: bool
    scope: str = ("conditional: candidates restricted to a path or tilde path plus at most "
                  "two disjoint cycles")

    @property
    def ok(self) -> bool:
        return sorted(self.survivors) == sorted([f"P{self.n}", f"~P{self.n}"]) and not self.c4_among_survivors


def verify_path_class(n: int) -> PathClassReport:
    target = dom_poly(path(n))
    survivors, diffs, total = [], {}, 0
    c4 = False
    for cand in candidate_specs(n):
        total += 1
        p = dom_poly(cand.graph())
        if p == target:
            survivors.append(cand.desc)
            c4 = c4 or 4 in cand.cycles
        else:
            diffs[cand.desc] = next(i for i in range(max(len(p.coeffs), len(target.coeffs)))
                                    if p[i] != target[i])
    return PathClassReport(n, total, survivors, diffs, c4)
