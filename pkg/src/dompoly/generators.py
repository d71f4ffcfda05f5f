"""Random graph samplers used by the verification suites and tests."""
from __future__ import annotations

import random

from .graph import (
    Graph, cycle, disjoint_union, from_edge_list, h_graph, is_in_Gk, path,
    pendant_cycle, structure_profile, tilde_path,
)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_forest(n: int, rng: random.Random) -> Graph:
    """Each vertex after the first joins an earlier one, or starts a new tree."""
    edges = [(v, rng.randrange(v)) for v in range(1, n) if rng.random() < 0.8]
    return shuffled(from_edge_list(n, edges), rng)


def spider(legs: list[int]) -> Graph:
    """Centre 0 with pendant paths of the given lengths."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return from_edge_list(nxt, edges)


def loop_gadget(leaves: int, loops: list[int]) -> Graph:
    """A stem carrying ``leaves`` leaves and loops of the given orders."""
    edges, nxt = [], 1
    for _ in range(leaves):
        edges.append((0, nxt))
        nxt += 1
    for r in loops:
        ring = [0] + list(range(nxt, nxt + r - 1))
        nxt += r - 1
        edges += [(ring[i], ring[(i + 1) % r]) for i in range(r)]
    return from_edge_list(nxt, edges)


def bridge_gadget(leaves_a: int, leaves_b: int, paths: list[int]) -> Graph:
    """Two stems 0 and 1 joined by internally disjoint paths with the given
    numbers of internal vertices (0 means a direct edge)."""
    edges, nxt = [], 2
    for stem, k in ((0, leaves_a), (1, leaves_b)):
        for _ in range(k):
            edges.append((stem, nxt))
            nxt += 1
    if 0 in paths:
        edges.append((0, 1))
    for inner in (k for k in paths if k > 0):
        chain = [0] + list(range(nxt, nxt + inner)) + [1]
        nxt += inner
        edges += list(zip(chain, chain[1:]))
    return from_edge_list(nxt, edges)


def _g2_piece(rng: random.Random, budget: int) -> Graph | None:
    kind = rng.choice(["path", "cycle", "spider", "loop", "bridge", "tilde", "F", "H"])
    if kind == "path" and budget >= 3:
        return path(rng.randint(3, budget))
    if kind == "cycle" and budget >= 3:
        return cycle(rng.randint(3, min(budget, 7)))
    if kind == "spider" and budget >= 4:
        legs = [1] + [rng.randint(1, 3) for _ in range(rng.randint(2, 3))]
        g = spider(legs)
        return g if g.n <= budget else None
    if kind == "loop" and budget >= 4:
        g = loop_gadget(rng.randint(1, 3), [rng.choice([3, 3, 4, 5]) for _ in range(rng.randint(1, 2))])
        return g if g.n <= budget else None
    if kind == "bridge" and budget >= 4:
        g = bridge_gadget(rng.randint(1, 2), rng.randint(1, 2),
                          [rng.choice([0, 1, 1, 2, 3]) for _ in range(rng.randint(1, 3))])
        return g if g.n <= budget else None
    if kind == "tilde" and budget >= 5:
        return tilde_path(rng.randint(5, budget))
    if kind == "F" and budget >= 4:
        return pendant_cycle(rng.randint(3, budget - 1))
    if kind == "H" and budget >= 6:
        return h_graph(rng.randint(3, budget - 3))
    return None


def random_g2_graph(rng: random.Random, max_order: int = 11) -> Graph:
    """A graph in G_2 with no isolated vertices and no K_2 components, glued
    from paths, cycles, spiders, loop and two-stem gadgets."""
    while True:
        pieces, budget = [], max_order
        for _ in range(rng.randint(1, 3)):
            piece = _g2_piece(rng, budget)
            if piece is not None:
                pieces.append(piece)
                budget -= piece.n
        if not pieces:
            continue
        g = shuffled(disjoint_union(pieces), rng)
        prof = structure_profile(g)
        if is_in_Gk(g, 2) and not prof.isolated and not prof.k2_components:
            return g


def random_hypothesis_graph(rng: random.Random, max_order: int = 11) -> Graph:
    """A random graph with no isolated vertices and no K_2 components."""
    while True:
        n = rng.randint(3, max_order)
        g = random_graph(n, rng.choice([0.15, 0.25, 0.35, 0.5, 0.7]), rng)
        prof = structure_profile(g)
        if not prof.isolated and not prof.k2_components:
            return g
