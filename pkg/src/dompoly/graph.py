"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertices are the integers ``0..n-1``.  ``adj[v]`` is an int whose bit ``u`` is
set exactly when ``u`` and ``v`` are adjacent, so closed-neighbourhood unions
over a vertex set reduce to a handful of ``|`` operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed serialized input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"neighbour of {v} out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(_bits(comp)))
        return out

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            mask = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    mask |= 1 << index[u]
            adj.append(mask)
        return Graph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation of the vertex set")
        adj = [0] * self.n
        for v in range(self.n):
            mask = 0
            for u in _bits(self.adj[v]):
                mask |= 1 << perm[u]
            adj[perm[v]] = mask
        return Graph(self.n, tuple(adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("negative order")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path order must be at least 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle order must be at least 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def tilde_path(n: int) -> Graph:
    """P_n with an extra edge joining its two stems (vertices 1 and n-2)."""
    if n < 5:
        raise GraphError("tilde path needs n >= 5 (stems of P_4 are already adjacent)")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)] + [(1, n - 2)])


def pendant_cycle(i: int) -> Graph:
    """F_i: the cycle 0..i-1 with leaf ``i`` hanging off vertex 0."""
    if i < 3:
        raise GraphError("pendant cycle needs a cycle of order at least 3")
    return from_edge_list(i + 1, [(k, (k + 1) % i) for k in range(i)] + [(0, i)])


def h_graph(i: int) -> Graph:
    """H_i: F_i plus a K_2 on ``i+1, i+2`` whose endpoint ``i+1`` joins the stem 0."""
    if i < 3:
        raise GraphError("H graph needs a cycle of order at least 3")
    edges = [(k, (k + 1) % i) for k in range(i)] + [(0, i), (i + 1, i + 2), (0, i + 1)]
    return from_edge_list(i + 3, edges)


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return from_edge_list(k + 1, [(0, j) for j in range(1, k + 1)])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    for g in gs:
        off = len(adj)
        adj.extend(nb << off for nb in g.adj)
    return Graph(len(adj), tuple(adj))


# -- graph6 -----------------------------------------------------------------

def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("order too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """graph6 encoding (no header, no trailing newline)."""
    out = bytearray(_encode_order(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError("graph6 byte outside the printable range 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphError("truncated graph6 order field")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 order field")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != need:
        raise GraphError(f"graph6 payload has {len(payload)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a newline-delimited graph6 file, skipping blank lines."""
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield from_graph6(line)


# -- plain edge list ----------------------------------------------------------

def to_edge_list_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a 'n m' header line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m or any(len(r) != 2 for r in rows[1:]):
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


# -- structural quantities ------------------------------------------------------

@dataclass(frozen=True)
class Loop:
    """An induced cycle whose vertices, except ``anchor``, all have degree 2."""
    anchor: int
    vertices: frozenset

    @property
    def r(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class StructureProfile:
    n: int
    stems: frozenset
    leaves: frozenset
    T: dict = field(default_factory=dict)            # degree -> non-stem vertices
    S: dict = field(default_factory=dict)            # stem -> leaves on it
    V0: frozenset = frozenset()
    V1: dict = field(default_factory=dict)           # stem -> T_2 vertices seeing only it
    V2: dict = field(default_factory=dict)           # frozenset{s, t} -> T_2 vertices
    loops: dict = field(default_factory=dict)        # r -> list[Loop]
    cycle_components: dict = field(default_factory=dict)  # r -> count
    k2_components: int = 0
    isolated: int = 0

    @property
    def omega(self) -> int:
        return len(self.stems)

    def t(self, r: int) -> int:
        """|T_r|."""
        return len(self.T.get(r, ()))

    def loops_through(self, r: int, stem: int) -> int:
        """|L_r^i| for stem ``stem``."""
        return sum(1 for lp in self.loops.get(r, ()) if lp.anchor == stem)

    def n_loops(self, r: int) -> int:
        return len(self.loops.get(r, ()))

    def n_cycles(self, r: int) -> int:
        return self.cycle_components.get(r, 0)


def structure_profile(g: Graph) -> StructureProfile:
    deg = g.degrees()
    leaves = frozenset(v for v in range(g.n) if deg[v] == 1)
    leaf_mask = sum(1 << v for v in leaves)
    stems = frozenset(v for v in range(g.n) if g.adj[v] & leaf_mask)

    T: dict[int, set] = {}
    for v in range(g.n):
        if v not in stems:
            T.setdefault(deg[v], set()).add(v)
    S = {s: frozenset(u for u in g.neighbors(s) if u in leaves and u not in stems)
         for s in stems}

    V0, V1, V2 = set(), {}, {}
    for v in T.get(2, ()):
        seen = [u for u in g.neighbors(v) if u in stems]
        if not seen:
            V0.add(v)
        elif len(seen) == 1:
            V1.setdefault(seen[0], set()).add(v)
        else:
            V2.setdefault(frozenset(seen), set()).add(v)

    loops: dict[int, list[Loop]] = {}
    found = set()
    for a in range(g.n):
        if deg[a] == 2:
            continue
        for start in g.neighbors(a):
            if deg[start] != 2:
                continue
            chain, prev, cur = [start], a, start
            while True:
                nxt = next(u for u in g.neighbors(cur) if u != prev)
                if deg[nxt] != 2:
                    break
                chain.append(nxt)
                prev, cur = cur, nxt
            if nxt == a and len(chain) >= 2:
                key = frozenset(chain) | {a}
                if key not in found:
                    found.add(key)
                    loops.setdefault(len(key), []).append(Loop(a, key))

    cycles: dict[int, int] = {}
    k2 = iso = 0
    for comp in g.components():
        if len(comp) == 1:
            iso += 1
        elif len(comp) == 2:
            k2 += 1
        elif all(deg[v] == 2 for v in comp):
            cycles[len(comp)] = cycles.get(len(comp), 0) + 1

    return StructureProfile(
        n=g.n,
        stems=stems,
        leaves=leaves,
        T={r: frozenset(vs) for r, vs in sorted(T.items())},
        S=S,
        V0=frozenset(V0),
        V1={s: frozenset(vs) for s, vs in V1.items()},
        V2={k: frozenset(vs) for k, vs in V2.items()},
        loops={r: sorted(ls, key=lambda lp: sorted(lp.vertices)) for r, ls in sorted(loops.items())},
        cycle_components=dict(sorted(cycles.items())),
        k2_components=k2,
        isolated=iso,
    )


def is_in_Gk(g: Graph, k: int) -> bool:
    """True when every vertex is a stem or has degree at most ``k``."""
    prof = structure_profile(g)
    return all(v in prof.stems or g.degree(v) <= k for v in range(g.n))
