"""Closed forms for domination-polynomial coefficients and evaluations.

Every function here has a brute-force counterpart in :mod:`dompoly.poly`;
the formulas only hold under their structural hypotheses, which are checked
rather than assumed.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

from .graph import Graph, GraphError, StructureProfile, is_in_Gk, structure_profile
from .poly import dom_poly, gamma


class HypothesisError(ValueError):
    """A closed form was applied to a graph outside its hypotheses."""


def _mask(g: Graph, vs: Iterable[int] | int) -> int:
    if isinstance(vs, int):
        return vs
    m = 0
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        m |= 1 << v
    return m


def encompass_count(g: Graph, h, u) -> int:
    """Number of vertices v of ``u`` with N[v] contained in ``h``.

    ``h`` and ``u`` may be vertex iterables or bitmasks.
    """
    hm, um = _mask(g, h), _mask(g, u)
    return sum(1 for v in range(g.n) if um >> v & 1 and g.closed(v) & ~hm == 0)


def _require_no_isolated_or_k2(prof: StructureProfile, what: str):
    if prof.isolated:
        raise HypothesisError(f"{what} requires no isolated vertices")
    if prof.k2_components:
        raise HypothesisError(f"{what} requires no K2 components")


def d_top(g: Graph, which: int) -> int:
    """d(G, n-1) for ``which=1``, d(G, n-2) for ``which=2``."""
    prof = structure_profile(g)
    if which == 1:
        return g.n - prof.isolated
    if which == 2:
        _require_no_isolated_or_k2(prof, "d(G, n-2)")
        return comb(g.n, 2) - len(prof.leaves)
    raise ValueError("which must be 1 or 2")


def d_n_minus_k(g: Graph, k: int) -> int:
    """General inclusion-exclusion count, with the overlap correction
    summed over every k-subset explicitly."""
    prof = structure_profile(g)
    if prof.k2_components:
        raise HypothesisError("d(G, n-k) requires no K2 components")
    n = g.n
    if not 2 <= k <= n - gamma(dom_poly(g)):
        raise HypothesisError(f"k={k} outside 2..n-gamma(G)")
    first = sum(prof.t(i) * comb(n - i - 1, k - i - 1) for i in range(k))
    non_stems = g.full_mask & ~sum(1 << s for s in prof.stems)
    overlap = 0
    for hk in combinations(range(n), k):
        f = encompass_count(g, _mask(g, hk), non_stems)
        overlap += max(f - 1, 0)
    return comb(n, k) - (first - overlap)


def d_n_minus_3(g: Graph) -> int:
    prof = structure_profile(g)
    _require_no_isolated_or_k2(prof, "d(G, n-3)")
    n = g.n
    pairs = sum(comb(len(s), 2) for s in prof.S.values())
    inner = prof.t(1) * (n - 2) + prof.t(2) - pairs - prof.n_loops(3) - 2 * prof.n_cycles(3)
    return comb(n, 3) - inner


def n_minus_4_alphas(g: Graph) -> tuple[Fraction, Fraction, Fraction]:
    """The three overlap corrections entering d(G, n-4) for graphs in G_2."""
    prof = structure_profile(g)
    n = g.n
    t1 = prof.t(1)
    s = {st: len(ls) for st, ls in prof.S.items()}
    v1 = {st: len(prof.V1.get(st, ())) for st in prof.stems}

    a1 = sum(comb(si, 2) * (n - si - 1) + Fraction(si, 2) * (t1 - si) + 2 * comb(si, 3)
             for si in s.values())
    a2 = Fraction(sum(v1[st] * s[st] for st in prof.stems))
    a2 += sum(len(vs) * sum(s[st] for st in pair) for pair, vs in prof.V2.items())
    a3 = Fraction(len(prof.V0)) + sum(Fraction(c, 2) for c in v1.values())
    a3 += sum(comb(len(vs), 2) for vs in prof.V2.values())
    a3 += -prof.n_cycles(4) + prof.n_cycles(3) * (2 * n - 9)
    a3 += sum(prof.loops_through(3, st) * (n - 4 - s[st]) for st in prof.stems)
    return a1, a2, a3


def d_n_minus_4(g: Graph) -> int:
    prof = structure_profile(g)
    _require_no_isolated_or_k2(prof, "d(G, n-4)")
    if not is_in_Gk(g, 2):
        raise HypothesisError("d(G, n-4) closed form requires G in G_2")
    n = g.n
    a1, a2, a3 = n_minus_4_alphas(g)
    value = comb(n, 4) - (prof.t(1) * comb(n - 2, 2) + prof.t(2) * (n - 3) - a1 - a2 - a3)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral d(G, n-4) = {value}")
    return int(value)


_PATH_TOP_MIN = (2, 3, 4, 5)


def path_top_coeffs(n: int, count: int | None = None) -> tuple[int, ...]:
    """(d(P_n, n-1), d(P_n, n-2), d(P_n, n-3), d(P_n, n-4)), truncated to the
    items valid for ``n`` unless ``count`` asks for more (an error)."""
    valid = sum(1 for lo in _PATH_TOP_MIN if n >= lo)
    if count is None:
        count = valid
    if count < 1 or count > valid:
        raise ValueError(f"only {valid} top coefficients have a closed form for n={n}")
    items = (n, comb(n, 2) - 2, comb(n, 3) - (3 * n - 8), comb(n, 4) - (2 * n * n - 13 * n + 20))
    return items[:count]


def _cycle_table(n: Fraction, order: int) -> list:
    if order == 0:
        return [3, -1, -1, -1]
    if order == 1:
        return [-n, n, 0, 0]
    if order == 2:
        return [n * (n - 4) / 4, -n * (n - 1) / 2, n * (n + 2) / 4, 0]
    return [
        -n**3 / 16 + 3 * n**2 / 4 - 2 * n,
        3 * n**3 / 16 - Fraction(9, 8) * n**2 + Fraction(15, 16) * n,
        -3 * n**3 / 16 + 3 * n / 4,
        n**3 / 16 + 3 * n**2 / 8 + Fraction(5, 16) * n,
    ]


def _path_table(n: Fraction, order: int) -> list:
    if order == 0:
        return [1, -1, -1, 1]
    if order == 1:
        return [0, (n + 1) / 2, 0, -(n + 1) / 2]
    if order == 2:
        return [-n * (n + 4) / 8, -(n - 1) ** 2 / 8, (n + 2) ** 2 / 8, (n - 3) * (n + 1) / 8]
    return [
        n**3 / 16 - n,
        -Fraction(9, 16) * n**2 + Fraction(3, 8) * n + Fraction(3, 16),
        -n**3 / 16 + n / 4,
        Fraction(9, 16) * n**2 + Fraction(3, 8) * n - Fraction(3, 16),
    ]


def closed_eval_minus1(family: str, n: int, order: int) -> int:
    """The ``order``-th derivative of D(P_n, x) or D(C_n, x) at x = -1,
    read off the residue of n mod 4."""
    if order not in (0, 1, 2, 3):
        raise ValueError("order must be 0..3")
    if family == "path":
        if n < 1:
            raise ValueError("path order must be at least 1")
        table = _path_table(Fraction(n), order)
    elif family == "cycle":
        if n < 3:
            raise ValueError("cycle order must be at least 3")
        table = _cycle_table(Fraction(n), order)
    else:
        raise ValueError(f"unknown family {family!r}")
    value = Fraction(table[n % 4])
    if value.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {value} for {family} n={n}")
    return int(value)


def gamma_closed(family: str, n: int) -> int:
    if family not in ("path", "cycle"):
        raise ValueError(f"unknown family {family!r}")
    if n < (1 if family == "path" else 3):
        raise ValueError("order below family minimum")
    return -(-n // 3)


def ord3_allowed(family: str, n: int) -> frozenset:
    """Admissible values of ord_3(D(G_n, -3)) for paths or cycles."""
    c = gamma_closed(family, n)
    r = n % 3
    if family == "path":
        return frozenset({c, c + 1} if r == 2 else {c})
    return frozenset({0: {c + 1}, 1: {c, c + 1}, 2: {c}}[r])
