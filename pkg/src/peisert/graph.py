"""Peisert-like graphs on Z_n and their 3- and 4-clique counts.

Vertices are 0..n-1 and x ~ y when x - y lies in the connection set
<g^4> u g<g^4>.  Adjacency is held as one Python-int bitset per vertex, so
neighbourhood intersections are single ``&`` operations and counting is
``int.bit_count``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import characters as ch
from .characters import GaussianInt
from .charsums import rho_xi
from .hypergeometric import ConsistencyError, f32_exact, m3, m5
from .ring import UnitGroup, ValidationError, build_unit_group


@dataclass(frozen=True, eq=False)
class PeisertLikeGraph:
    group: UnitGroup
    connection: tuple[int, ...]  # powers of g^4, then their g-translates
    H: int = field(repr=False)  # bit x set iff x in the connection set
    adj: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.group.n

    def __repr__(self):
        return f"PeisertLikeGraph(n={self.n}, g={self.group.g}, degree={len(self.connection)})"

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.adj[x % self.n] >> (y % self.n) & 1)

    def neighbours(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self):
        """Edges (u, v), u < v, in lexicographic order."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def adjacency_matrix(self) -> np.ndarray:
        n = self.n
        x = np.arange(n)
        member = np.zeros(n, dtype=bool)
        member[list(self.connection)] = True
        return member[(x[:, None] - x[None, :]) % n]


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def connection_set(G: UnitGroup) -> tuple[int, ...]:
    n, g = G.n, G.g
    g4 = pow(g, 4, n)
    quarter = G.phi // 4
    base, x = [], 1
    for _ in range(quarter):
        x = x * g4 % n
        base.append(x)
    return tuple(base + [b * g % n for b in base])


def build_graph(p: int, alpha: int = 1, doubled: bool = False,
                generator: int | None = None) -> PeisertLikeGraph:
    """G*(n) for n = p**alpha (or 2 p**alpha); p must be 1 mod 8."""
    if p % 8 != 1:
        raise ValidationError(f"p must be a prime ≡ 1 (mod 8), got {p}")
    G = build_unit_group(p, alpha, doubled, generator=generator)
    conn = connection_set(G)
    n = G.n
    H = 0
    for h in conn:
        H |= 1 << h
    full = (1 << n) - 1
    # adj[x] bit y <=> y - x in H (H = -H); the row is H rotated left by x.
    adj = tuple(((H << x) | (H >> (n - x))) & full for x in range(n))
    return PeisertLikeGraph(group=G, connection=conn, H=H, adj=adj)


def degree(graph: PeisertLikeGraph, v: int) -> int:
    return graph.adj[v % graph.n].bit_count()


def edge_count(graph: PeisertLikeGraph) -> int:
    return sum(a.bit_count() for a in graph.adj) // 2


def degree_formula(p: int, alpha: int) -> int:
    return p ** (alpha - 1) * (p - 1) // 2


def edge_count_formula(n: int, phi: int) -> int:
    return n * phi // 4


# --------------------------------------------------------------------------
# Censuses

def _above(v: int, n: int) -> int:
    """Bitmask of vertices > v."""
    return ((1 << n) - 1) ^ ((1 << (v + 1)) - 1)


def k3_brute(graph: PeisertLikeGraph) -> int:
    """Triangles u < v < w, counted once at their smallest edge."""
    n, adj = graph.n, graph.adj
    total = 0
    for u in range(n):
        au = adj[u]
        for v in _bits(au & _above(u, n)):
            total += (au & adj[v] & _above(v, n)).bit_count()
    return total


def _k4_range(adj: tuple[int, ...], n: int, lo: int, hi: int) -> int:
    total = 0
    for u in range(lo, hi):
        au = adj[u]
        for v in _bits(au & _above(u, n)):
            common = au & adj[v] & _above(v, n)
            while common:
                low = common & -common
                w = low.bit_length() - 1
                common ^= low
                # common now holds only vertices above w
                total += (common & adj[w]).bit_count()
    return total


def k4_brute(graph: PeisertLikeGraph, workers: int = 1) -> int:
    """4-cliques u < v < w < x, each found once from its two smallest vertices.

    With ``workers > 1`` the outer vertex range is split over processes;
    partial counts are summed in range order so the result does not depend
    on the worker count.
    """
    n, adj = graph.n, graph.adj
    if workers <= 1:
        return _k4_range(adj, n, 0, n)
    # Low vertices carry more work; interleave boundaries on a sqrt scale.
    cuts = sorted({int(n * (1 - (1 - k / (4 * workers)) ** 2)) for k in range(4 * workers + 1)})
    spans = list(zip(cuts[:-1], cuts[1:]))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_k4_range, [adj] * len(spans), [n] * len(spans),
                              [a for a, _ in spans], [b for _, b in spans]))
    return sum(parts)


# --------------------------------------------------------------------------
# Closed forms

def _require_prime_power(p: int, alpha: int) -> None:
    if p % 8 != 1:
        raise ValidationError(f"p must be a prime ≡ 1 (mod 8), got {p}")
    build_unit_group(p, alpha)  # primality


def k3_formula(p: int, alpha: int = 1) -> int:
    _require_prime_power(p, alpha)
    num = p ** (3 * alpha - 2) * (p - 1) * (p - 5)
    if num % 48:
        raise ConsistencyError(f"k3 numerator {num} is not divisible by 48")
    return num // 48


def k4_closed_form(p: int, alpha: int, rho: GaussianInt, xi: GaussianInt,
                   m3_value: GaussianInt, m5_value: GaussianInt) -> int:
    if m5_value.im != 0:
        raise ConsistencyError(f"M5 must be real, got {m5_value}")
    pa2 = p ** (2 * alpha - 2)
    bracket = (2 * pa2 * (p * p - 20 * p + 81) + 2 * rho.im ** 2
               + 4 * rho.im * xi.im - m3_value.re + 3 * m5_value.re)
    value = Fraction(p ** (2 * alpha - 1) * (p - 1) * bracket, 3072)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"k4 formula gave {value} for p={p}, alpha={alpha}")
    return int(value)


def k4_inputs(p: int, alpha: int = 1, conjugate: bool = False) -> dict[str, GaussianInt]:
    """rho, xi, M3, M5 for the order-4 character with chi(g) = i (or -i)."""
    _require_prime_power(p, alpha)
    chi = ch.chi4(build_unit_group(p, alpha))
    if conjugate:
        chi = chi.conj()
    rho, xi = rho_xi(chi)
    return {"rho": rho, "xi": xi, "m3": m3(chi), "m5": m5(chi)}


def k4_formula(p: int, alpha: int = 1, conjugate: bool = False) -> int:
    v = k4_inputs(p, alpha, conjugate)
    return k4_closed_form(p, alpha, v["rho"], v["xi"], v["m3"], v["m5"])


# --------------------------------------------------------------------------
# The induced subgraph on the connection set

def k3_local(graph: PeisertLikeGraph, v: int) -> int:
    """Triangles of the subgraph induced by H that contain v (v in H)."""
    if not graph.H >> (v % graph.n) & 1:
        raise ch.DomainError(f"{v} is not in the connection set")
    if graph.group.doubled:
        raise ch.DomainError("local counts are defined for n = p^alpha")
    nb = graph.adj[v] & graph.H
    return sum((graph.adj[w] & nb).bit_count() for w in _bits(nb)) // 2


def k3_induced(graph: PeisertLikeGraph) -> int:
    """Triangles of the subgraph induced by H, by direct census."""
    H, adj = graph.H, graph.adj
    total = 0
    for u in _bits(H):
        for v in _bits(adj[u] & H & _above(u, graph.n)):
            total += (adj[u] & adj[v] & H & _above(v, graph.n)).bit_count()
    return total


def k4_from_local(graph: PeisertLikeGraph) -> Fraction:
    """(q/4) * (phi/12) * (k3_local(1) + k3_local(g))."""
    G = graph.group
    local = k3_local(graph, 1) + k3_local(graph, G.g)
    return Fraction(G.n, 4) * Fraction(G.phi, 12) * local


def k3_local_formula(p: int, alpha: int, at_generator: bool = False) -> int:
    """Closed form of k3_local at vertex 1, or at g, in terms of rho, xi and
    the orbit values M1..M5.

    The count at g is the count at 1 with every coefficient conjugated,
    i.e. h = 1 - chi4(g) replaced by conj(h).
    """
    _require_prime_power(p, alpha)
    chi = ch.chi4(build_unit_group(p, alpha))
    rho, xi = rho_xi(chi)
    M1, M2, M3, M4, M5 = (f32_exact(t, chi) for t in ORBIT_REPRESENTATIVES)
    h = 1 - ch.I
    if at_generator:
        h = h.conjugate()
    hb = h.conjugate()
    pa = p ** (alpha - 1)
    re_h2rho = (h * h * rho).re
    bracket = (
        16 * (p - 9) * pa * re_h2rho
        + 32 * pa * pa * (p * p - 20 * p + 81)
        + 2 * (rho * (8 * (p - 17) * pa * h * h + 4 * (h * h + 4) * re_h2rho)).re
        + 32 * re_h2rho * (xi * h).re
        + 16 * (h * h * rho * rho).re
        + 8 * (1 - hb) * M1 + 8 * (1 - h) * M2 - 8 * h * M3 - 8 * hb * M4 + 48 * M5
    )
    if bracket.im != 0 or bracket.re % 2048:
        raise ConsistencyError(f"local count bracket {bracket} is not 2048 * integer")
    return bracket.re // 2048


#: Orbit representatives whose q^2 3F2 values are M1..M5.
ORBIT_REPRESENTATIVES = ((1, 1, 1, 0, 0), (3, 3, 3, 0, 0), (1, 3, 3, 2, 0),
                         (3, 1, 1, 2, 0), (1, 1, 3, 0, 0))


# --------------------------------------------------------------------------
# Structure checks

def translation_is_automorphism(graph: PeisertLikeGraph, a: int) -> bool:
    n = graph.n
    a %= n
    full = (1 << n) - 1
    for x in range(n):
        row = graph.adj[x]
        shifted = ((row << a) | (row >> (n - a))) & full if a else row
        if graph.adj[(x + a) % n] != shifted:
            return False
    return True


def random_translation_check(graph: PeisertLikeGraph, seed: int = 0) -> bool:
    return translation_is_automorphism(graph, random.Random(seed).randrange(graph.n))


def generator_invariance_check(p: int, alpha: int = 1, doubled: bool = False) -> bool:
    """Rebuild the graph from every generator h of Z_n^* and compare.

    dlog_g(h) = 1 (mod 4): identical edge sets.  dlog_g(h) = 3 (mod 4):
    x -> h x is an isomorphism from the canonical graph onto the rebuilt one.
    """
    base = build_graph(p, alpha, doubled)
    G = base.group
    A = base.adjacency_matrix()
    x = np.arange(G.n)
    for h in G.generators():
        other = build_graph(p, alpha, doubled, generator=h)
        B = other.adjacency_matrix()
        t = G.log(h) % 4
        if t == 1:
            if not np.array_equal(A, B):
                return False
        elif t == 3:
            perm = (h * x) % G.n
            if not np.array_equal(B[np.ix_(perm, perm)], A):
                return False
        else:
            raise ConsistencyError(f"generator {h} has even discrete log")
    return True


# --------------------------------------------------------------------------
# Export

def export_edgelist(graph: PeisertLikeGraph, fmt: str = "edgelist") -> bytes:
    """``edgelist``: "u v" per line, u < v ascending.  ``dimacs``: a
    "p edge n m" header then "e u v" lines with 1-based vertices."""
    fmt = fmt.lower().replace("-", "").replace("_", "")
    if fmt == "edgelist":
        lines = [f"{u} {v}" for u, v in graph.edges()]
    elif fmt == "dimacs":
        lines = [f"p edge {graph.n} {edge_count(graph)}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges()]
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    return ("\n".join(lines) + "\n").encode("ascii")
