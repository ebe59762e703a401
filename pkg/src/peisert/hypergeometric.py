"""Hypergeometric functions with Dirichlet characters as parameters.

Exact values are carried scaled: ``f21_scaled`` returns q * 2F1 and
``f32_exact`` returns q^2 * 3F2, both in Z[i], for parameters that are powers
of the order-4 character.  The dual-group definitions are implemented in
floating point for cross-checking.

Parameter tuples ``t = (t1, ..., t5)`` in Z_4^5 name
q^2 * 3F2(chi^t1, chi^t2, chi^t3; chi^t4, chi^t5 | 1).  Seven affine maps on
such tuples preserve the value (up to a computable sign); they generate a
group of order 24 whose orbits partition the admissible tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .characters import (
    DirichletCharacter,
    DomainError,
    GaussianInt,
    _same_group,
    chi4,
    sign_at_minus_one,
    z4_power,
    z4_sum,
)
from .charsums import CharOrGroup, jacobi_family, minus_one_signs
from .ring import UnitGroup

HypTuple = tuple[int, int, int, int, int]

CHARSUM_PHI_LIMIT = 10_000


class ConsistencyError(RuntimeError):
    """A quantity that must be an exact integer/real came out otherwise."""


def _order4(obj: CharOrGroup) -> DirichletCharacter:
    chi = chi4(obj) if isinstance(obj, UnitGroup) else obj
    if chi.order != 4:
        raise DomainError(f"expected a character of order 4, got {chi!r}")
    if chi.group.doubled:
        raise DomainError("hypergeometric functions are defined mod p^alpha")
    return chi


# --------------------------------------------------------------------------
# Exact sums

def f21_scaled(A: DirichletCharacter, B: DirichletCharacter,
               C: DirichletCharacter, x: int) -> GaussianInt:
    """q * 2F1(A, B; C | x), exact for characters of order dividing 4."""
    _same_group(A, B, C)
    G = A.group
    n = G.n
    x %= n
    if not G.is_unit(x):
        return GaussianInt(0)
    y = np.arange(n)
    s = z4_sum(B.z4[y], (B.conj() * C).z4[(1 - y) % n], A.conj().z4[(1 - x * y) % n])
    return sign_at_minus_one(B * C) * s


def _rows(n: int, budget: int = 1 << 21):
    step = max(1, budget // n)
    for start in range(0, n, step):
        yield np.arange(start, min(n, start + step))


def f32_exact(t: Sequence[int], chi: CharOrGroup) -> GaussianInt:
    """q^2 * 3F2(chi^t1, chi^t2, chi^t3; chi^t4, chi^t5 | 1), exactly.

    Uses the double-sum form
    BCDE(-1) sum_{y,z} C(y) conj(C)E(1-y) B(z) conj(B)D(1-z) conj(A)(1-yz).
    """
    chi = _order4(chi)
    a, b, c, d, e = (int(v) % 4 for v in t)
    n = chi.group.n
    e4 = chi.z4
    z = np.arange(n)[None, :]
    Bz = z4_power(e4[z], b)
    BDz = z4_power(e4[(1 - z) % n], d - b)
    total = GaussianInt(0)
    for ys in _rows(n):
        y = ys[:, None]
        total = total + z4_sum(
            z4_power(e4[y], c),
            z4_power(e4[(1 - y) % n], e - c),
            Bz,
            BDz,
            z4_power(e4[(1 - y * z) % n], -a),
        )
    return sign_at_minus_one(chi ** (b + c + d + e)) * total


def m3(chi: CharOrGroup) -> GaussianInt:
    return f32_exact((1, 3, 3, 2, 0), chi)


def m5(chi: CharOrGroup) -> GaussianInt:
    v = f32_exact((1, 1, 3, 0, 0), chi)
    if v.im != 0:
        raise ConsistencyError(f"M5 must be real, got {v}")
    return v


# --------------------------------------------------------------------------
# Dual-group (floating point) forms

def _qbinom_family(U: DirichletCharacter, V: DirichletCharacter) -> np.ndarray:
    """q * binom(U chi, V chi) for every chi, indexed by exponent of chi."""
    G = U.group
    J = jacobi_family(U, V.conj(), 1, -1)
    return complex(sign_at_minus_one(V)) * minus_one_signs(G) * J


def _guard(G: UnitGroup) -> None:
    if G.phi > CHARSUM_PHI_LIMIT:
        raise DomainError(
            f"phi={G.phi} exceeds {CHARSUM_PHI_LIMIT} for dual-group summation")


def nfn_charsum(tops: Sequence[DirichletCharacter],
                bottoms: Sequence[DirichletCharacter], x: int) -> complex:
    """n+1Fn(A0..An; B1..Bn | x) via the sum over the dual group.

    ``(q/phi) sum_chi binom(A0 chi, chi) prod_k binom(Ak chi, Bk chi) chi(x)``.
    """
    if len(tops) != len(bottoms) + 1:
        raise ValueError("need one more top parameter than bottom parameters")
    _same_group(*tops, *bottoms)
    G = tops[0].group
    _guard(G)
    q, phi = G.n, G.phi
    eps = DirichletCharacter(G, 0)
    prod = _qbinom_family(tops[0], eps) / q
    for A, B in zip(tops[1:], bottoms):
        prod = prod * _qbinom_family(A, B) / q
    d = G.log(x)
    if d < 0:
        return 0j
    chi_x = np.exp(2j * np.pi * ((np.arange(phi) * d) % phi) / phi)
    return complex(q / phi * np.sum(prod * chi_x))


def f21_charsum(A, B, C, x: int) -> complex:
    return nfn_charsum((A, B), (C,), x)


def f21_general(A: DirichletCharacter, B: DirichletCharacter,
                C: DirichletCharacter) -> np.ndarray:
    """2F1(A, B; C | x) for every x in Z_q from the defining single sum."""
    _same_group(A, B, C)
    G = A.group
    n = G.n
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    terms = B.values[y] * (B.conj() * C).values[(1 - y) % n] \
        * A.conj().values[(1 - x * y) % n]
    eps_x = DirichletCharacter(G, 0).values
    return complex(sign_at_minus_one(B * C)) * eps_x * terms.sum(axis=1) / n


def f21_charsum_residual(A, B, C, x: int) -> float:
    """|dual-group form - defining sum| for 2F1 at x."""
    direct = complex(f21_general(A, B, C)[x % A.group.n])
    return abs(f21_charsum(A, B, C, x) - direct)


def f32_charsum(t: Sequence[int], chi: CharOrGroup) -> complex:
    """q^2 * 3F2 at 1 from the dual-group definition."""
    chi = _order4(chi)
    a, b, c, d, e = (int(v) for v in t)
    q = chi.group.n
    return q * q * nfn_charsum((chi**a, chi**b, chi**c), (chi**d, chi**e), 1)


def fn_recursive(tops: Sequence[DirichletCharacter],
                 bottoms: Sequence[DirichletCharacter], x: int) -> complex:
    """n+1Fn at x by peeling one parameter pair at a time down to 2F1.

    ``n+1Fn(..| x) = AnBn(-1)/q sum_y nFn-1(..| xy) An(y) conj(An)Bn(1-y)``.
    """
    if len(tops) != len(bottoms) + 1 or len(bottoms) < 1:
        raise ValueError("need n >= 1 bottom parameters and n + 1 top ones")
    _same_group(*tops, *bottoms)
    G = tops[0].group
    n = G.n
    F = f21_general(tops[0], tops[1], bottoms[0])
    xs = np.arange(n)[:, None]
    ys = np.arange(n)[None, :]
    for A, B in zip(tops[2:], bottoms[1:]):
        w = A.values[ys] * (A.conj() * B).values[(1 - ys) % n]
        F = complex(sign_at_minus_one(A * B)) / n * (F[(xs * ys) % n] * w).sum(axis=1)
    return complex(F[x % n])


# --------------------------------------------------------------------------
# Parameter tuples and the transformation group

def in_X(t: Sequence[int]) -> bool:
    """Admissible tuples: t1, t2, t3 avoid 0, t4, t5 and t1+t2+t3 != t4+t5."""
    t1, t2, t3, t4, t5 = (int(v) % 4 for v in t)
    return (all(v not in (0, t4, t5) for v in (t1, t2, t3))
            and (t1 + t2 + t3) % 4 != (t4 + t5) % 4)


X_TUPLES: tuple[HypTuple, ...] = tuple(
    t for t in itertools.product(range(4), repeat=5) if in_X(t))

_X_INDEX = {t: k for k, t in enumerate(X_TUPLES)}

_FORMULAS: dict[int, Callable[..., tuple]] = {
    1: lambda t1, t2, t3, t4, t5: (t2 - t4, t1 - t4, t3 - t4, -t4, t5 - t4),
    2: lambda t1, t2, t3, t4, t5: (t1, t1 - t4, t1 - t5, t1 - t2, t1 - t3),
    3: lambda t1, t2, t3, t4, t5: (t2 - t4, t2, t2 - t5, t2 - t1, t2 - t3),
    4: lambda t1, t2, t3, t4, t5: (t1, t2, t5 - t3, t1 + t2 - t4, t5),
    5: lambda t1, t2, t3, t4, t5: (t1, t4 - t2, t3, t4, t1 + t3 - t5),
    6: lambda t1, t2, t3, t4, t5: (t4 - t1, t2, t3, t4, t2 + t3 - t5),
    7: lambda t1, t2, t3, t4, t5: (t4 - t1, t4 - t2, t3, t4, t4 + t5 - t1 - t2),
}

# Indices into t whose characters multiply to the sign factor of each map.
_SIGN_SUPPORT = {
    1: (),
    2: (0, 1, 2, 3, 4),
    3: (0, 1, 2, 3, 4),
    4: (0, 4),
    5: (0, 3),
    6: (1,),
    7: (0, 1),
}


def _check_X(t) -> HypTuple:
    t = tuple(int(v) % 4 for v in t)
    if len(t) != 5 or not in_X(t):
        raise DomainError(f"{t} is not an admissible parameter tuple")
    return t


def transform(i: int, t: Sequence[int]) -> HypTuple:
    if i not in _FORMULAS:
        raise ValueError(f"no transformation f{i}")
    t = _check_X(t)
    out = tuple(v % 4 for v in _FORMULAS[i](*t))
    if not in_X(out):
        raise ConsistencyError(f"f{i} maps {t} outside X to {out}")
    return out


def transform_sign(i: int, t: Sequence[int], chi: CharOrGroup) -> GaussianInt:
    """The (+-1) factor with f32(t) = sign * f32(f_i(t))."""
    chi = _order4(chi)
    k = sum(int(t[j]) for j in _SIGN_SUPPORT[i])
    return sign_at_minus_one(chi**k)


def transformation_identity(i: int, t: Sequence[int],
                            chi: CharOrGroup) -> tuple[GaussianInt, GaussianInt]:
    """(q^2 3F2 at t, sign * q^2 3F2 at f_i(t)); the two must agree."""
    chi = _order4(chi)
    t = _check_X(t)
    return f32_exact(t, chi), transform_sign(i, t, chi) * f32_exact(transform(i, t), chi)


@dataclass(frozen=True)
class TupleMap:
    """A map X -> X stored as the permutation of ``X_TUPLES`` it induces."""

    name: str
    perm: tuple[int, ...]

    def __call__(self, t: Sequence[int]) -> HypTuple:
        return X_TUPLES[self.perm[_X_INDEX[_check_X(t)]]]

    def compose(self, other: "TupleMap") -> "TupleMap":
        """self o other."""
        return TupleMap(f"{self.name}∘{other.name}",
                        tuple(self.perm[k] for k in other.perm))

    def __eq__(self, other):
        return isinstance(other, TupleMap) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)


IDENTITY = TupleMap("f0", tuple(range(len(X_TUPLES))))


@lru_cache(maxsize=None)
def generator_map(i: int) -> TupleMap:
    return TupleMap(f"f{i}", tuple(_X_INDEX[transform(i, t)] for t in X_TUPLES))


@lru_cache(maxsize=None)
def group_closure() -> tuple[TupleMap, ...]:
    """All compositions of f1..f7, found breadth first (shortest names)."""
    gens = [generator_map(i) for i in range(1, 8)]
    seen = {IDENTITY: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for m in frontier:
            for f in gens:
                c = f.compose(m) if m is not IDENTITY else f
                if c not in seen:
                    seen[c] = c
                    nxt.append(c)
        frontier = nxt
    return tuple(seen)


def listed_group() -> tuple[TupleMap, ...]:
    """The 24 maps f0, f_i, f_j o f_l (j<=3<l), f4 o f1, f6 o f2, f5 o f3,
    f1 o f4 o f1, built explicitly."""
    f = generator_map
    out = [IDENTITY] + [f(i) for i in range(1, 8)]
    out += [f(j).compose(f(l)) for j in range(1, 4) for l in range(4, 8)]
    out += [f(4).compose(f(1)), f(6).compose(f(2)), f(5).compose(f(3)),
            f(1).compose(f(4)).compose(f(1))]
    return tuple(out)


def orbit(t: Sequence[int]) -> frozenset[HypTuple]:
    t = _check_X(t)
    return frozenset(m(t) for m in group_closure())


def orbits() -> list[tuple[HypTuple, ...]]:
    """Orbits of X, each sorted, listed by smallest member."""
    seen: set[HypTuple] = set()
    out = []
    for t in X_TUPLES:
        if t not in seen:
            o = tuple(sorted(orbit(t)))
            seen.update(o)
            out.append(o)
    return out


def orbit_report(t: Sequence[int], chi: CharOrGroup) -> dict:
    """JSON-ready orbit listing with the common exact value."""
    chi = _order4(chi)
    members = sorted(orbit(t))
    values = {f32_exact(m, chi) for m in members}
    if len(values) != 1:
        raise ConsistencyError(f"orbit of {tuple(t)} is not value-constant")
    return {
        "representative": list(_check_X(t)),
        "members": [list(m) for m in members],
        "value": values.pop().to_json(),
    }
