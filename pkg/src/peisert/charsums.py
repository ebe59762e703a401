"""Jacobi sums, q-scaled binomial coefficients for Dirichlet characters and
the closed-form character-sum tables used in the 4-clique count.

Everything on the clique-count path is exact in Z[i].  The dual-group identities
(sums over all phi characters) are evaluated in floating point through
:func:`jacobi_family`, which computes a whole one-parameter family of Jacobi
sums with a single FFT.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .characters import (
    DirichletCharacter,
    DomainError,
    GaussianInt,
    _same_group,
    chi4,
    quadratic,
    sign_at_minus_one,
    z4_power,
    z4_sum,
)
from .ring import NONUNIT, UnitGroup

CharOrGroup = Union[DirichletCharacter, UnitGroup]


def _order4(obj: CharOrGroup) -> DirichletCharacter:
    chi = chi4(obj) if isinstance(obj, UnitGroup) else obj
    if chi.order != 4:
        raise DomainError(f"expected a character of order 4, got {chi!r}")
    if chi.group.doubled:
        raise DomainError("character-sum lemmas are stated for q = p^alpha only")
    return chi


# --------------------------------------------------------------------------
# Jacobi sums

def jacobi_exact(A: DirichletCharacter, B: DirichletCharacter) -> GaussianInt:
    """J(A, B) = sum_x A(x) B(1-x), exactly, for characters of order | 4."""
    _same_group(A, B)
    n = A.group.n
    x = np.arange(n)
    return z4_sum(A.z4[x], B.z4[(1 - x) % n])


def jacobi_general(A: DirichletCharacter, B: DirichletCharacter) -> complex:
    """J(A, B) by direct floating-point summation."""
    _same_group(A, B)
    n = A.group.n
    x = np.arange(n)
    return complex(np.sum(A.values[x] * B.values[(1 - x) % n]))


@lru_cache(maxsize=64)
def _jacobi_support(G: UnitGroup) -> tuple[np.ndarray, np.ndarray]:
    x = np.arange(G.n)
    dx, d1 = G.dlog[x], G.dlog[(1 - x) % G.n]
    ok = (dx != NONUNIT) & (d1 != NONUNIT)
    return dx[ok], d1[ok]


def jacobi_family(U: DirichletCharacter, V: DirichletCharacter,
                  s: int, t: int) -> np.ndarray:
    """J(U chi^s, V chi^t) for every chi in the dual group.

    Entry ``c`` corresponds to the character with exponent ``c``.
    """
    _same_group(U, V)
    G = U.group
    phi = G.phi
    dx, d1 = _jacobi_support(G)
    w = np.exp(2j * np.pi * ((U.e * dx + V.e * d1) % phi) / phi)
    k = (s * dx + t * d1) % phi
    W = (np.bincount(k, weights=w.real, minlength=phi)
         + 1j * np.bincount(k, weights=w.imag, minlength=phi))
    return phi * np.fft.ifft(W)


def minus_one_signs(G: UnitGroup) -> np.ndarray:
    """chi(-1) for every chi in the dual group, indexed by exponent."""
    return np.where(np.arange(G.phi) % 2, -1.0, 1.0)


# --------------------------------------------------------------------------
# Binomial coefficients, carried q-scaled

def qbinom(A: DirichletCharacter, B: DirichletCharacter) -> GaussianInt:
    """q * binom(A, B) = B(-1) J(A, conj B)."""
    return sign_at_minus_one(B) * jacobi_exact(A, B.conj())


def qbinom_general(A: DirichletCharacter, B: DirichletCharacter) -> complex:
    return complex(sign_at_minus_one(B)) * jacobi_general(A, B.conj())


def binomial_identities(A: DirichletCharacter, B: DirichletCharacter) -> dict[str, tuple]:
    """The three symmetry identities of the binomial coefficient.

    Returns ``{name: (lhs, rhs)}``; every pair must be equal.
    """
    lhs = qbinom(A, B)
    return {
        "swap": (lhs, qbinom(A, A * B.conj())),
        "absorb": (lhs, sign_at_minus_one(B) * qbinom(A.conj() * B, B)),
        "reflect": (lhs, sign_at_minus_one(A * B) * qbinom(B.conj(), A.conj())),
    }


# --------------------------------------------------------------------------
# Point expansion of A(1+x) over the dual group

def point_expansion_residuals(A: DirichletCharacter) -> np.ndarray:
    """|A(1+x) - expansion(x)| for every x in Z_q.

    The expansion is the delta part over multiples of p plus
    (1/phi) * sum_chi J(A, conj chi) chi(-x).
    """
    G = A.group
    if G.doubled:
        raise DomainError("the point expansion is stated for q = p^alpha")
    n, phi = G.n, G.phi
    eps = DirichletCharacter(G, 0)
    J = jacobi_family(A, eps, 0, -1)
    # S[k] = sum_c J[c] zeta^(c k)
    S = phi * np.fft.ifft(J)
    x = np.arange(n)
    d_minus = G.dlog[(-x) % n]
    dual_part = np.where(d_minus == NONUNIT, 0, S[np.maximum(d_minus, 0)] / phi)
    delta_part = np.where(x % G.p == 0, A.values[(1 + x) % n], 0)
    lhs = A.values[(1 + x) % n]
    return np.abs(lhs - delta_part - dual_part)


def point_expansion_residual(A: DirichletCharacter, x: int) -> float:
    return float(point_expansion_residuals(A)[x % A.group.n])


# --------------------------------------------------------------------------
# Closed-form character-sum tables

@lru_cache(maxsize=64)
def rho_xi(chi: DirichletCharacter) -> tuple[GaussianInt, GaussianInt]:
    """(J(chi, chi), J(chi, chi^2)) for an order-4 character chi."""
    return jacobi_exact(chi, chi), jacobi_exact(chi, chi**2)


LEMSEC1_TRIPLES = (
    (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 1, 1),
    (1, 0, 1), (1, 1, 0), (0, -1, 1), (-1, 0, 1), (-1, 1, 0),
)


def lemsec1_eval(chi: CharOrGroup, x: int,
                 triple: tuple[int, int, int]) -> tuple[GaussianInt, GaussianInt]:
    """Single sum over y of chi^i1(x-y) chi^i2(1-y) chi^i3(y), y, 1-y, x-y units.

    Returns ``(brute, closed)`` for a unit x with 1-x a unit.
    """
    chi = _order4(chi)
    G = chi.group
    triple = tuple(triple)
    if triple not in LEMSEC1_TRIPLES:
        raise DomainError(f"untabulated exponent triple {triple}")
    n = G.n
    x %= n
    if not (G.is_unit(x) and G.is_unit(1 - x)):
        raise DomainError(f"x={x} must have x and 1-x units")
    i1, i2, i3 = triple
    e4 = chi.z4
    y = np.arange(n)
    brute = z4_sum(z4_power(e4[(x - y) % n], i1),
                   z4_power(e4[(1 - y) % n], i2),
                   z4_power(e4[y], i3))

    c = lambda z: GaussianInt.unit(int(e4[z % n]))  # noqa: E731  x, 1-x are units
    cb = lambda z: c(z).conjugate()  # noqa: E731
    phi_ = lambda z: c(z) * c(z)  # noqa: E731
    rho, _ = rho_xi(chi)
    pa = G.p ** (G.alpha - 1)
    closed = {
        (0, 0, 0): GaussianInt(pa * (G.p - 3)),
        (0, 0, 1): -pa * (1 + c(x)),
        (0, 1, 0): -pa * (1 + c(1 - x)),
        (1, 0, 0): -pa * (c(1 - x) + c(x)),
        (0, 1, 1): rho - pa * c(1 - x) * c(x),
        (1, 0, 1): phi_(x) * rho - pa * c(1 - x),
        (1, 1, 0): phi_(x - 1) * rho - pa * c(x),
        (0, -1, 1): -pa * (1 + cb(1 - x) * c(x)),
        (-1, 0, 1): -pa * (1 + cb(1 - x)),
        (-1, 1, 0): -pa * (1 + cb(x)),
    }[triple]
    return brute, closed


def _xy_grid_terms(chi: DirichletCharacter, triple) -> tuple[np.ndarray, ...]:
    """Exponent grids (x on axis 0, y on axis 1) for
    eps(x) eps(1-x) chi^i1(y) chi^i2(1-y) chi^i3(x-y)."""
    G = chi.group
    n = G.n
    e4 = chi.z4
    i1, i2, i3 = triple
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return (
        z4_power(e4[x], 0),
        z4_power(e4[(1 - x) % n], 0),
        z4_power(e4[y], i1),
        z4_power(e4[(1 - y) % n], i2),
        z4_power(e4[(x - y) % n], i3),
    )


LEMA1_TRIPLES = ((1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1))


def lema1_eval(chi: CharOrGroup,
               triple: tuple[int, int, int]) -> tuple[GaussianInt, GaussianInt]:
    """Double sum over x, y of chi^i1(y) chi^i2(1-y) chi^i3(x-y) with
    x, 1-x, y, 1-y, x-y all units.  Returns ``(brute, closed)``."""
    chi = _order4(chi)
    triple = tuple(triple)
    if triple not in LEMA1_TRIPLES:
        raise DomainError(f"untabulated exponent triple {triple}")
    G = chi.group
    brute = z4_sum(*_xy_grid_terms(chi, triple))
    _, xi = rho_xi(chi)
    pa = G.p ** (G.alpha - 1)
    closed = {
        (1, 1, 1): -2 * pa * xi,
        (1, 1, -1): GaussianInt(2 * pa * pa),
        (1, -1, 1): -pa * (xi.conjugate() - pa),
        (1, -1, -1): -pa * (xi - pa),
    }[triple]
    return brute, closed


CORR_ROWS = (
    (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
    (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1),
)

#: Column weights A_x as (power of chi, argument is 1-x).
CORR_COLUMNS = ((1, False), (-1, False), (1, True), (-1, True))

#: Entry (w, z) -> (S index, conjugated).
CORR_LAYOUT = (
    ((1, False), (1, False), (1, False), (1, False)),
    ((2, False), (2, True), (2, False), (2, True)),
    ((3, False), (6, False), (5, False), (4, True)),
    ((4, False), (5, True), (6, False), (3, False)),
    ((5, False), (4, True), (3, False), (6, False)),
    ((6, False), (3, False), (4, False), (5, True)),
    ((2, False), (2, True), (2, False), (2, True)),
    ((1, True), (1, True), (1, True), (1, True)),
)


@dataclass(frozen=True)
class LemmaCorrTable:
    rho: GaussianInt
    xi: GaussianInt
    S: tuple[GaussianInt, ...]  # S[1]..S[6]; S[0] unused
    layout: tuple = CORR_LAYOUT

    def entry(self, w: int, z: int) -> GaussianInt:
        if not (1 <= w <= 8 and 1 <= z <= 4):
            raise IndexError(f"no table cell ({w}, {z})")
        k, conj = self.layout[w - 1][z - 1]
        return self.S[k].conjugate() if conj else self.S[k]

    def label(self, w: int, z: int) -> str:
        k, conj = self.layout[w - 1][z - 1]
        return f"conj(S{k})" if conj else f"S{k}"


def corr_table(chi: CharOrGroup) -> LemmaCorrTable:
    chi = _order4(chi)
    G = chi.group
    rho, xi = rho_xi(chi)
    pa = G.p ** (G.alpha - 1)
    pa2 = pa * pa
    S = (
        None,
        -pa * (rho + xi),
        -pa * rho + pa2,
        GaussianInt(rho.norm() + pa2),
        pa2 - pa * xi,
        rho * rho - pa * xi.conjugate(),
        GaussianInt(2 * pa2),
    )
    return LemmaCorrTable(rho=rho, xi=xi, S=S)


def corr_eval(chi: CharOrGroup, w: int, z: int) -> tuple[GaussianInt, GaussianInt]:
    """Weighted double sum for table cell (w, z); returns ``(brute, closed)``.

    Rows w = 1..8 pick the exponent triple, columns z = 1..4 pick the weight
    chi(x), conj chi(x), chi(1-x), conj chi(1-x).
    """
    chi = _order4(chi)
    table = corr_table(chi)
    closed = table.entry(w, z)
    G = chi.group
    n = G.n
    power, at_one_minus = CORR_COLUMNS[z - 1]
    x = np.arange(n)[:, None]
    weight = z4_power(chi.z4[(1 - x) % n if at_one_minus else x], power)
    brute = z4_sum(weight, *_xy_grid_terms(chi, CORR_ROWS[w - 1]))
    return brute, closed
