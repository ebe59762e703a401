"""Dirichlet characters on a cyclic unit group, and exact Gaussian integers.

A character is stored as an exponent ``e`` modulo ``phi``: it sends the
generator ``g`` to ``zeta**e`` where ``zeta = exp(2*pi*i/phi)``.  Characters
whose order divides 4 take values in {0, 1, i, -1, -i} and are evaluated
exactly; everything else goes through complex floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Union

import numpy as np

from .ring import NONUNIT, UnitGroup


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """An element re + im*i of Z[i]."""

    re: int = 0
    im: int = 0

    def __post_init__(self):
        # Python ints never overflow; reject floats and numpy scalars that could.
        if type(self.re) is not int or type(self.im) is not int:
            object.__setattr__(self, "re", _as_int(self.re))
            object.__setattr__(self, "im", _as_int(self.im))

    @classmethod
    def coerce(cls, z: "GaussianLike") -> "GaussianInt":
        if isinstance(z, GaussianInt):
            return z
        return cls(_as_int(z), 0)

    @classmethod
    def unit(cls, k: int) -> "GaussianInt":
        """i**k."""
        return _UNITS[k % 4]

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not in Z[i]")
        out, base = GaussianInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(self.re, self.im)

    def to_json(self) -> list[int]:
        return [self.re, self.im]

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{self.re}{sign}{im}"


GaussianLike = Union[GaussianInt, int]


def _as_int(v) -> int:
    if isinstance(v, (bool, float)) or not hasattr(v, "__index__"):
        raise TypeError(f"GaussianInt parts must be integers, got {v!r}")
    return int(v)


def _coerce_or_none(v):
    if isinstance(v, GaussianInt):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return GaussianInt(int(v), 0)
    return None


_UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))
I = _UNITS[1]


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    group: UnitGroup
    e: int

    def __post_init__(self):
        object.__setattr__(self, "e", self.e % self.group.phi)

    @property
    def order(self) -> int:
        return self.group.phi // gcd(self.e, self.group.phi)

    @property
    def is_z4(self) -> bool:
        return 4 % self.order == 0

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter)
                and self.group is other.group and self.e == other.e)

    def __hash__(self):
        return hash((id(self.group), self.e))

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        _same_group(self, other)
        return DirichletCharacter(self.group, self.e + other.e)

    def __pow__(self, k: int) -> "DirichletCharacter":
        return DirichletCharacter(self.group, self.e * k)

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(self.group, -self.e)

    def __truediv__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        return self * other.conj()

    def __repr__(self):
        return f"DirichletCharacter(n={self.group.n}, e={self.e}, order={self.order})"

    def __call__(self, x: int) -> complex:
        k = eval_exponent(self, x)
        if k == NONUNIT:
            return 0j
        return np.exp(2j * np.pi * k / self.group.phi)

    @cached_property
    def exponents(self) -> np.ndarray:
        """Value exponents mod phi for every residue, NONUNIT where zero."""
        d = self.group.dlog
        out = np.where(d == NONUNIT, NONUNIT, (self.e * d) % self.group.phi)
        out.flags.writeable = False
        return out

    @cached_property
    def z4(self) -> np.ndarray:
        """Value exponents of i for every residue (order must divide 4)."""
        if not self.is_z4:
            raise DomainError(f"{self!r} does not have order dividing 4")
        step = self.e // (self.group.phi // 4)
        d = self.group.dlog
        out = np.where(d == NONUNIT, NONUNIT, (step * d) % 4)
        out.flags.writeable = False
        return out

    @cached_property
    def values(self) -> np.ndarray:
        """Complex values at every residue."""
        k = self.exponents
        v = np.exp(2j * np.pi * k / self.group.phi)
        return np.where(k == NONUNIT, 0, v)


def _same_group(*chars: DirichletCharacter) -> None:
    g0 = chars[0].group
    for c in chars[1:]:
        if c.group is not g0:
            raise DomainError("characters are defined on different moduli")


def char_from_exponent(G: UnitGroup, e: int) -> DirichletCharacter:
    return DirichletCharacter(G, e)


def dual_group(G: UnitGroup) -> list[DirichletCharacter]:
    return [DirichletCharacter(G, e) for e in range(G.phi)]


def eval_exponent(chi: DirichletCharacter, x: int) -> int:
    """Exponent k with chi(x) = zeta**k, or NONUNIT when chi(x) = 0."""
    return int(chi.exponents[x % chi.group.n])


def eval_z4(chi: DirichletCharacter, x: int) -> GaussianInt:
    k = int(chi.z4[x % chi.group.n])
    if k == NONUNIT:
        return GaussianInt(0)
    return GaussianInt.unit(k)


def chi4(G: UnitGroup) -> DirichletCharacter:
    """The order-4 character normalised by chi4(g) = i."""
    if G.phi % 4:
        raise DomainError(f"no character of order 4 mod {G.n}")
    return DirichletCharacter(G, G.phi // 4)


def quadratic(G: UnitGroup) -> DirichletCharacter:
    if G.phi % 2:
        raise DomainError(f"no quadratic character mod {G.n}")
    return DirichletCharacter(G, G.phi // 2)


def trivial(G: UnitGroup) -> DirichletCharacter:
    return DirichletCharacter(G, 0)


def sign_at_minus_one(chi: DirichletCharacter) -> GaussianInt:
    """chi(-1), which is always +1 or -1 (dlog(-1) = phi/2)."""
    return GaussianInt(-1 if chi.e % 2 else 1)


def z4_sum(*factors: np.ndarray) -> GaussianInt:
    """Exact sum of products of fourth roots of unity.

    Each factor is an integer array of exponents of i with NONUNIT marking a
    zero factor; arrays are combined elementwise and the products summed.
    """
    factors = np.broadcast_arrays(*factors)
    dead = np.zeros(factors[0].shape, dtype=bool)
    total = np.zeros(factors[0].shape, dtype=np.int64)
    for f in factors:
        dead |= f == NONUNIT
        total += f
    counts = np.bincount((total[~dead] % 4).ravel(), minlength=4)
    return GaussianInt(int(counts[0] - counts[2]), int(counts[1] - counts[3]))


def z4_power(exps: np.ndarray, k: int) -> np.ndarray:
    """Exponent table of chi**k given the exponent table of chi (mod 4)."""
    return np.where(exps == NONUNIT, NONUNIT, (k * exps) % 4)


def gaussian_sum(values: Iterable[GaussianLike]) -> GaussianInt:
    out = GaussianInt(0)
    for v in values:
        out = out + v
    return out
