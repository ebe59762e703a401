"""Unit groups of Z_n for n = p^a or 2p^a, with a canonical generator and a
full discrete-log table."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

#: Marker stored in the dlog table (and in character exponent tables) for
#: residues that are not units.
NONUNIT = -1


class ValidationError(ValueError):
    """Raised for inputs outside the supported moduli."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def divisors(m: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return small + large[::-1]


def multiplicative_order(a: int, n: int, phi: int) -> int:
    for d in divisors(phi):
        if pow(a, d, n) == 1:
            return d
    raise ValueError(f"{a} is not a unit mod {n}")


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """The cyclic group Z_n^* together with its canonical generator.

    ``dlog[x]`` is the exponent k with ``g**k == x (mod n)`` for units and
    :data:`NONUNIT` otherwise.
    """

    n: int
    p: int
    alpha: int
    doubled: bool
    g: int
    phi: int
    dlog: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        """Odd prime-power part p^alpha."""
        return self.p**self.alpha

    def log(self, x: int) -> int:
        return int(self.dlog[x % self.n])

    def is_unit(self, x: int) -> bool:
        return self.dlog[x % self.n] != NONUNIT

    def units(self) -> np.ndarray:
        return np.flatnonzero(self.dlog != NONUNIT)

    def generators(self) -> list[int]:
        """All generators of Z_n^*, in increasing order."""
        return sorted(
            int(self.powers[k]) for k in range(self.phi) if gcd(k, self.phi) == 1
        )

    def __repr__(self) -> str:
        return f"UnitGroup(n={self.n}, g={self.g}, phi={self.phi})"


def smallest_generator(n: int, phi: int) -> int:
    """Smallest positive unit of order ``phi`` modulo ``n``."""
    proper = [d for d in divisors(phi) if d < phi]
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        if all(pow(a, d, n) != 1 for d in proper):
            return a
    raise ValidationError(f"Z_{n}^* is not cyclic")


def build_unit_group(p: int, alpha: int = 1, doubled: bool = False,
                     generator: int | None = None) -> UnitGroup:
    """Build Z_n^* for n = p**alpha (or 2*p**alpha when ``doubled``).

    The generator defaults to the smallest generating unit; passing
    ``generator`` builds the same group logged to a different base.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValidationError(f"p must be an odd prime, got {p}")
    if p % 4 != 1:
        raise ValidationError(f"p must be a prime ≡ 1 (mod 4), got {p}")
    if alpha < 1:
        raise ValidationError(f"alpha must be a positive integer, got {alpha}")

    q = p**alpha
    n = 2 * q if doubled else q
    phi = p ** (alpha - 1) * (p - 1)
    if generator is None:
        g = smallest_generator(n, phi)
    else:
        g = generator % n
        if gcd(g, n) != 1 or multiplicative_order(g, n, phi) != phi:
            raise ValidationError(f"{generator} does not generate Z_{n}^*")

    dlog = np.full(n, NONUNIT, dtype=np.int64)
    powers = np.empty(phi, dtype=np.int64)
    x = 1
    for k in range(phi):
        powers[k] = x
        dlog[x] = k
        x = x * g % n
    dlog.flags.writeable = False
    powers.flags.writeable = False
    return UnitGroup(n=n, p=p, alpha=alpha, doubled=doubled, g=g, phi=phi,
                     dlog=dlog, powers=powers)


def dlog(G: UnitGroup, x: int) -> int:
    """Discrete log of ``x`` base ``G.g``, or :data:`NONUNIT`."""
    return G.log(x)
