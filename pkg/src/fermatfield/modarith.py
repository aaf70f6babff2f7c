"""Arithmetic in the prime field F_p and the small amount of number theory
the rest of the package leans on (primality, factoring, quadratic residues).

Moduli are plain ``int``s checked by :func:`prime_modulus`; residues are
:class:`FpResidue` values that are always stored fully reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import EvenModulus, NotPrime, ZeroInverse

MAX_MODULUS = 2**31


def is_prime(m: int) -> bool:
    """Deterministic trial division; intended for desk-scale ``m``."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0 or m % 3 == 0:
        return False
    f = 5
    limit = isqrt(m)
    while f <= limit:
        if m % f == 0 or m % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_modulus(p: int) -> int:
    """Validate ``p`` as a field characteristic and return it."""
    if not isinstance(p, int) or not 2 <= p < MAX_MODULUS or not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime in [2, 2^31)")
    return p


def primes_up_to(bound: int, start: int = 2) -> list[int]:
    return [m for m in range(max(start, 2), bound + 1) if is_prime(m)]


def factorize(m: int) -> dict[int, int]:
    """Prime factorisation of ``m >= 1`` by trial division."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisors(m: int) -> list[int]:
    divs = [1]
    for prime, e in factorize(m).items():
        divs = [d * prime**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def legendre(a: int, p: int) -> int:
    """Euler's criterion, mapped to {-1, 0, 1}."""
    if p == 2:
        raise EvenModulus("the Legendre symbol needs an odd prime")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


@dataclass(frozen=True, slots=True)
class FpResidue:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpResidue):
            if other.p != self.p:
                raise ValueError(f"residues mod {self.p} and {other.p} do not mix")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpResidue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpResidue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpResidue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpResidue(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * fp_inv(FpResidue(o, self.p))

    def __neg__(self):
        return FpResidue(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return fp_pow(fp_inv(self), -e)
        return fp_pow(self, e)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def fp_inv(a: FpResidue) -> FpResidue:
    return FpResidue(inv_mod(a.value, a.p), a.p)


def fp_pow(a: FpResidue, e: int) -> FpResidue:
    """``a**e`` for ``e >= 0``; ``0**0 == 1`` by convention."""
    if e < 0:
        raise ValueError("negative exponent; invert first")
    result, base = 1, a.value
    while e:
        if e & 1:
            result = result * base % a.p
        base = base * base % a.p
        e >>= 1
    return FpResidue(result, a.p)


def legendre_symbol(a: FpResidue) -> int:
    return legendre(a.value, a.p)
