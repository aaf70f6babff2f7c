"""Dense univariate polynomials over F_p.

A :class:`DensePoly` stores little-endian integer coefficients in ``[0, p)``
with no trailing zeros, so ``coeffs[i]`` multiplies ``x**i`` and the zero
polynomial is the empty tuple. Equality and hashing are structural.

Text format (used by the CLI, reports and the modulus cache) is
``"c0 + c1*x + c2*x^2"`` with zero terms omitted, unit coefficients written
bare (``x^2``), and ``"0"`` for the zero polynomial.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

from .errors import BothZero, ConstantPolynomial, DivisionByZeroPoly, ModulusMismatch
from .modarith import inv_mod, prime_modulus


@dataclass(frozen=True, slots=True)
class DensePoly:
    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        cs = [c % self.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction helpers
    @classmethod
    def zero(cls, p: int) -> DensePoly:
        return cls((), p)

    @classmethod
    def const(cls, c: int, p: int) -> DensePoly:
        return cls((c,), p)

    @classmethod
    def monomial(cls, k: int, p: int, c: int = 1) -> DensePoly:
        return cls((0,) * k + (c,), p)

    @classmethod
    def x(cls, p: int) -> DensePoly:
        return cls.monomial(1, p)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> DensePoly:
        if not self.coeffs:
            return self
        inv = inv_mod(self.lead, self.p)
        return DensePoly(tuple(c * inv for c in self.coeffs), self.p)

    def derivative(self) -> DensePoly:
        return DensePoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:], self.p)

    def __call__(self, at: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * at + c) % self.p
        return acc

    # arithmetic
    def _check(self, other: DensePoly) -> None:
        if other.p != self.p:
            raise ModulusMismatch(f"polynomials over F_{self.p} and F_{other.p}")

    def _lift(self, other) -> DensePoly:
        if isinstance(other, int):
            return DensePoly.const(other, self.p)
        if isinstance(other, DensePoly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DensePoly(tuple(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)), self.p)

    __radd__ = __add__

    def __neg__(self):
        return DensePoly(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return DensePoly(tuple(out), self.p)

    __rmul__ = __mul__

    def __divmod__(self, other: DensePoly):
        return poly_divmod(self, other)

    def __floordiv__(self, other: DensePoly):
        return poly_divmod(self, other)[0]

    def __mod__(self, other: DensePoly):
        return poly_divmod(self, other)[1]

    def __pow__(self, e: int):
        result = DensePoly.const(1, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, mod: DensePoly) -> DensePoly:
        """``self**e mod mod`` by square-and-multiply; ``e`` may be huge."""
        result = DensePoly.const(1, self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"DensePoly({format_poly(self)!r}, p={self.p})"


def poly_divmod(num: DensePoly, den: DensePoly) -> tuple[DensePoly, DensePoly]:
    num._check(den)
    if den.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    p = num.p
    rem = list(num.coeffs)
    dd = den.degree
    if len(rem) <= dd:
        return DensePoly.zero(p), num
    inv = inv_mod(den.lead, p)
    quot = [0] * (len(rem) - dd)
    dc = den.coeffs
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] * inv % p
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                rem[k - dd + j] = (rem[k - dd + j] - c * dc[j]) % p
    return DensePoly(tuple(quot), p), DensePoly(tuple(rem[:dd]), p)


def poly_gcd(a: DensePoly, b: DensePoly) -> DensePoly:
    """Monic gcd; ``gcd(a, 0) == monic(a)``."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: DensePoly, b: DensePoly) -> tuple[DensePoly, DensePoly, DensePoly]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    p = a.p
    r0, r1 = a, b
    s0, s1 = DensePoly.const(1, p), DensePoly.zero(p)
    t0, t1 = DensePoly.zero(p), DensePoly.const(1, p)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = inv_mod(r0.lead, p)
    return r0 * inv, s0 * inv, t0 * inv


def is_irreducible(f: DensePoly) -> bool:
    """Irreducibility over F_p.

    ``f`` of degree ``d`` is irreducible iff it shares no factor with
    ``x^(p^k) - x`` for ``k = 1 .. d // 2``.
    """
    if f.degree < 1:
        raise ConstantPolynomial(f"{f} has degree < 1")
    f = f.monic()
    x = DensePoly.x(f.p)
    h = x % f
    for _ in range(f.degree // 2):
        h = h.powmod(f.p, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


def monic_polys(p: int, n: int):
    """All monic degree-``n`` polynomials, lexicographic in ``(c0, ..., c_{n-1})``."""
    for low in itertools.product(range(p), repeat=n):
        yield DensePoly(low + (1,), p)


@functools.lru_cache(maxsize=None)
def find_irreducible(p: int, n: int) -> DensePoly:
    """Lexicographically smallest monic irreducible of degree ``n`` over F_p."""
    prime_modulus(p)
    if n < 1:
        raise ValueError("degree must be >= 1")
    for f in monic_polys(p, n):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")  # unreachable


def format_poly(f: DensePoly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:(-?\d+)\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> DensePoly:
    """Inverse of :func:`format_poly`; also accepts ``-`` and spaceless input."""
    s = text.replace(" ", "").replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in filter(None, s.split("+")):
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        m = _TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        k = 0 if m.group(2) is None else int(m.group(3) or 1)
        coeffs[k] = coeffs.get(k, 0) + (-c if neg else c)
    if not coeffs:
        return DensePoly.zero(p)
    return DensePoly(tuple(coeffs.get(i, 0) for i in range(max(coeffs) + 1)), p)
