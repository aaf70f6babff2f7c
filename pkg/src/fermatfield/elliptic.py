"""Elliptic curves y^2 = x^3 + b x^2 + c x + d.

Two flavours share the monic-cubic model:

* :class:`Curve` lives over a :class:`~fermatfield.galois.GaloisField` and
  carries the group law, point counting, group structure and torsion.
* :class:`IntegerCurve` has integer coefficients and is used for reduction
  studies (discriminant, reduction type mod p, a_p, semistability).

A general ``A x^3 + B x^2 + C x + D`` is brought to monic form by
``X = A x, Y = A y``, which needs ``A`` invertible. All group operations
require characteristic at least 5, and reduction types are only assigned
at primes p >= 5; discriminants are those of the given model, not a
minimal one.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from math import gcd

from .errors import (
    BadReduction,
    CharacteristicDividesM,
    ExtensionBoundExceeded,
    FieldMismatch,
    FieldTooLarge,
    NonInvertibleLeadingCoefficient,
    PointNotOnCurve,
    SingularCurve,
    SmallCharacteristic,
    SmallPrime,
    ZeroParameter,
)
from .galois import EXHAUSTIVE_MAX_Q, GaloisField, GFElement, gf_make
from .modarith import factorize, legendre, prime_modulus, primes_up_to
from .polyring import DensePoly, poly_gcd

GROUP_MAX_ORDER = 10**4
DEFAULT_MAX_EXT = 12


def cubic_discriminant(b, c, d):
    """Discriminant of x^3 + b x^2 + c x + d; works for ints and field elements."""
    return 18 * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * c**3 - 27 * d**2


@dataclass(frozen=True)
class Point:
    """Affine point, or the point at infinity when ``x is None``."""

    x: GFElement | None = None
    y: GFElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point()


@dataclass(frozen=True)
class Curve:
    field: GaloisField
    b: GFElement
    c: GFElement
    d: GFElement

    def __str__(self):
        return f"y^2 = x^3 + ({self.b})x^2 + ({self.c})x + ({self.d}) over GF({self.field.p}^{self.field.n})"

    def rhs(self, x: GFElement) -> GFElement:
        return ((x + self.b) * x + self.c) * x + self.d

    @property
    def discriminant(self) -> GFElement:
        return cubic_discriminant(self.b, self.c, self.d)

    def is_nonsingular(self) -> bool:
        return bool(self.discriminant)

    def cubic(self) -> DensePoly:
        """The right-hand side as a polynomial; prime fields only."""
        if self.field.n != 1:
            raise FieldMismatch("cubic() needs a curve over a prime field")
        return DensePoly((self.d.coeffs[0], self.c.coeffs[0], self.b.coeffs[0], 1), self.field.p)

    def point(self, x, y) -> Point:
        P = Point(self.field(x), self.field(y))
        if not self.contains(P):
            raise PointNotOnCurve(f"{P} is not on {self}")
        return P

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        if P.x.field != self.field or P.y.field != self.field:
            return False
        return P.y * P.y == self.rhs(P.x)

    def _guard(self) -> None:
        if self.field.p < 5:
            raise SmallCharacteristic(f"characteristic {self.field.p} < 5 is not supported")

    def neg(self, P: Point) -> Point:
        return P if P.is_infinity else Point(P.x, -P.y)

    def add(self, P: Point, Q: Point) -> Point:
        self._guard()
        for R in (P, Q):
            if not self.contains(R):
                raise PointNotOnCurve(f"{R} is not on {self}")
        return self._add(P, Q)

    def _add(self, P: Point, Q: Point) -> Point:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y != Q.y or not P.y:
                return INFINITY
            lam = (3 * P.x * P.x + 2 * self.b * P.x + self.c) / (2 * P.y)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        x3 = lam * lam - self.b - P.x - Q.x
        y3 = lam * (P.x - x3) - P.y
        return Point(x3, y3)

    def mul(self, k: int, P: Point) -> Point:
        self._guard()
        if not self.contains(P):
            raise PointNotOnCurve(f"{P} is not on {self}")
        return self._mul(k, P)

    def _mul(self, k: int, P: Point) -> Point:
        if k < 0:
            return self.neg(self._mul(-k, P))
        result, addend = INFINITY, P
        while k:
            if k & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            k >>= 1
        return result

    def points(self) -> list[Point]:
        """Every point, Infinity first, then affine points by x index and y index."""
        self._guard()
        F = self.field
        if F.q > EXHAUSTIVE_MAX_Q:
            raise FieldTooLarge(f"q = {F.q} too large to enumerate")
        roots: dict[GFElement, list[GFElement]] = {}
        for y in F.elements():
            roots.setdefault(y * y, []).append(y)
        pts = [INFINITY]
        for x in F.elements():
            pts.extend(Point(x, y) for y in roots.get(self.rhs(x), ()))
        return pts

    def order_of(self, P: Point, group_order: int | None = None) -> int:
        N = count_points(self) if group_order is None else group_order
        t = N
        for r in factorize(N) if N > 1 else {}:
            while t % r == 0 and self._mul(t // r, P).is_infinity:
                t //= r
        return t


@dataclass(frozen=True)
class IntegerCurve:
    b: int
    c: int
    d: int

    def __str__(self):
        return f"y^2 = x^3 + {self.b}x^2 + {self.c}x + {self.d}"

    @property
    def discriminant(self) -> int:
        return cubic_discriminant(self.b, self.c, self.d)

    def cubic(self, p: int) -> DensePoly:
        return DensePoly((self.d, self.c, self.b, 1), p)

    def reduce(self, p: int, k: int = 1) -> Curve:
        """The curve over GF(p^k); may be singular."""
        F = gf_make(p, k)
        return Curve(F, F(self.b), F(self.c), F(self.d))

    def as_row(self) -> dict:
        return {"b": self.b, "c": self.c, "d": self.d, "discriminant": self.discriminant}


def curve_make(A, B, C, D, field: GaloisField | int | None = None, nonsingular: bool = True):
    """Monic model of y^2 = A x^3 + B x^2 + C x + D.

    With ``field=None`` the result is an :class:`IntegerCurve` (``A`` must
    be +-1); otherwise a :class:`Curve` over ``field`` (an int means F_p).
    """
    if field is None:
        if A not in (1, -1):
            raise NonInvertibleLeadingCoefficient(f"A = {A} is not a unit in Z")
        return IntegerCurve(B, C * A, D * A * A)
    if isinstance(field, int):
        field = gf_make(field)
    A, B, C, D = (field(v) for v in (A, B, C, D))
    if not A:
        raise NonInvertibleLeadingCoefficient(f"A = 0 in {field!r}")
    E = Curve(field, B, C * A, D * A * A)
    if nonsingular and not E.is_nonsingular():
        raise SingularCurve(f"{E} has zero discriminant")
    return E


def discriminant(E: Curve | IntegerCurve):
    return E.discriminant


def group_law(P: Point, Q: Point, E: Curve) -> Point:
    return E.add(P, Q)


def scalar_mul(k: int, P: Point, E: Curve) -> Point:
    return E.mul(k, P)


def _count_prime_field(b: int, c: int, d: int, p: int) -> int:
    total = 1
    for x in range(p):
        total += 1 + legendre(((x + b) * x + c) * x + d, p)
    return total


def count_points(E: Curve) -> int:
    """#E including Infinity, via the quadratic character of the field."""
    E._guard()
    F = E.field
    if F.q > EXHAUSTIVE_MAX_Q:
        raise FieldTooLarge(f"q = {F.q} exceeds {EXHAUSTIVE_MAX_Q}")
    if F.n == 1:
        return _count_prime_field(E.b.coeffs[0], E.c.coeffs[0], E.d.coeffs[0], F.p)
    half = (F.q - 1) // 2
    total = 1
    for x in F.elements():
        v = E.rhs(x)
        if not v:
            total += 1
        elif F._pow(v.coeffs, half) == F._one:
            total += 2
    return total


def count_points_naive(E: Curve) -> int:
    """Count solutions (x, y) by scanning all q^2 pairs, plus Infinity."""
    F = E.field
    elems = list(F.elements())
    return 1 + sum(1 for x in elems for y in elems if y * y == E.rhs(x))


def trace_ap(E: IntegerCurve, p: int) -> int:
    prime_modulus(p)
    if E.discriminant % p == 0:
        raise BadReduction(f"{p} divides the discriminant {E.discriminant}")
    if p < 5:
        raise SmallCharacteristic(f"characteristic {p} < 5 is not supported")
    return p + 1 - _count_prime_field(E.b, E.c, E.d, p)


def group_structure(E: Curve) -> tuple[int, int]:
    """Invariant factors ``(d1, d2)`` with ``d1 | d2`` and ``d1 * d2 = #E``."""
    N = count_points(E)
    if N > GROUP_MAX_ORDER:
        raise FieldTooLarge(f"#E = {N} exceeds brute-force limit {GROUP_MAX_ORDER}")
    exponent = 1
    for P in E.points():
        o = E.order_of(P, N)
        exponent = exponent * o // gcd(exponent, o)
        if exponent == N:
            break
    return N // exponent, exponent


def division_polynomial(E: Curve, m: int) -> DensePoly:
    """Polynomial g_m in x with psi_m = g_m (m odd) or psi_m = psi_2 g_m (m even)."""
    f = E.cubic()
    p = f.p
    b, c, d = f.coeffs[2], f.coeffs[1], f.coeffs[0]
    b2, b4, b6 = 4 * b, 2 * c, 4 * d
    b8 = 4 * b * d - c * c
    P = lambda *cs: DensePoly(cs, p)  # noqa: E731
    F2 = f * f * 16  # psi_2^4
    g = {
        0: DensePoly.zero(p),
        1: P(1),
        2: P(1),
        3: P(b8, 3 * b6, 3 * b4, b2, 3),
        4: P(b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2),
    }

    def get(k: int) -> DensePoly:
        if k in g:
            return g[k]
        h = k // 2
        if k % 2:
            if h % 2 == 0:
                val = F2 * get(h + 2) * get(h) ** 3 - get(h - 1) * get(h + 1) ** 3
            else:
                val = get(h + 2) * get(h) ** 3 - F2 * get(h - 1) * get(h + 1) ** 3
        else:
            val = get(h) * (get(h + 2) * get(h - 1) ** 2 - get(h - 2) * get(h + 1) ** 2)
        g[k] = val
        return val

    return get(m)


def torsion_x_polynomial(E: Curve, m: int) -> DensePoly:
    """Polynomial whose roots are the x-coordinates of affine points of E[m]."""
    g = division_polynomial(E, m)
    return g if m % 2 else g * E.cubic()


def _check_division_args(E: Curve, m: int) -> None:
    E._guard()
    if m < 1:
        raise ValueError("m must be >= 1")
    if m % E.field.p == 0:
        raise CharacteristicDividesM(f"p = {E.field.p} divides m = {m}")


def division_points(E: Curve, m: int, k: int = 1) -> int:
    """``|E[m](GF(p^k))|`` for a curve over F_p.

    The affine m-torsion x-coordinates in GF(p^k) are the roots of
    ``R = gcd(h, x^(p^k) - x)`` where h is the torsion x-polynomial. Roots
    of R shared with the cubic give one point; each other root gives two
    points iff the cubic's value there is a square, decided all at once by
    ``gcd(f^((p^k - 1) / 2) - 1, R)``.
    """
    _check_division_args(E, m)
    if E.field.n != 1:
        raise FieldMismatch("division_points needs a curve over a prime field")
    if m == 1:
        return 1
    p = E.field.p
    Q = p**k
    f = E.cubic()
    h = torsion_x_polynomial(E, m)
    x = DensePoly.x(p)
    R = poly_gcd(h, x.powmod(Q, h) - x)
    R0 = poly_gcd(R, f)
    H = R // R0
    squares = 0
    if H.degree > 0:
        t = f.powmod((Q - 1) // 2, H)
        squares = poly_gcd(t - 1, H).degree if t != DensePoly.zero(p) else 0
    return 1 + R0.degree + 2 * squares


def division_points_bruteforce(E: Curve, m: int, k: int = 1) -> int:
    """Scan E(GF(p^k)) and count points with m P = O."""
    _check_division_args(E, m)
    L = gf_make(E.field.p, k * E.field.n)
    lift = lambda a: L(a.coeffs[0]) if E.field.n == 1 else L(a.as_poly())  # noqa: E731
    if E.field.n != 1 and k != 1:
        raise FieldMismatch("brute-force lifting supports prime-field curves only")
    EL = Curve(L, lift(E.b), lift(E.c), lift(E.d))
    return sum(1 for P in EL.points() if EL._mul(m, P).is_infinity)


def division_tower(E: Curve, m: int, max_ext: int = DEFAULT_MAX_EXT) -> list[int]:
    """``|E[m](GF(p^k))|`` for k = 1, 2, ... until it reaches m^2."""
    counts = []
    for k in range(1, max_ext + 1):
        counts.append(division_points(E, m, k))
        if counts[-1] == m * m:
            return counts
    raise ExtensionBoundExceeded(f"E[{m}] not complete within degree {max_ext}: {counts}")


class ReductionType(str, enum.Enum):
    GOOD = "Good"
    MULTIPLICATIVE = "Multiplicative"
    ADDITIVE = "Additive"


@dataclass(frozen=True)
class ReductionReport:
    p: int
    type: ReductionType
    conductor_exponent: int
    point_count: int | None = None
    a_p: int | None = None

    def as_row(self) -> dict:
        row = asdict(self)
        row["type"] = self.type.value
        return row


def reduction_type(E: IntegerCurve, p: int) -> ReductionReport:
    prime_modulus(p)
    if p < 5:
        raise SmallPrime(f"reduction type at p = {p} needs Tate's algorithm")
    if E.discriminant % p:
        N = _count_prime_field(E.b, E.c, E.d, p)
        return ReductionReport(p, ReductionType.GOOD, 0, N, p + 1 - N)
    f = E.cubic(p)
    repeated = poly_gcd(f, f.derivative()).degree
    if repeated == 1:
        return ReductionReport(p, ReductionType.MULTIPLICATIVE, 1)
    return ReductionReport(p, ReductionType.ADDITIVE, 2)


@dataclass(frozen=True)
class SemistabilityReport:
    bound: int
    bad: list[ReductionReport]
    semistable: bool
    conductor_part: int

    def as_dict(self) -> dict:
        return {
            "bound": self.bound,
            "bad": [r.as_row() for r in self.bad],
            "semistable": self.semistable,
            "conductor_part": self.conductor_part,
        }


def bad_primes(E: IntegerCurve, bound: int) -> list[int]:
    disc = E.discriminant
    return [p for p in primes_up_to(bound, 5) if disc % p == 0]


def semistability(E: IntegerCurve, bound: int) -> SemistabilityReport:
    """Bad primes 5 <= p <= bound, their types, and the conductor over that range."""
    bad = [reduction_type(E, p) for p in bad_primes(E, bound)]
    conductor = 1
    for r in bad:
        conductor *= r.p**r.conductor_exponent
    semistable = all(r.type is ReductionType.MULTIPLICATIVE for r in bad)
    return SemistabilityReport(bound, bad, semistable, conductor)


def ap_series(E: IntegerCurve, p_max: int) -> list[tuple[int, int]]:
    """``(p, a_p)`` for good primes 5 <= p <= p_max, ascending."""
    disc = E.discriminant
    return [(p, trace_ap(E, p)) for p in primes_up_to(p_max, 5) if disc % p]


def curve_from_roots(r1: int, r2: int, r3: int) -> IntegerCurve:
    """y^2 = (x - r1)(x - r2)(x - r3)."""
    return IntegerCurve(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3)


def frey_curve(a: int, b: int, n: int) -> IntegerCurve:
    """y^2 = x (x - a^n) (x + b^n)."""
    if a == 0 or b == 0:
        raise ZeroParameter("Frey curve parameters must be nonzero")
    return curve_from_roots(0, a**n, -(b**n))

