"""GF(p^n) as F_p[x]/(f) for a monic irreducible f of degree n.

Elements are length-``n`` coefficient tuples wrapped in :class:`GFElement`;
the prime field sits inside as the constant vectors. Elements of a field
are enumerated in lexicographic order of ``(c0, c1, ..., c_{n-1})`` and
that order also defines the integer *index* used by the dense tables.

The checks for the theorems about finite fields live here too: the
splitting-field test, element orders and primitive elements, the Frobenius
fixed-point subfield test, translation maps, and the exhaustive field-axiom
and Latin-square checks on operation tables.
"""

from __future__ import annotations

import functools
import itertools
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DegreeMismatch,
    FieldMismatch,
    FieldTooLarge,
    NotMonic,
    ReduciblePolynomial,
    ZeroElement,
    ZeroInverse,
    ZeroSource,
)
from .modarith import factorize, prime_modulus
from .polyring import DensePoly, find_irreducible, format_poly, is_irreducible, parse_poly, poly_xgcd

CACHE_ENV = "FERMATFIELD_MODULUS_CACHE"
EXHAUSTIVE_MAX_Q = 10**6
TABLE_MAX_Q = 729


@dataclass(frozen=True)
class GaloisField:
    p: int
    n: int
    modulus: DensePoly

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def is_prime_field(self) -> bool:
        return self.n == 1

    def __repr__(self):
        return f"GF({self.p}^{self.n}) mod {format_poly(self.modulus)}"

    # raw coefficient-tuple arithmetic; GFElement delegates here
    def _add(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: tuple) -> tuple:
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        p, n = self.p, self.n
        if n == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        m = self.modulus.coeffs
        # x^n = -(m_0 + ... + m_{n-1} x^{n-1}), modulus is monic
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(n):
                    prod[k - n + j] -= c * m[j]
        return tuple(c % p for c in prod[:n])

    def _pow(self, a: tuple, e: int) -> tuple:
        result = self._one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _inv(self, a: tuple) -> tuple:
        if not any(a):
            raise ZeroInverse("0 has no multiplicative inverse")
        if self.n == 1:
            return (pow(a[0], -1, self.p),)
        g, s, _ = poly_xgcd(DensePoly(a, self.p), self.modulus)
        assert g.degree == 0
        return self._pad(s.coeffs)

    def _pad(self, coeffs) -> tuple:
        cs = tuple(c % self.p for c in coeffs)
        if len(cs) > self.n:
            cs = (DensePoly(cs, self.p) % self.modulus).coeffs
        return cs + (0,) * (self.n - len(cs))

    @functools.cached_property
    def _one(self) -> tuple:
        return (1,) + (0,) * (self.n - 1)

    # element construction
    def __call__(self, value) -> GFElement:
        """Build an element from an int (prime-field constant), a coefficient
        sequence, a :class:`DensePoly`, or an element of this field."""
        if isinstance(value, GFElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return GFElement(self._pad((value,)), self)
        if isinstance(value, DensePoly):
            return GFElement(self._pad(value.coeffs), self)
        return GFElement(self._pad(tuple(value)), self)

    @property
    def zero(self) -> GFElement:
        return self(0)

    @property
    def one(self) -> GFElement:
        return self(1)

    @property
    def gen(self) -> GFElement:
        """The class of ``x``."""
        return self((0, 1))

    def elements(self):
        for cs in itertools.product(range(self.p), repeat=self.n):
            yield GFElement(cs, self)

    def nonzero_elements(self):
        it = self.elements()
        next(it)
        return it

    def index(self, a: GFElement) -> int:
        idx = 0
        for c in a.coeffs:
            idx = idx * self.p + c
        return idx

    def from_index(self, idx: int) -> GFElement:
        cs = []
        for _ in range(self.n):
            idx, c = divmod(idx, self.p)
            cs.append(c)
        return GFElement(tuple(reversed(cs)), self)


@dataclass(frozen=True)
class GFElement:
    coeffs: tuple[int, ...]
    field: GaloisField

    def _other(self, other) -> tuple | None:
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other.coeffs
        if isinstance(other, int):
            return self.field._pad((other,))
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFElement(self.field._add(self.coeffs, o), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFElement(self.field._sub(self.coeffs, o), self.field)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFElement(self.field._sub(o, self.coeffs), self.field)

    def __neg__(self):
        return GFElement(self.field._neg(self.coeffs), self.field)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFElement(self.field._mul(self.coeffs, o), self.field)

    __rmul__ = __mul__

    def inverse(self) -> GFElement:
        return GFElement(self.field._inv(self.coeffs), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field._mul(self.coeffs, self.field._inv(o)), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GFElement(self.field._mul(o, self.field._inv(self.coeffs)), self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return GFElement(self.field._pow(self.coeffs, e), self.field)

    def __bool__(self):
        return any(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def as_poly(self) -> DensePoly:
        return DensePoly(self.coeffs, self.field.p)

    def __str__(self):
        return format_poly(self.as_poly())

    def __repr__(self):
        return f"<{self} in GF({self.field.p}^{self.field.n})>"


@functools.lru_cache(maxsize=256)
def _field(p: int, n: int, modulus: DensePoly) -> GaloisField:
    return GaloisField(p, n, modulus)


class ModulusCache:
    """Persistent ``"p:n" -> polynomial text`` map backed by a JSON file.

    Writes go to a temporary file that is renamed over the target, so
    concurrent writers never leave a torn file; entries are deterministic,
    so last-writer-wins is harmless.
    """

    def __init__(self, path):
        self.path = Path(path)

    @classmethod
    def from_env(cls) -> ModulusCache | None:
        path = os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def load(self) -> dict[str, str]:
        try:
            with open(self.path) as fh:
                data = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return {}
        return data if isinstance(data, dict) else {}

    def get(self, p: int, n: int) -> DensePoly | None:
        text = self.load().get(f"{p}:{n}")
        if text is None:
            return None
        try:
            f = parse_poly(text, p)
        except ValueError:
            return None
        # a stale or hand-edited entry is ignored rather than trusted
        if f.degree != n or not f.is_monic() or not is_irreducible(f):
            return None
        return f

    def put(self, p: int, n: int, f: DensePoly) -> None:
        data = self.load()
        data[f"{p}:{n}"] = format_poly(f)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".modcache-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True, indent=0)
        os.replace(tmp, self.path)


def gf_make(p: int, n: int = 1, modulus: DensePoly | str | None = None, cache: ModulusCache | None = None) -> GaloisField:
    """Construct GF(p^n), by default modulo ``find_irreducible(p, n)``."""
    prime_modulus(p)
    if n < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {n}")
    if modulus is not None:
        if isinstance(modulus, str):
            modulus = parse_poly(modulus, p)
        if modulus.p != p:
            raise FieldMismatch(f"modulus over F_{modulus.p}, field characteristic {p}")
        if modulus.degree != n:
            raise DegreeMismatch(f"modulus {modulus} has degree {modulus.degree}, expected {n}")
        if not modulus.is_monic():
            raise NotMonic(f"modulus {modulus} is not monic")
        if not is_irreducible(modulus):
            raise ReduciblePolynomial(f"{modulus} is reducible over F_{p}")
        return _field(p, n, modulus)
    if cache is None:
        cache = ModulusCache.from_env()
    if cache is not None:
        f = cache.get(p, n)
        if f is None:
            f = find_irreducible(p, n)
            cache.put(p, n, f)
    else:
        f = find_irreducible(p, n)
    return _field(p, n, f)


def frobenius(a: GFElement, k: int = 1) -> GFElement:
    """``a ** (p**k)``."""
    p = a.field.p
    cs = a.coeffs
    for _ in range(k):
        cs = a.field._pow(cs, p)
    return GFElement(cs, a.field)


def element_order(a: GFElement) -> int:
    if not a:
        raise ZeroElement("0 has no multiplicative order")
    F = a.field
    t = F.q - 1
    for r in factorize(t) if t > 1 else {}:
        while t % r == 0 and F._pow(a.coeffs, t // r) == F._one:
            t //= r
    return t


def primitive_element(F: GaloisField) -> GFElement:
    """Smallest element of order ``q - 1`` in lexicographic coefficient order."""
    for a in F.nonzero_elements():
        if element_order(a) == F.q - 1:
            return a
    raise AssertionError("multiplicative group is not cyclic")  # unreachable


def subfield_membership(a: GFElement, m: int) -> bool:
    """True iff ``a`` is fixed by the ``m``-th Frobenius power."""
    if not 1 <= m <= a.field.n:
        raise DegreeMismatch(f"subfield degree {m} outside 1..{a.field.n}")
    return frobenius(a, m) == a


def fixed_point_count(F: GaloisField, m: int) -> int:
    return sum(1 for a in F.elements() if frobenius(a, m) == a)


def _require_exhaustive(F: GaloisField, limit: int = EXHAUSTIVE_MAX_Q) -> None:
    if F.q > limit:
        raise FieldTooLarge(f"q = {F.q} exceeds exhaustive limit {limit}")


def splitting_check(F: GaloisField) -> bool:
    """Every element is a root of ``x^q - x``."""
    _require_exhaustive(F)
    return all(F._pow(a.coeffs, F.q) == a.coeffs for a in F.elements())


def translation_map(x0: GFElement, y0: GFElement) -> tuple[int, ...]:
    """Permutation of element indices sending ``x0`` to ``y0``.

    The map is ``b -> (y0 / x0) * b``; for ``y0 = 0`` that map is not
    injective, so the additive translation ``b -> b + (y0 - x0)`` is used.
    """
    if not x0:
        raise ZeroSource("the source point must be nonzero")
    F = x0.field
    _require_exhaustive(F)
    if not y0:
        shift = y0 - x0
        return tuple(F.index(b + shift) for b in F.elements())
    s = y0 / x0
    return tuple(F.index(s * b) for b in F.elements())


def modulus_values(F: GaloisField) -> list[int]:
    """``f(c)`` for each ``c`` in F_p, i.e. the no-root table of the modulus."""
    return [F.modulus(c) for c in range(F.p)]


def subfield_degrees(F: GaloisField) -> list[int]:
    """Degrees ``m`` for which the Frobenius fixed field has ``p^m`` elements."""
    return [m for m in range(1, F.n + 1) if fixed_point_count(F, m) == F.p**m]


def addition_table(F: GaloisField) -> np.ndarray:
    _require_exhaustive(F, TABLE_MAX_Q)
    p, n, q = F.p, F.n, F.q
    digits = np.array([a.coeffs for a in F.elements()], dtype=np.int64).reshape(q, n)
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return summed @ weights


def multiplication_table(F: GaloisField) -> np.ndarray:
    _require_exhaustive(F, TABLE_MAX_Q)
    elems = [a.coeffs for a in F.elements()]
    table = np.zeros((F.q, F.q), dtype=np.int64)
    for i, a in enumerate(elems):
        for j in range(i, F.q):
            v = F.index(GFElement(F._mul(a, elems[j]), F))
            table[i, j] = table[j, i] = v
    return table


def is_latin_square(table: np.ndarray) -> bool:
    """Each row and each column of a square table is a permutation of its labels."""
    rows = np.sort(table, axis=1)
    cols = np.sort(table, axis=0)
    labels = np.sort(table[0])
    return len(set(labels.tolist())) == len(labels) and bool(
        (rows == labels[None, :]).all() and (cols == labels[:, None]).all()
    )


def check_field_axioms(F: GaloisField) -> dict[str, bool]:
    """Exhaustively test the field axioms on the operation tables."""
    A, M = addition_table(F), multiplication_table(F)
    q = F.q
    zero, one = F.index(F.zero), F.index(F.one)
    idx = np.arange(q)
    a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    nz = idx[idx != zero]
    return {
        "add_assoc": bool((A[A[a, b], c] == A[a, A[b, c]]).all()),
        "add_comm": bool((A == A.T).all()),
        "add_identity": bool((A[:, zero] == idx).all()),
        "add_inverse": bool((A == zero).any(axis=1).all()),
        "mul_assoc": bool((M[M[a, b], c] == M[a, M[b, c]]).all()),
        "mul_comm": bool((M == M.T).all()),
        "mul_identity": bool((M[:, one] == idx).all()),
        "mul_inverse": bool((M[np.ix_(nz, nz)] == one).any(axis=1).all()),
        "distributive": bool((M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()),
        "zero_ne_one": zero != one,
        "no_zero_divisors": bool((M[np.ix_(nz, nz)] != zero).all()),
        "add_latin": is_latin_square(A),
        "mul_latin": is_latin_square(M[np.ix_(nz, nz)]),
    }
