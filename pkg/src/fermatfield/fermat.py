"""Exhaustive study of x^n + y^n = z^n over finite fields.

A solution is *nontrivial* when x, y and z are all nonzero; with zeros
allowed, (x, 0, x) solves every exponent. Counting works on the multiset of
nonzero n-th powers: the count is the sum over pairs of power values (u, v)
of mult(u) * mult(v) * mult(u + v).

:func:`claim_eval` compares the solution-free exponents of one field with
the predicted set {q - 1, (q - 1) / 2} and reports every exponent outside
it as a counterexample.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field as dc_field
from math import gcd

from .errors import FieldTooLarge, IncompleteSurvey, NoCoreExponent
from .galois import GaloisField, gf_make
from .modarith import factorize, primes_up_to

FERMAT_MAX_Q = 512


@dataclass(frozen=True)
class SurveyRecord:
    p: int
    ext_deg: int
    q: int
    n: int
    gcd_class: int
    nontrivial_count: int
    flt_holds: bool

    def as_row(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ClaimVerdict:
    p: int
    ext_deg: int
    q: int
    predicted_set: list[int]
    closure: list[int]
    observed_free_set: list[int]
    holds_only_if: bool
    literal_holds_only_if: bool
    if_direction_holds: bool
    counterexamples: list[int]
    notes: list[str] = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def _check_size(F: GaloisField) -> None:
    if F.q > FERMAT_MAX_Q:
        raise FieldTooLarge(f"q = {F.q} exceeds the exhaustive Fermat bound {FERMAT_MAX_Q}")


def _power_multiset(F: GaloisField, n: int) -> Counter:
    if F.n == 1:
        p = F.p
        return Counter(pow(x, n, p) for x in range(1, p))
    return Counter(F._pow(a.coeffs, n) for a in F.nonzero_elements())


def count_solutions(F: GaloisField, n: int) -> SurveyRecord:
    if n < 1:
        raise ValueError("exponent must be >= 1")
    _check_size(F)
    powers = _power_multiset(F, n)
    total = 0
    if F.n == 1:
        p = F.p
        for u, mu in powers.items():
            for v, mv in powers.items():
                mw = powers.get((u + v) % p)
                if mw:
                    total += mu * mv * mw
    else:
        add = F._add
        for u, mu in powers.items():
            for v, mv in powers.items():
                mw = powers.get(add(u, v))
                if mw:
                    total += mu * mv * mw
    return SurveyRecord(
        p=F.p,
        ext_deg=F.n,
        q=F.q,
        n=n,
        gcd_class=gcd(n, F.q - 1),
        nontrivial_count=total,
        flt_holds=total == 0,
    )


def count_solutions_naive(F: GaloisField, n: int) -> int:
    """Triple loop over nonzero (x, y, z); the reference the fast count is checked against."""
    _check_size(F)
    nonzero = list(F.nonzero_elements())
    pw = [a**n for a in nonzero]
    count = 0
    for px in pw:
        for py in pw:
            s = px + py
            for pz in pw:
                if s == pz:
                    count += 1
    return count


def flt_holds(F: GaloisField, n: int) -> bool:
    return count_solutions(F, n).nontrivial_count == 0


def exponent_range(q: int, n_max: int | None = None) -> range:
    return range(1, (q - 1 if n_max is None else n_max) + 1)


def survey_cells(p_max: int, ext_deg: int = 1, n_max: int | None = None) -> list[tuple[int, int, int]]:
    """The ``(p, ext_deg, n)`` cells a survey covers, in report order."""
    cells = []
    for p in primes_up_to(p_max):
        q = p**ext_deg
        if q > FERMAT_MAX_Q:
            raise FieldTooLarge(f"GF({p}^{ext_deg}) has q = {q} > {FERMAT_MAX_Q}")
        cells.extend((p, ext_deg, n) for n in exponent_range(q, n_max))
    return cells


def survey_cell(cell: tuple[int, int, int]) -> SurveyRecord:
    p, k, n = cell
    return count_solutions(gf_make(p, k), n)


def survey(p_max: int, ext_deg: int = 1, n_max: int | None = None) -> list[SurveyRecord]:
    records = [survey_cell(c) for c in survey_cells(p_max, ext_deg, n_max)]
    return sorted(records, key=lambda r: (r.p, r.ext_deg, r.n))


def claim_eval(records: list[SurveyRecord]) -> ClaimVerdict:
    """Evaluate "solution-free only if n = q - 1 or n = (q - 1) / 2" for one field."""
    if not records:
        raise IncompleteSurvey("no records")
    fields = {(r.p, r.ext_deg, r.q) for r in records}
    if len(fields) != 1:
        raise IncompleteSurvey(f"records span several fields: {sorted(fields)}")
    (p, k, q), = fields
    seen = {r.n for r in records}
    missing = [n for n in range(1, q) if n not in seen]
    if missing:
        raise IncompleteSurvey(f"exponents {missing} missing for q = {q}")

    predicted = sorted({q - 1} | ({(q - 1) // 2} if (q - 1) % 2 == 0 and q > 2 else set()))
    classes = {gcd(m, q - 1) for m in predicted}
    exponents = sorted(seen)
    closure = [m for m in exponents if gcd(m, q - 1) in classes]
    free = sorted(r.n for r in records if r.flt_holds)
    counter = [m for m in free if m not in closure]
    not_free = [m for m in predicted if m not in free]
    notes = [f"predicted exponent {m} has nontrivial solutions" for m in not_free]
    return ClaimVerdict(
        p=p,
        ext_deg=k,
        q=q,
        predicted_set=predicted,
        closure=closure,
        observed_free_set=free,
        holds_only_if=not counter,
        literal_holds_only_if=set(free) <= set(predicted),
        if_direction_holds=not not_free,
        counterexamples=counter,
        notes=notes,
    )


def claim_eval_all(records: list[SurveyRecord]) -> list[ClaimVerdict]:
    groups: dict[tuple[int, int], list[SurveyRecord]] = {}
    for r in records:
        groups.setdefault((r.p, r.ext_deg), []).append(r)
    return [claim_eval(groups[key]) for key in sorted(groups)]


def core_exponent(n: int) -> int:
    """Smallest divisor of ``n`` that is 4 or an odd prime.

    A solution for exponent ``n`` gives one for every divisor of ``n``, so
    ruling out the core exponent rules out ``n``.
    """
    if n < 3:
        raise NoCoreExponent(f"n = {n} < 3 has no core exponent")
    odd = [r for r in factorize(n) if r != 2]
    candidates = odd + ([4] if n % 4 == 0 else [])
    return min(candidates)
