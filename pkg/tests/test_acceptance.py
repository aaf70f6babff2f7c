"""Acceptance criteria, one marked group per criterion.

Each criterion's runtime budget is asserted inside its tests; the
whole-suite budget for criterion 9 is checked in ``conftest.py``.
"""

import json
import math
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from fermatfield import elliptic as ec
from fermatfield import fermat, galois, metricgeom
from fermatfield.cli import main
from fermatfield.elliptic import ReductionType
from fermatfield.galois import gf_make
from fermatfield.modarith import primes_up_to
from fermatfield.polyring import DensePoly, format_poly


@contextmanager
def budget(seconds):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


C1 = "GF(4), GF(9) moduli and the x^2+1 no-root table"
C2 = "field axioms and Latin squares for every q <= 81"
C3 = "splitting, primitive elements, Frobenius fixed points, (x^m-1)|(x^n-1)"
C4 = "Fermat survey vs naive oracle; provable half; p=13, n=4 counterexample"
C5 = "elliptic desk numbers and the Hasse bound"
C6 = "E[m] reaches m^2 within degree 12"
C7 = "reduction types and Frey curve semistability"
C8 = "taxicab/Euclidean identity checks and the 3-4-5 grid hit"
C9 = "determinism across runs and parallelism degrees"


@pytest.mark.criterion(1, C1)
def test_c1_small_fields():
    with budget(1):
        F4, F9 = gf_make(2, 2), gf_make(3, 2)
        assert format_poly(F4.modulus) == "1 + x + x^2"
        assert format_poly(F9.modulus) == "1 + x^2"
        assert galois.modulus_values(F9) == [1, 2, 2]
        assert F4.q == 4 and F9.q == 9
        w = F4.gen
        assert w * w == w + 1
        i = F9.gen
        assert i * i == F9(-1)


def prime_powers(limit):
    out = []
    for p in primes_up_to(limit):
        q, n = p, 1
        while q <= limit:
            out.append((p, n))
            q, n = q * p, n + 1
    return sorted(out, key=lambda pn: pn[0] ** pn[1])


@pytest.mark.criterion(2, C2)
def test_c2_field_axioms():
    with budget(10):
        fields = prime_powers(81)
        assert len(fields) == 22 + 10  # 22 primes below 81, ten higher prime powers
        for p, n in fields:
            F = gf_make(p, n)
            checks = galois.check_field_axioms(F)
            assert all(checks.values()), (p, n, checks)


@pytest.mark.criterion(3, C3)
def test_c3_theorems():
    with budget(30):
        for p in (2, 3, 5, 7):
            for n in (1, 2, 3):
                F = gf_make(p, n)
                assert F.q <= 343
                assert galois.splitting_check(F)
                g = galois.primitive_element(F)
                assert galois.element_order(g) == F.q - 1
                assert len({g**k for k in range(F.q - 1)}) == F.q - 1
                for m in range(1, 7):
                    assert galois.fixed_point_count(F, m) == p ** math.gcd(m, n)
        for p in (2, 3, 5):
            for m in range(1, 13):
                for n in range(1, 13):
                    xm = DensePoly.monomial(m, p) - DensePoly.const(1, p)
                    xn = DensePoly.monomial(n, p) - DensePoly.const(1, p)
                    assert ((xn % xm).is_zero()) == (n % m == 0)


def naive_fermat(p, n):
    """Independent triple loop over nonzero residues."""
    pw = [pow(x, n, p) for x in range(1, p)]
    zcount = [0] * p
    for v in pw:
        zcount[v] += 1
    count = 0
    for a in pw:
        for b in pw:
            s = a + b
            for c in pw:
                if (s - c) % p == 0:
                    count += 1
    assert sum(zcount[(a + b) % p] for a in pw for b in pw) == count
    return count


@pytest.mark.criterion(4, C4)
def test_c4_survey_matches_oracle():
    with budget(60):
        records = fermat.survey(31)
        got = {(r.p, r.n): r.nontrivial_count for r in records}
        expected = {(p, n): naive_fermat(p, n) for p in primes_up_to(31) for n in range(1, p)}
        assert got == expected


@pytest.mark.criterion(4, C4)
def test_c4_provable_half_and_counterexample():
    with budget(60):
        for p in primes_up_to(97, 5):
            F = gf_make(p)
            assert fermat.flt_holds(F, p - 1)
            assert fermat.flt_holds(F, (p - 1) // 2)
        verdict = fermat.claim_eval([r for r in fermat.survey(13) if r.p == 13])
        assert verdict.p == 13 and 4 in verdict.counterexamples
        assert verdict.if_direction_holds and not verdict.holds_only_if


@pytest.mark.criterion(5, C5)
def test_c5_elliptic_desk_numbers():
    with budget(30):
        E5 = ec.curve_make(1, 0, 0, 1, field=5)
        assert ec.count_points(E5) == 6 == ec.count_points_naive(E5)
        assert ec.trace_ap(ec.IntegerCurve(0, 0, 1), 5) == 0
        assert ec.group_structure(E5) == (1, 6)
        E7 = ec.curve_make(1, 0, 0, 1, field=7)
        assert ec.count_points(E7) == 12 == ec.count_points_naive(E7)
        assert ec.trace_ap(ec.IntegerCurve(0, 0, 1), 7) == -4
        F5 = ec.curve_make(1, 0, -1, 0, field=5)
        assert ec.count_points(F5) == 8 == ec.count_points_naive(F5)
        assert ec.group_structure(F5) == (2, 4)
        rng = random.Random(20)
        curves = []
        while len(curves) < 20:
            E = ec.IntegerCurve(*(rng.randint(-10, 10) for _ in range(3)))
            if E.discriminant:
                curves.append(E)
        for E in curves:
            series = ec.ap_series(E, 200)
            assert all(E.discriminant % p for p, _ in series)
            assert len(series) == sum(1 for p in primes_up_to(200, 5) if E.discriminant % p)
            for p, ap in series:
                assert ap * ap <= 4 * p


@pytest.mark.criterion(6, C6)
@pytest.mark.parametrize("m,p,tower", [(2, 5, [2, 4]), (3, 5, [3, 9]), (2, 7, [4]), (3, 7, [3, 3, 9])])
def test_c6_full_torsion(m, p, tower):
    with budget(60):
        E = ec.curve_make(1, 0, 0, 1, field=p)
        got = ec.division_tower(E, m, max_ext=12)
        assert got == tower and got[-1] == m * m
        for k, count in enumerate(got, start=1):
            assert count == ec.division_points_bruteforce(E, m, k)


@pytest.mark.criterion(7, C7)
def test_c7_reduction():
    with budget(10):
        r = ec.reduction_type(ec.curve_make(1, -1, 0, 0), 5)
        assert (r.type, r.conductor_exponent) == (ReductionType.MULTIPLICATIVE, 1)
        r = ec.reduction_type(ec.curve_make(1, 0, 0, 0), 5)
        assert (r.type, r.conductor_exponent) == (ReductionType.ADDITIVE, 2)
        frey = ec.frey_curve(1, 2, 1)
        rep = ec.semistability(frey, 100)
        assert rep.semistable and rep.bad == []
        for p in primes_up_to(100, 5):
            assert ec.reduction_type(frey, p).type is not ReductionType.ADDITIVE


@pytest.mark.criterion(8, C8)
def test_c8_metric():
    with budget(10):
        O, X, Y = metricgeom.UNIT_TRIPLE
        assert tuple(metricgeom.pythagoras_identity(metricgeom.TAXICAB, O, X, Y)) == (2, 4, False)
        assert tuple(metricgeom.pythagoras_identity(metricgeom.EUCLIDEAN, O, X, Y)) == (2, 2, True)
        hits = metricgeom.fermat_triple_search(metricgeom.EUCLIDEAN, 2, 5)
        assert any(h.A == (0, 0) and {h.B, h.C} == {(3, 0), (0, 4)} for h in hits)


SUBCOMMANDS = [
    ["field", "table", "--p", "3", "--n", "2"],
    ["field", "info", "--p", "5", "--n", "2"],
    ["fermat", "survey", "--p-max", "31"],
    ["exponent", "core", "--n", "60"],
    ["curve", "count", "--p", "7", "--coeffs", "1,0,0,1"],
    ["curve", "reduce", "--coeffs", "1,2,-3,5", "--p-max", "500"],
    ["curve", "torsion", "--coeffs", "1,0,0,1", "--p", "7", "--m", "3"],
    ["curve", "frey", "--a", "1", "--b", "2", "--n", "3"],
    ["curve", "lseries", "--coeffs", "1,0,0,1", "--p-max", "500"],
    ["metric", "check", "--metric", "taxicab"],
    ["metric", "search", "--metric", "euclidean", "--n", "2", "--bound", "5"],
]


def _outputs(tmp_path, argv, tag, jobs, fmt):
    out = tmp_path / tag
    assert main([*argv, "--diff-mode", "--format", fmt, "--jobs", str(jobs), "--out", str(out)]) == 0
    return {p.name: p.read_bytes() for p in sorted(out.iterdir())}


@pytest.mark.criterion(9, C9)
@pytest.mark.parametrize("argv", SUBCOMMANDS, ids=lambda a: "-".join(a[:2]))
@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_c9_determinism(argv, fmt, tmp_path, capsys):
    a = _outputs(tmp_path, argv, "a", 1, fmt)
    assert a == _outputs(tmp_path, argv, "b", 1, fmt)
    assert a == _outputs(tmp_path, argv, "c", 8, fmt)
    capsys.readouterr()
    doc = json.loads(a["report.json"])
    assert doc["schema"] == 1 and "header" not in doc


@pytest.mark.criterion(9, C9)
def test_c9_separate_processes(tmp_path):
    argv = [sys.executable, "-m", "fermatfield", "fermat", "survey", "--p-max", "13", "--diff-mode"]
    runs = [subprocess.run(argv + ["--jobs", j], capture_output=True, check=True).stdout for j in ("1", "8", "1")]
    assert runs[0] == runs[1] == runs[2]
