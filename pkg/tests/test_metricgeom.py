import random
from fractions import Fraction
from itertools import product

import pytest

from fermatfield import metricgeom as mg
from fermatfield.errors import InexactMetric, InexactMetricForOddExponent
from fermatfield.metricgeom import CHEBYSHEV, EUCLIDEAN, TAXICAB, PlanePoint, PNorm

O, X, Y = mg.UNIT_TRIPLE
METRICS = [EUCLIDEAN, TAXICAB, CHEBYSHEV, PNorm(3), PNorm(Fraction(3, 2))]


def rand_point(rng):
    return PlanePoint(Fraction(rng.randint(-50, 50), rng.randint(1, 9)), Fraction(rng.randint(-50, 50), rng.randint(1, 9)))


def test_dist_examples():
    assert mg.dist(TAXICAB, O, X).exact == 1
    assert mg.dist(TAXICAB, X, Y).exact == 2
    d = mg.dist(EUCLIDEAN, X, Y)
    assert d.squared == 2 and d.exact is None
    assert mg.dist(EUCLIDEAN, O, PlanePoint(3, 4)).exact == 5
    assert isinstance(mg.dist(TAXICAB, PlanePoint("1/3", 0), O).exact, Fraction)


def test_pythagoras_examples():
    assert tuple(mg.pythagoras_identity(TAXICAB, O, X, Y)) == (2, 4, False)
    assert tuple(mg.pythagoras_identity(EUCLIDEAN, O, X, Y)) == (2, 2, True)
    assert tuple(mg.pythagoras_identity(CHEBYSHEV, O, X, Y)) == (2, 1, False)
    assert tuple(mg.pythagoras_identity(PNorm(1), O, X, Y)) == (2, 4, False)
    with pytest.raises(InexactMetric):
        mg.pythagoras_identity(PNorm(3), O, X, Y)


@pytest.mark.parametrize("metric", METRICS, ids=str)
def test_metric_axioms(metric):
    rng = random.Random(str(metric))
    for _ in range(500):
        A, B, C = (rand_point(rng) for _ in range(3))
        ab, ba = mg.dist(metric, A, B), mg.dist(metric, B, A)
        assert ab == ba
        assert mg.dist(metric, A, A).approx == 0
        if A != B:
            assert ab.approx > 0
        ac, cb = mg.dist(metric, A, C), mg.dist(metric, C, B)
        if ab.exact is not None and ac.exact is not None and cb.exact is not None:
            assert ab.exact <= ac.exact + cb.exact
        elif metric.kind == "euclidean":
            # d(A,B) <= d(A,C) + d(C,B) squared out in exact arithmetic:
            # s_ab - s_ac - s_cb <= 2 sqrt(s_ac s_cb)
            lhs = ab.squared - ac.squared - cb.squared
            assert lhs <= 0 or lhs * lhs <= 4 * ac.squared * cb.squared
        else:
            assert ab.approx <= ac.approx + cb.approx + 1e-9


def test_pnorm_equivalences():
    rng = random.Random(11)
    assert PNorm(1).normalized() == TAXICAB and PNorm(2).normalized() == EUCLIDEAN
    for _ in range(200):
        A, B = rand_point(rng), rand_point(rng)
        assert mg.dist(PNorm(1), A, B) == mg.dist(TAXICAB, A, B)
        assert mg.dist(PNorm(2), A, B).squared == mg.dist(EUCLIDEAN, A, B).squared


def test_right_triangles():
    rng = random.Random(3)
    for _ in range(100):
        A = rand_point(rng)
        h = Fraction(rng.randint(1, 40), rng.randint(1, 7))
        v = Fraction(rng.randint(1, 40), rng.randint(1, 7))
        B = PlanePoint(A.x + h * rng.choice((1, -1)), A.y)
        C = PlanePoint(A.x, A.y + v * rng.choice((1, -1)))
        assert mg.pythagoras_identity(EUCLIDEAN, A, B, C).holds


def test_parse_metric():
    assert mg.parse_metric("Taxicab") == TAXICAB
    assert mg.parse_metric("pnorm2") == EUCLIDEAN
    assert mg.parse_metric("pnorm(3/2)") == PNorm(Fraction(3, 2))
    with pytest.raises(ValueError):
        mg.parse_metric("manhattan")
    with pytest.raises(ValueError):
        PNorm(Fraction(1, 2))


def grid_oracle(metric, n, bound):
    pts = list(product(range(bound + 1), repeat=2))
    P = [PlanePoint(*p) for p in pts]

    def dn(i, j):
        d = mg.dist(metric, P[i], P[j])
        return d.squared ** (n // 2) if metric.kind == "euclidean" else d.exact**n

    out = set()
    for a in range(len(pts)):
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                x, y, z = dn(a, i), dn(a, j), dn(i, j)
                if x and y and z and x + y == z:
                    out.add((pts[a], pts[i], pts[j]))
    return out


@pytest.mark.parametrize("metric,n,bound", [(EUCLIDEAN, 2, 3), (TAXICAB, 2, 3), (CHEBYSHEV, 2, 3), (TAXICAB, 3, 3), (EUCLIDEAN, 4, 3)])
def test_search_matches_oracle(metric, n, bound):
    hits = mg.fermat_triple_search(metric, n, bound)
    got = {(h.A, h.B, h.C) for h in hits}
    assert len(got) == len(hits)
    assert got == grid_oracle(metric, n, bound)


def test_search_examples():
    hits = mg.fermat_triple_search(EUCLIDEAN, 2, 5)
    pairs = {(h.A, frozenset((h.B, h.C))) for h in hits}
    assert ((0, 0), frozenset(((3, 0), (0, 4)))) in pairs
    hit = next(h for h in hits if h.A == (0, 0) and {h.B, h.C} == {(3, 0), (0, 4)})
    assert sorted(hit.powers) == [9, 16, 25]
    assert mg.fermat_triple_search(TAXICAB, 3, 10) == []
    for h in hits:
        assert h.A not in (h.B, h.C) and h.B != h.C
    with pytest.raises(InexactMetricForOddExponent):
        mg.fermat_triple_search(EUCLIDEAN, 3, 2)
    with pytest.raises(ValueError):
        mg.fermat_triple_search(TAXICAB, 1, 2)


def test_search_slabs_concatenate():
    full = mg.fermat_triple_search(CHEBYSHEV, 2, 4)
    N = mg.grid_size(4)
    parts = mg.fermat_triple_search(CHEBYSHEV, 2, 4, range(0, 10)) + mg.fermat_triple_search(CHEBYSHEV, 2, 4, range(10, N))
    assert parts == full


def test_large_powers_exact():
    # 40^40 overflows int64; switch to Python ints
    hits = mg.fermat_triple_search(TAXICAB, 40, 20, range(0, 3))
    assert hits == []
    D = mg._distance_powers(TAXICAB, 40, mg._grid(20))
    assert D[0, -1] == 40**40
