import pytest
from hypothesis import given, strategies as st

from fermatfield.errors import EvenModulus, NotPrime, ZeroInverse
from fermatfield.modarith import (
    FpResidue,
    divisors,
    factorize,
    fp_inv,
    fp_pow,
    is_prime,
    legendre,
    legendre_symbol,
    prime_modulus,
    primes_up_to,
)

SMALL_PRIMES = primes_up_to(97)


def trial_division_oracle(m):
    return m >= 2 and all(m % d for d in range(2, m))


def test_inverse_examples():
    assert fp_inv(FpResidue(1, 11)).value == 1
    assert fp_inv(FpResidue(3, 7)).value == 5
    with pytest.raises(ZeroInverse):
        fp_inv(FpResidue(0, 5))


def test_pow_examples():
    assert fp_pow(FpResidue(2, 5), 4).value == 1
    assert fp_pow(FpResidue(3, 7), 0).value == 1
    assert fp_pow(FpResidue(0, 7), 0).value == 1
    acc = 1
    for _ in range(10):
        acc = acc * 2 % 7
    assert fp_pow(FpResidue(2, 7), 10).value == acc == 2


def test_legendre_examples():
    squares7 = {x * x % 7 for x in range(1, 7)}
    assert legendre_symbol(FpResidue(0, 7)) == 0
    assert legendre_symbol(FpResidue(2, 7)) == 1 and 2 in squares7
    assert legendre_symbol(FpResidue(3, 7)) == -1 and 3 not in squares7
    with pytest.raises(EvenModulus):
        legendre(1, 2)


def test_is_prime_examples():
    assert is_prime(7) and not is_prime(1) and not is_prime(0)
    assert is_prime(97) == trial_division_oracle(97)


def test_is_prime_matches_trial_division():
    assert [m for m in range(2000) if is_prime(m)] == [m for m in range(2000) if trial_division_oracle(m)]
    assert is_prime(2**31 - 1)


def test_prime_modulus_rejects():
    for bad in (0, 1, 4, 2**31, 2**61 - 1):
        with pytest.raises(NotPrime):
            prime_modulus(bad)


def test_residues_are_reduced():
    assert FpResidue(-1, 7) == FpResidue(6, 7)
    assert FpResidue(10, 7).value == 3
    a = FpResidue(3, 7)
    assert (a + 5).value == 1 and (a - 5).value == 5 and (a * a).value == 2
    assert (a / a).value == 1 and (a**-1).value == 5 and (-a).value == 4


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_inverse_and_fermat_little_exhaustive(p):
    for a in range(1, p):
        r = FpResidue(a, p)
        assert (r * fp_inv(r)).value == 1
        assert fp_pow(r, p - 1).value == 1


@pytest.mark.parametrize("p", [q for q in SMALL_PRIMES if 2 < q <= 31])
def test_legendre_multiplicative(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(p):
        expected = 0 if a == 0 else (1 if a in squares else -1)
        assert legendre(a, p) == expected
        for b in range(p):
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@given(st.integers(1, 10**6))
def test_factorize_roundtrip(m):
    prod = 1
    for q, e in factorize(m).items():
        assert is_prime(q)
        prod *= q**e
    assert prod == m


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
