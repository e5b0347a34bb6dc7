import random

import pytest

from eventau.arith import (
    DEFAULT_FACTORIZER,
    FactorizationBudgetExceeded,
    Factorizer,
    big_omega,
    factor_with_sieve,
    is_probable_prime,
    is_square,
    legendre,
    nth_root,
    primality_is_certain,
    primes_up_to,
    sigma,
    smallest_factor_sieve,
)


def _is_prime_naive(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_primes_up_to_matches_naive():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(100) == [n for n in range(101) if _is_prime_naive(n)]


def test_miller_rabin_agrees_with_trial_division():
    for n in range(2, 5000):
        assert is_probable_prime(n) == _is_prime_naive(n), n


def test_miller_rabin_rejects_carmichael_numbers():
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265):
        assert not is_probable_prime(n)


def test_miller_rabin_large_known_primes():
    assert is_probable_prime(2 ** 89 - 1)
    assert is_probable_prime(2 ** 127 - 1)
    assert not is_probable_prime((2 ** 89 - 1) * (2 ** 107 - 1))
    assert not primality_is_certain(2 ** 127 - 1)
    assert primality_is_certain(2 ** 61 - 1)


def test_factorizer_reassembles_random_integers():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(2, 10 ** 12)
        factors = DEFAULT_FACTORIZER.factor(n)
        prod = 1
        for p, e in factors.items():
            assert is_probable_prime(p)
            prod *= p ** e
        assert prod == n


def test_factorizer_negative_input_and_units():
    assert DEFAULT_FACTORIZER.factor(-1472) == {2: 6, 23: 1}
    assert DEFAULT_FACTORIZER.factor(1) == {}
    with pytest.raises(ValueError):
        DEFAULT_FACTORIZER.factor(0)


def test_factorizer_handles_perfect_powers_and_big_semiprimes():
    p = 10 ** 9 + 7
    assert DEFAULT_FACTORIZER.factor(p ** 3) == {p: 3}
    q = 10 ** 9 + 9
    assert DEFAULT_FACTORIZER.factor(p * q) == {p: 1, q: 1}


def test_factorizer_budget_exceeded_is_explicit():
    hard = (2 ** 89 - 1) * (2 ** 107 - 1)
    tight = Factorizer(trial_bound=100, rho_iterations=8)
    with pytest.raises(FactorizationBudgetExceeded):
        tight.factor(hard)


def test_smallest_factor_sieve_bulk_factoring():
    spf = smallest_factor_sieve(2000)
    for n in range(2, 2001):
        factors = factor_with_sieve(n, spf)
        assert factors == DEFAULT_FACTORIZER.factor(n)
    assert factor_with_sieve(1, spf) == {}


def test_nth_root_exactness():
    assert nth_root(0, 5) == (0, True)
    assert nth_root(177147, 11) == (3, True)
    assert nth_root(177146, 11) == (2, False)
    for n in (2, 10, 10 ** 30 + 1):
        for k in (2, 3, 7):
            root, exact = nth_root(n ** k, k)
            assert (root, exact) == (n, True)
            root, exact = nth_root(n ** k + 1, k)
            assert root == n and not exact


def test_is_square():
    squares = {k * k for k in range(100)}
    for n in range(2000):
        assert is_square(n) == (n in squares)
    assert not is_square(-4)


def test_legendre_against_explicit_squares():
    for p in (3, 7, 23, 101):
        residues = {(x * x) % p for x in range(1, p)}
        for a in range(1, p):
            assert legendre(a, p) == (1 if a in residues else -1)
        assert legendre(0, p) == 0
        assert legendre(p, p) == 0


def test_sigma_divisor_sums():
    assert sigma(0, 12) == 6
    assert sigma(1, 6) == 12
    assert sigma(3, 5) == 126
    for n in range(1, 200):
        for v in (0, 1, 2):
            assert sigma(v, n) == sum(d ** v for d in range(1, n + 1) if n % d == 0)
    with pytest.raises(ValueError):
        sigma(1, 0)


def test_big_omega():
    assert big_omega({2: 6, 23: 1}) == 7
    assert big_omega({}) == 0
