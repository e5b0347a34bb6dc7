# -----------------------------------------------------------------------------
#  Shared integer arithmetic: sieves, primality, budgeted factorization,
#  exact roots, divisor sums.
# -----------------------------------------------------------------------------

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

# The first 13 prime bases make Miller-Rabin deterministic below this bound
# (Sorenson & Webster).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

DEFAULT_MR_ROUNDS = 24

_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class FactorizationBudgetExceeded(RuntimeError):
    """A composite cofactor survived the configured factoring budget."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"budget exhausted while factoring {n}: composite cofactor {cofactor}")
        self.n = n
        self.cofactor = cofactor


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve).tolist()


def smallest_factor_sieve(limit: int) -> np.ndarray:
    """spf[i] = smallest prime factor of i (spf[0]=0, spf[1]=1), for bulk factoring."""
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            np.minimum(spf[p * p:: p], p, out=spf[p * p:: p])
    return spf


def factor_with_sieve(n: int, spf: np.ndarray) -> dict[int, int]:
    """Factor 1 <= n < len(spf) using a smallest-factor sieve."""
    if not 1 <= n < len(spf):
        raise ValueError(f"n={n} outside sieve range")
    factors: dict[int, int] = {}
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors[p] = e
    return factors


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


_EXTRA_BASES: list[int] = []


def _mr_bases(rounds: int) -> list[int]:
    # fixed prime bases so results are reproducible run to run
    global _EXTRA_BASES
    if len(_EXTRA_BASES) < rounds:
        _EXTRA_BASES = primes_up_to(max(640, 20 * rounds))
    return _EXTRA_BASES[:rounds]


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin; deterministic below ~3.3e24, else `rounds` fixed prime bases."""
    if n < 2:
        return False
    for p in _TINY_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_DETERMINISTIC_BASES if n < _MR_DETERMINISTIC_BOUND else _mr_bases(rounds)
    return not any(_mr_witness(n, a % n, d, s) for a in bases if a % n)


def primality_is_certain(n: int) -> bool:
    """Whether is_probable_prime is deterministic (not merely probabilistic) at n."""
    return n < _MR_DETERMINISTIC_BOUND


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def nth_root(n: int, k: int) -> tuple[int, bool]:
    """(floor(n^(1/k)), exact?) for n >= 0, k >= 1; Newton on integers."""
    if n < 0 or k < 1:
        raise ValueError("nth_root requires n >= 0 and k >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    x = 1 << ((n.bit_length() + k - 1) // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x ** k == n


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p."""
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return -1 if e == p - 1 else 1


def _pollard_brent(n: int, max_iterations: int, rng: random.Random) -> tuple[int | None, int]:
    """Brent-cycle rho. Returns (nontrivial factor or None, iterations spent)."""
    if n % 2 == 0:
        return 2, 0
    spent = 0
    while spent < max_iterations:
        y = rng.randrange(1, n - 1)
        c = rng.randrange(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < max_iterations:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                spent += min(m, r - k)
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
    return None, spent


@dataclass(frozen=True)
class Factorizer:
    """Staged factoring with an explicit budget.

    Trial division finds every factor up to `trial_bound`; what remains is
    handed to Brent's rho with at most `rho_iterations` pseudo-random steps.
    A composite that survives both stages raises FactorizationBudgetExceeded
    rather than being guessed at.
    """

    trial_bound: int = 10 ** 6
    rho_iterations: int = 200_000
    mr_rounds: int = DEFAULT_MR_ROUNDS

    def factor(self, n: int) -> dict[int, int]:
        """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
        if n == 0:
            raise ValueError("cannot factor 0")
        n = abs(n)
        factors: dict[int, int] = {}
        if n == 1:
            return factors

        # stage 1: small trial division, checking the cofactor for primality
        # between stages so typical inputs never reach the expensive sweeps
        n = self._trial_stage(n, 2, min(10_000, self.trial_bound), factors)
        if n == 1:
            return factors
        if is_probable_prime(n, self.mr_rounds):
            factors[n] = factors.get(n, 0) + 1
            return factors

        if self.trial_bound > 10_000:
            n = self._trial_stage(n, 10_001, self.trial_bound, factors)
            if n == 1:
                return factors
            if is_probable_prime(n, self.mr_rounds):
                factors[n] = factors.get(n, 0) + 1
                return factors

        self._rho_stage(n, factors)
        return factors

    def _trial_stage(self, n: int, lo: int, hi: int, factors: dict[int, int]) -> int:
        for p in _trial_primes(hi):
            if p < lo:
                continue
            if p * p > n:
                break
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors[p] = factors.get(p, 0) + e
        return n

    def _rho_stage(self, n: int, factors: dict[int, int], budget: int | None = None) -> None:
        original = n
        remaining = self.rho_iterations if budget is None else budget
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_probable_prime(m, self.mr_rounds):
                factors[m] = factors.get(m, 0) + 1
                continue
            # perfect powers trip up rho; peel them off exactly
            root = _perfect_power_root(m)
            if root is not None:
                base, k = root
                for _ in range(k):
                    stack.append(base)
                continue
            rng = random.Random(m)
            d, spent = _pollard_brent(m, remaining, rng)
            remaining -= spent
            if d is None:
                raise FactorizationBudgetExceeded(original, m)
            stack.append(d)
            stack.append(m // d)


def _perfect_power_root(n: int) -> tuple[int, int] | None:
    for k in range(2, n.bit_length() + 1):
        root, exact = nth_root(n, k)
        if root < 2:
            break
        if exact:
            return root, k
    return None


_TRIAL_PRIME_CACHE: dict[int, list[int]] = {}


def _trial_primes(bound: int) -> list[int]:
    primes = _TRIAL_PRIME_CACHE.get(bound)
    if primes is None:
        primes = primes_up_to(bound)
        if len(_TRIAL_PRIME_CACHE) > 8:
            _TRIAL_PRIME_CACHE.clear()
        _TRIAL_PRIME_CACHE[bound] = primes
    return primes


DEFAULT_FACTORIZER = Factorizer()


def factorize(n: int, factorizer: Factorizer = DEFAULT_FACTORIZER) -> dict[int, int]:
    return factorizer.factor(n)


def big_omega(factors: dict[int, int]) -> int:
    """Number of prime factors with multiplicity."""
    return sum(factors.values())


def sigma(v: int, n: int) -> int:
    """Sum of v-th powers of the positive divisors of n (n >= 1)."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    if v < 0:
        raise ValueError("sigma requires v >= 0")
    total = 1
    for p, e in DEFAULT_FACTORIZER.factor(n).items():
        if v == 0:
            total *= e + 1
        else:
            total *= (p ** (v * (e + 1)) - 1) // (p ** v - 1)
    return total
