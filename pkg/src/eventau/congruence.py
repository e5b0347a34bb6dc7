"""Classical congruences satisfied by tau(p) and the progression tables.

For a prime p the residues tau(p) mod 3, 5, 7 and 23 land in small fixed sets
(mod 23 splitting by the quadratic character of p and by whether p is
represented by a^2 + 23b^2).  Consequently, whether +-2*l^j can be a tau(p)
value at all depends only on j modulo 44, and the admissible exponents are
captured by per-prime arithmetic progressions with modulus dividing 44.

Those progressions are stored twice on purpose: `S_PLUS`/`S_MINUS` hold the
published triples verbatim and serve as ground truth for `in_N`, while
`regenerate_survivors` recomputes the same sets from the congruences from
scratch.  Comparing the two catches transcription and logic errors
independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_probable_prime, is_square, legendre, primes_up_to, sigma

__all__ = [
    "RESIDUE_PROFILES",
    "S_PLUS",
    "S_MINUS",
    "SCOPE_PRIMES",
    "ProgressionTriple",
    "SurvivorSet",
    "ExceptionalPrimeError",
    "PrimeNotCoveredError",
    "tau_p_residue",
    "representable_as_a2_23b2",
    "excluded_by_congruence",
    "regenerate_survivors",
    "survivor_set_from_triples",
    "in_N",
]

# Residues tau(p) can attain for primes p (p != 23 in the mod-23 row).
RESIDUE_PROFILES: dict[int, frozenset[int]] = {
    2: frozenset({0}),
    3: frozenset({0, 2}),
    5: frozenset({0, 1, 2}),
    7: frozenset({0, 1, 2, 4}),
    23: frozenset({0, 2, 22}),
}

# Moduli actually used to exclude +-2*l^j.  Evenness handles mod 2; the mod-4
# congruence is computed for data validation but deliberately not used here.
_EXCLUSION_MODULI = (3, 5, 7, 23)

_PROGRESSION_MODULI = frozenset({1, 2, 4, 11, 22, 44})

SCOPE_PRIMES: tuple[int, ...] = tuple(p for p in primes_up_to(99) if p >= 3)


class ExceptionalPrimeError(ValueError):
    """p = 23 has no mod-23 congruence; callers must use tau(23) directly."""


class PrimeNotCoveredError(ValueError):
    """The hard-coded progression tables only cover primes 3 <= l < 100."""


@dataclass(frozen=True)
class ProgressionTriple:
    """Arithmetic progression j = r (mod t) attached to the prime ell."""

    ell: int
    r: int
    t: int

    def __post_init__(self):
        if not (3 <= self.ell < 100 and is_probable_prime(self.ell)):
            raise ValueError(f"ell={self.ell} must be a prime in [3, 100)")
        if self.t not in _PROGRESSION_MODULI:
            raise ValueError(f"modulus t={self.t} must divide 44")
        if not 0 <= self.r < self.t:
            raise ValueError(f"residue r={self.r} outside [0, {self.t})")

    def contains(self, j: int) -> bool:
        return (j - self.r) % self.t == 0


def _triples(raw: tuple[tuple[int, int, int], ...]) -> tuple[ProgressionTriple, ...]:
    return tuple(ProgressionTriple(ell, r, t) for ell, r, t in raw)


# Exponent progressions for which +2*l^j survives every congruence test.
S_PLUS: tuple[ProgressionTriple, ...] = _triples((
    (3, 0, 44), (5, 0, 22), (7, 0, 44), (7, 19, 44), (11, 0, 22), (13, 0, 44), (17, 0, 44),
    (19, 0, 22), (23, 0, 4), (29, 0, 22), (31, 0, 22), (37, 0, 44), (37, 35, 44), (41, 0, 22),
    (43, 0, 44), (43, 37, 44), (47, 0, 4), (53, 0, 44), (59, 0, 22), (61, 0, 22), (67, 0, 44),
    (67, 43, 44), (71, 0, 22), (73, 0, 44), (79, 0, 22), (83, 0, 44), (89, 0, 22), (97, 0, 44),
))

# Same for -2*l^j; most primes have no surviving progression at all.
S_MINUS: tuple[ProgressionTriple, ...] = _triples((
    (3, 15, 44), (5, 11, 22), (17, 33, 44), (59, 3, 22), (83, 11, 44), (89, 11, 22),
))

_TABLES = {1: S_PLUS, -1: S_MINUS}


@dataclass(frozen=True)
class SurvivorSet:
    """j-residues mod 44 for which sign*2*ell^j passes all congruence tests."""

    ell: int
    sign: int
    survivors: frozenset[int]


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return sign


def tau_p_residue(p: int, modulus: int) -> int:
    """The residue of tau(p) forced by the classical congruences.

    Supported moduli: 4, 3, 5, 7 and 23.  For 23 the three-way split is: 0
    when p is a quadratic non-residue mod 23, sigma_11(p) when p = a^2+23b^2,
    and -1 otherwise.  p = 23 itself is the exceptional prime for modulus 23.
    """
    if not is_probable_prime(p):
        raise ValueError(f"p={p} is not prime")
    if modulus == 4:
        return p ** 3 * sigma(1, p) % 4
    if modulus == 3:
        return p * p * sigma(1, p) % 3
    if modulus == 5:
        return p * sigma(1, p) % 5
    if modulus == 7:
        return p * sigma(3, p) % 7
    if modulus == 23:
        if p == 23:
            raise ExceptionalPrimeError("no mod-23 congruence at p=23; use tau(23) directly")
        if legendre(p, 23) == -1:
            return 0
        if representable_as_a2_23b2(p):
            return sigma(11, p) % 23
        return 22
    raise ValueError(f"unsupported modulus {modulus}")


def representable_as_a2_23b2(p: int) -> bool:
    """Whether p = a^2 + 23*b^2 for integers a, b (direct scan over b)."""
    b = 0
    while 23 * b * b <= p:
        if is_square(p - 23 * b * b):
            return True
        b += 1
    return False


def excluded_by_congruence(sign: int, ell: int, j: int) -> bool:
    """True when sign*2*ell^j misses an allowed residue mod 3, 5, 7 or 23.

    The mod-2 profile is automatic (the value is even) and mod 4 is unused,
    so the test runs exactly over the four odd moduli.
    """
    _check_sign(sign)
    if ell < 3 or ell % 2 == 0 or not is_probable_prime(ell):
        raise ValueError(f"ell={ell} must be an odd prime")
    if j < 1:
        raise ValueError("exponent j must be >= 1")
    for m in _EXCLUSION_MODULI:
        if sign * 2 * pow(ell, j, m) % m not in RESIDUE_PROFILES[m]:
            return True
    return False


def regenerate_survivors(ell: int, sign: int) -> SurvivorSet:
    """Recompute the surviving j-residues mod 44 from the congruences alone.

    Verifies that exclusion really is 44-periodic in j before reducing; a
    failure there would mean an arithmetic bug, not a data error.
    """
    _check_sign(sign)
    if not (3 <= ell < 100 and is_probable_prime(ell)):
        raise ValueError(f"ell={ell} must be a prime in [3, 100)")
    for j in range(1, 45):
        if excluded_by_congruence(sign, ell, j) != excluded_by_congruence(sign, ell, j + 44):
            raise RuntimeError(f"period-44 check failed at ell={ell}, sign={sign}, j={j}")
    survivors = frozenset(
        j % 44 for j in range(1, 45) if not excluded_by_congruence(sign, ell, j)
    )
    return SurvivorSet(ell=ell, sign=sign, survivors=survivors)


def survivor_set_from_triples(ell: int, sign: int) -> SurvivorSet:
    """The mod-44 expansion of the published progression triples for ell."""
    _check_sign(sign)
    if not (3 <= ell < 100 and is_probable_prime(ell)):
        raise PrimeNotCoveredError(f"tables cover primes in [3, 100); got {ell}")
    triples = [trip for trip in _TABLES[sign] if trip.ell == ell]
    survivors = frozenset(
        j % 44 for j in range(1, 45) if any(trip.contains(j) for trip in triples)
    )
    return SurvivorSet(ell=ell, sign=sign, survivors=survivors)


def in_N(sign: int, ell: int, j: int) -> bool:
    """Membership of (ell, j) in the published exponent set for this sign.

    True exactly when j avoids every progression attached to ell, i.e. when
    the congruences rule out sign*2*ell^j as a tau(p) value.
    """
    _check_sign(sign)
    if j < 1:
        raise ValueError("exponent j must be >= 1")
    if not (3 <= ell < 100 and is_probable_prime(ell)):
        raise PrimeNotCoveredError(f"tables cover primes in [3, 100); got {ell}")
    return not any(trip.contains(j) for trip in _TABLES[sign] if trip.ell == ell)
