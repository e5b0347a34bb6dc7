import pytest

from eventau.arith import primes_up_to
from eventau.congruence import (
    RESIDUE_PROFILES,
    S_MINUS,
    S_PLUS,
    SCOPE_PRIMES,
    ExceptionalPrimeError,
    PrimeNotCoveredError,
    ProgressionTriple,
    excluded_by_congruence,
    in_N,
    regenerate_survivors,
    representable_as_a2_23b2,
    survivor_set_from_triples,
    tau_p_residue,
)


def test_residue_profiles_are_the_published_ones():
    assert RESIDUE_PROFILES == {
        2: frozenset({0}),
        3: frozenset({0, 2}),
        5: frozenset({0, 1, 2}),
        7: frozenset({0, 1, 2, 4}),
        23: frozenset({0, 2, 22}),
    }


def test_scope_primes_are_the_odd_primes_below_100():
    assert SCOPE_PRIMES == (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                            53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
    assert len(SCOPE_PRIMES) == 24


def test_progression_triple_validation():
    ProgressionTriple(7, 19, 44)
    with pytest.raises(ValueError):
        ProgressionTriple(7, 44, 44)
    with pytest.raises(ValueError):
        ProgressionTriple(7, 0, 8)
    with pytest.raises(ValueError):
        ProgressionTriple(101, 0, 44)


def test_tables_all_well_formed():
    for trip in S_PLUS + S_MINUS:
        assert trip.t in (1, 2, 4, 11, 22, 44)
        assert 0 <= trip.r < trip.t
    # every scope prime has at least the j = 0 (mod t) progression on the + side
    plus_ells = {trip.ell for trip in S_PLUS}
    assert plus_ells == set(SCOPE_PRIMES)


def test_tau_p_residue_simple_cases():
    assert tau_p_residue(2, 4) == (-24) % 4 == 0
    assert tau_p_residue(5, 5) == 4830 % 5 == 0
    assert tau_p_residue(59, 23) in {0, 2, 22}


def test_tau_p_residue_exceptional_prime():
    with pytest.raises(ExceptionalPrimeError):
        tau_p_residue(23, 23)
    with pytest.raises(ValueError):
        tau_p_residue(6, 5)
    with pytest.raises(ValueError):
        tau_p_residue(5, 11)


def test_tau_p_residue_matches_table(table10k):
    """The congruence formulas agree with the computed coefficients."""
    for p in primes_up_to(table10k.max_n):
        v = table10k[p]
        assert tau_p_residue(p, 4) == v % 4, p
        assert tau_p_residue(p, 3) == v % 3, p
        assert tau_p_residue(p, 5) == v % 5, p
        assert tau_p_residue(p, 7) == v % 7, p
        if p != 23:
            r = tau_p_residue(p, 23)
            assert r in RESIDUE_PROFILES[23], p
            assert r == v % 23, p


def test_representable_examples():
    assert representable_as_a2_23b2(59)      # 6^2 + 23
    assert not representable_as_a2_23b2(2)
    assert representable_as_a2_23b2(101)     # 101 = 78 + 23 = no; 101 - 0 = not sq; b=1: 78 no; b=2: 9 = 3^2
    # 23 = 0^2 + 23*1^2: the direct scan finds it (call sites never pass 23)
    assert representable_as_a2_23b2(23)


def test_representable_matches_brute_force():
    for p in primes_up_to(500):
        brute = any(
            a * a + 23 * b * b == p for b in range(0, 5) for a in range(0, 23)
        )
        assert representable_as_a2_23b2(p) == brute, p


def test_excluded_by_congruence_examples():
    assert excluded_by_congruence(1, 7, 1)        # 14 = 4 (mod 5)
    assert not excluded_by_congruence(1, 7, 44)   # j = 0 (mod 44) survives
    for j in (3, 25, 47, 69):
        assert not excluded_by_congruence(-1, 59, j)  # the (59,3,22) progression
    with pytest.raises(ValueError):
        excluded_by_congruence(2, 7, 1)
    with pytest.raises(ValueError):
        excluded_by_congruence(1, 9, 1)
    with pytest.raises(ValueError):
        excluded_by_congruence(1, 7, 0)


def test_survivor_sets_match_published_examples():
    assert regenerate_survivors(7, 1).survivors == {0, 19}
    assert regenerate_survivors(7, -1).survivors == frozenset()
    assert regenerate_survivors(3, -1).survivors == {15}


def test_regeneration_equals_published_tables_everywhere():
    for ell in SCOPE_PRIMES:
        for sign in (1, -1):
            regen = regenerate_survivors(ell, sign)
            published = survivor_set_from_triples(ell, sign)
            assert regen.survivors == published.survivors, (ell, sign)


def test_in_N_examples():
    assert not in_N(1, 7, 19)
    assert in_N(1, 7, 1)
    assert all(in_N(-1, 97, j) for j in range(1, 89))


def test_in_N_validation():
    with pytest.raises(PrimeNotCoveredError):
        in_N(1, 101, 1)
    with pytest.raises(PrimeNotCoveredError):
        in_N(1, 691, 1)
    with pytest.raises(ValueError):
        in_N(1, 7, 0)


def test_tables_agree_with_first_principles():
    """in_N (hard-coded tables) == excluded_by_congruence (recomputed)."""
    for ell in SCOPE_PRIMES:
        for sign in (1, -1):
            for j in range(1, 89):
                assert in_N(sign, ell, j) == excluded_by_congruence(sign, ell, j), (sign, ell, j)


def test_mod4_congruence_not_used_for_exclusion():
    # 2*3^j = 2 (mod 4) for every j; the mod-4 profile would reject nothing
    # even-valued anyway, and excluded_by_congruence must not consult it.
    # j = 0 (mod 44) passes all four odd moduli for ell = 3.
    assert not excluded_by_congruence(1, 3, 44)
