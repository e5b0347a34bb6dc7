"""Acceptance suite: every exit criterion at its stated (exact) tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  The shared 50,000-entry table is built once per session.
"""

import random
from math import isqrt

import pytest

from eventau.arith import Factorizer, primes_up_to
from eventau.congruence import SCOPE_PRIMES, in_N, regenerate_survivors, survivor_set_from_triples
from eventau.curves import CurveForm, CurveSpec, scan_prime_points
from eventau.exclusion import Outcome, Target, decide
from eventau.lucas import LucasParams, check_apparition_bound, lucas_u
from eventau.tau import tau_prime_power
from eventau.verify import (
    scan_two_times_prime,
    verify_hecke,
    verify_multiplicativity,
    verify_omega_inequality,
    verify_parity,
)

TAU_277 = -2 * 8209466002937
TAU_1297 = 2 * 58734858143062873


def _criterion(num: int, ok: bool, description: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {num} failed: {description}"


def test_criterion_1_exact_coefficients(table50k):
    ok = (
        table50k.values[:5] == (1, -24, 252, -1472, 4830)
        and table50k[23] == 18643272
        and table50k[277] == TAU_277
        and table50k[1297] == TAU_1297
    )
    _criterion(1, ok, "tau(1..5), tau(23), tau(277), tau(1297) exact at bound 50000")


def test_criterion_2_table_regeneration():
    cases = 0
    ok = True
    for ell in SCOPE_PRIMES:
        for sign in (1, -1):
            cases += 1
            ok = ok and (
                regenerate_survivors(ell, sign).survivors
                == survivor_set_from_triples(ell, sign).survivors
            )
    ok = ok and cases == 2 * len(SCOPE_PRIMES)
    _criterion(2, ok, f"survivor sets regenerate exactly for all {cases} (prime, sign) cases")


def test_criterion_3_exclusion_matches_membership():
    ok = True
    for ell in SCOPE_PRIMES:
        for sign in (1, -1):
            for j in range(1, 89):
                ok = ok and decide(Target(sign, ell, j)).excluded == in_N(sign, ell, j)
    named = (
        decide(Target(1, 7, 1)).outcome is Outcome.EXCLUDED
        and decide(Target(1, 7, 19)).outcome is Outcome.NOT_COVERED
        and decide(Target(-1, 59, 3)).outcome is Outcome.NOT_COVERED
        and all(decide(Target(-1, 97, j)).outcome is Outcome.EXCLUDED for j in range(1, 89))
        and decide(Target(1, 691, 1)).outcome is Outcome.EXCLUDED
        and decide(Target(-1, 691, 1)).outcome is Outcome.EXCLUDED
    )
    _criterion(3, ok and named, "decide == published membership for all ell, signs, j <= 88; named verdicts hold")


def test_criterion_4_corollary_reproduction():
    ok = True
    for ell in SCOPE_PRIMES:
        for sign in (1, -1):
            for j in (1, 2, 3):
                verdict = decide(Target(sign, ell, j))
                expected = not (sign == -1 and ell == 59 and j == 3)
                ok = ok and verdict.excluded == expected
    _criterion(4, ok, "all +-2l, +-2l^2, +-2l^3 excluded except (-, 59, 3)")


def test_criterion_5_two_times_prime_census(table50k):
    report = scan_two_times_prime(table50k)
    first_two = [n for n, _, _ in report.hits[:2]]
    ok = report.violations == [] and first_two == [277, 1297]
    _criterion(5, ok, f"2*prime census at 50000: {len(report.hits)} hits, all at prime n, first two 277/1297")


def test_criterion_6_parity_law(table50k):
    report = verify_parity(table50k)
    ok = report.ok and report.checked == 50_000
    _criterion(6, ok, "parity law has zero violations over the full table")


def test_criterion_7_structural_consistency(table50k):
    hecke = verify_hecke(table50k)
    mult = verify_multiplicativity(table50k)
    ok = hecke.ok and mult.ok and hecke.checked > 0 and mult.checked > 0
    _criterion(7, ok, "recursion at prime powers and factorization product agree with the table everywhere")


def _random_params(rng: random.Random) -> LucasParams:
    p = rng.choice([q for q in primes_up_to(97) if q >= 2])
    bound = isqrt(4 * p ** 11)
    a = 0
    while a == 0:
        a = rng.randint(-bound, bound)
    return LucasParams(A=a, p=p)


def test_criterion_8_lucas_properties(table50k):
    # (i) the Lucas view reproduces prime-power coefficients
    identity_ok = True
    for p in (2, 3, 5, 7, 11):
        params = LucasParams(A=table50k[p], p=p)
        for m in range(0, 9):
            expected = (
                table50k[p ** m]
                if p ** m <= table50k.max_n
                else tau_prime_power(table50k[p], p, m)
            )
            identity_ok = identity_ok and lucas_u(params, m + 1) == expected

    # (ii) relative divisibility u_d | u_n over 200 random parameter sets
    rng = random.Random(20260809)
    param_sets = [_random_params(rng) for _ in range(200)]
    divisibility_ok = True
    for params in param_sets:
        us = {}
        prev, cur = 1, params.A
        us[1], us[2] = 1, params.A
        for n in range(3, 61):
            prev, cur = cur, params.A * cur - params.Q * prev
            us[n] = cur
        for n in range(2, 61):
            for d in range(1, n):
                if n % d == 0 and us[n] % us[d] != 0:
                    divisibility_ok = False

    # (iii) rank-of-apparition bound for every odd prime ell <= 47
    bound_ok = True
    ells = [ell for ell in primes_up_to(47) if ell >= 3]
    for params in param_sets:
        for ell in ells:
            if params.Q % ell == 0:
                continue
            bound_ok = bound_ok and check_apparition_bound(params, ell)

    ok = identity_ok and divisibility_ok and bound_ok
    _criterion(8, ok, "Lucas identity, relative divisibility (200 param sets), rank bounds (ell <= 47)")


def test_criterion_9_curve_scans_empty():
    ok = True
    for form in CurveForm:
        points = scan_prime_points(CurveSpec(form, 11), 10 ** 6)
        ok = ok and points == []
    _criterion(9, ok, "no integer points with prime X <= 10^6 on any of the three curves")


def test_criterion_10_omega_inequality(table50k):
    report = verify_omega_inequality(table50k, 3000, Factorizer())
    total = report.checked + len(report.skipped)
    ok = report.ok and total == 2999 and len(report.skipped) < 0.05 * total
    _criterion(
        10,
        ok,
        f"prime-factor-count inequality at 3000: {len(report.violations)} violations, "
        f"{len(report.skipped)} skips of {total}",
    )
