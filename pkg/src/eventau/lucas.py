"""Lucas sequences specialized to prime-power coefficient runs.

For a weight-2k eigenform and a prime p, the run {1, a(p), a(p^2), ...} is the
Lucas sequence u_n attached to X^2 - A X + Q with A = a(p) and Q = p^(2k-1):
a(p^m) = u_{m+1}.  This module provides the integer recurrence, the rank of
apparition (first index n >= 2 with l | u_n), the classical bound checks on
that rank, and the primitive-prime-divisor defectivity tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import (
    DEFAULT_FACTORIZER,
    FactorizationBudgetExceeded,
    Factorizer,
    is_probable_prime,
    nth_root,
)
from .curves import CurveForm

__all__ = [
    "LucasParams",
    "DefectiveMatch",
    "lucas_u",
    "rank_of_apparition",
    "apparition_bound_holds",
    "check_apparition_bound",
    "is_defective",
    "defective_case_classifier",
]


@dataclass(frozen=True)
class LucasParams:
    """Parameters (A, Q) = (a(p), p^(2k-1)) of the coefficient Lucas sequence.

    Degenerate parameter sets (p | A, so gcd(A, Q) > 1: the strict
    Lucas-number definition does not apply) are representable and flagged via
    `is_degenerate`.  They do occur in nature - p divides tau(p) for each of
    p = 2, 3, 5, 7 - and the recurrence, rank and defectivity computations
    all remain well defined on them; only the classification theorems about
    defective terms assume the non-degenerate shape.
    """

    A: int
    p: int
    weight_2k: int = 12
    Q: int = field(init=False)
    D: int = field(init=False)

    def __post_init__(self):
        if self.A == 0:
            raise ValueError("A = 0 makes the root ratio a root of unity")
        if not is_probable_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.weight_2k < 4 or self.weight_2k % 2:
            raise ValueError("weight must be an even integer >= 4")
        q = self.p ** (self.weight_2k - 1)
        if self.A * self.A > 4 * q:
            raise ValueError(f"|A|={abs(self.A)} exceeds the coefficient bound 2*sqrt({q})")
        object.__setattr__(self, "Q", q)
        object.__setattr__(self, "D", self.A * self.A - 4 * q)

    @property
    def is_degenerate(self) -> bool:
        return self.A % self.p == 0


def lucas_u(params: LucasParams, n: int) -> int:
    """u_n with u_1 = 1, u_2 = A, u_n = A*u_{n-1} - Q*u_{n-2}; equals a(p^(n-1))."""
    if n < 1:
        raise ValueError("index n must be >= 1 (u_0 is not defined here)")
    if n == 1:
        return 1
    prev, cur = 1, params.A
    for _ in range(n - 2):
        prev, cur = cur, params.A * cur - params.Q * prev
    return cur


def _u_mod(params: LucasParams, n: int, mod: int) -> int:
    if n == 1:
        return 1 % mod
    a, q = params.A % mod, params.Q % mod
    prev, cur = 1 % mod, a
    for _ in range(n - 2):
        prev, cur = cur, (a * cur - q * prev) % mod
    return cur


def rank_of_apparition(params: LucasParams, ell: int) -> int | None:
    """Smallest n >= 2 with ell | u_n, or None when no index is ever divisible.

    When ell does not divide Q, a divisible index always exists within
    n <= ell + 1 (the rank divides ell-1 or ell+1, or equals ell when
    ell | D).  When ell | Q the sequence mod ell is eventually the geometric
    run A^(n-1), so divisibility happens for all n >= 2 or never.
    """
    if ell < 3 or ell % 2 == 0 or not is_probable_prime(ell):
        raise ValueError(f"ell={ell} must be an odd prime")
    if params.Q % ell == 0:
        return 2 if params.A % ell == 0 else None
    a, q = params.A % ell, params.Q % ell
    prev, cur = 1, a
    for n in range(2, ell + 2):
        if cur == 0:
            return n
        prev, cur = cur, (a * cur - q * prev) % ell
    raise RuntimeError(
        f"no rank of apparition <= ell+1 for ell={ell}: arithmetic bug"
    )


def apparition_bound_holds(m: int, ell: int, ell_divides_discriminant: bool) -> bool:
    """The classical constraint on a rank m > 2: m = ell if ell | D, else m | ell -+ 1."""
    if m == 2:
        return True
    if ell_divides_discriminant:
        return m == ell
    return (ell - 1) % m == 0 or (ell + 1) % m == 0


def check_apparition_bound(params: LucasParams, ell: int) -> bool:
    """Verify the computed rank of apparition obeys the classical bound."""
    if ell < 3 or ell % 2 == 0 or not is_probable_prime(ell):
        raise ValueError(f"ell={ell} must be an odd prime")
    if params.Q % ell == 0:
        raise ValueError("ell | Q is outside the bound's hypothesis")
    m = rank_of_apparition(params, ell)
    return apparition_bound_holds(m, ell, params.D % ell == 0)


def is_defective(
    params: LucasParams, n: int, factorizer: Factorizer = DEFAULT_FACTORIZER
) -> bool | None:
    """Whether u_n lacks a primitive prime divisor.

    A prime divisor l of u_n is primitive when l divides neither D nor any
    earlier term u_2..u_{n-1}.  The predicate is definitional, so it is
    evaluated for degenerate parameter sets too (the defective-term
    classification theorems just say nothing about those).  Returns
    True/False, or None when |u_n| could not be factored within the
    factorizer's budget (explicitly indeterminate; never a guess).
    """
    if n <= 2:
        raise ValueError("defectivity is defined for n > 2")
    u_n = lucas_u(params, n)
    if u_n == 0:
        raise ValueError("u_n = 0 is outside the defectivity definition")
    if abs(u_n) == 1:
        return True  # no prime divisors at all
    try:
        factors = factorizer.factor(u_n)
    except FactorizationBudgetExceeded:
        return None
    for ell in factors:
        if params.D % ell == 0:
            continue
        if any(_u_mod(params, i, ell) == 0 for i in range(2, n)):
            continue
        return False  # ell is primitive for u_n
    return True


@dataclass(frozen=True)
class DefectiveMatch:
    """Witness that (A, ell, n) fits one of the two defective +-ell templates."""

    form: CurveForm
    x: int  # the prime X-coordinate
    y: int  # |Y|

    @property
    def case(self) -> int:
        return 2 if self.form is CurveForm.TWO_X_POW_MINUS_1 else 1


def defective_case_classifier(
    A: int, ell: int, n: int, weight_2k: int = 12
) -> DefectiveMatch | None:
    """Match (A, ell, n) against the only templates allowing a defective +-ell.

    Template one: (A, ell, n) = (+-m, 3, 3) with 3 not dividing m and
    (p, +-m) an integer point on Y^2 = X^(2k-1) +- 3 for some prime p.
    Template two: (A, ell, n) = (+-ell, ell, 4) with (p, +-ell) on
    Y^2 = 2X^(2k-1) - 1.  The existential prime p is decided exactly by
    integer root extraction, not by a bounded search.
    """
    if ell < 3 or ell % 2 == 0 or not is_probable_prime(ell):
        raise ValueError(f"ell={ell} must be an odd prime")
    if weight_2k < 4 or weight_2k % 2:
        raise ValueError("weight must be an even integer >= 4")
    e = weight_2k - 1
    if ell == 3 and n == 3 and A % 3 != 0:
        for form, x_power in (
            (CurveForm.X_POW_PLUS_3, A * A - 3),
            (CurveForm.X_POW_MINUS_3, A * A + 3),
        ):
            if x_power < 2:
                continue
            root, exact = nth_root(x_power, e)
            if exact and is_probable_prime(root) and A % root != 0:
                return DefectiveMatch(form=form, x=root, y=abs(A))
    if n == 4 and abs(A) == ell:
        root, exact = nth_root((ell * ell + 1) // 2, e)
        if exact and is_probable_prime(root) and A % root != 0:
            return DefectiveMatch(form=CurveForm.TWO_X_POW_MINUS_1, x=root, y=ell)
    return None
