"""Decision procedure for even candidate values sign*2*ell^j.

`decide` walks the full chain of gates that rules such a value out as a
coefficient: the prime-factor-count bound pins the shape of any n with
tau(n) = value, multiplicativity plus the registry of externally proved
exclusions kills multi-prime n, the power-of-two base dies mod 4, the parity
law forces an odd exponent, the primitive-divisor theory forces a prime
successor index (with the index-4 degenerate branch dying mod 4), and the
congruence tables deliver the final blow for the surviving case n = p.

Every verdict carries an ordered machine-readable trace: one step per gate,
each with a citation, so an Excluded outcome is a checkable proof sketch.
Absence of exclusion is reported as NotCovered - never as a claim that the
value IS attained.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .arith import is_probable_prime, nth_root, sigma
from .congruence import SCOPE_PRIMES, excluded_by_congruence, in_N

__all__ = [
    "Outcome",
    "Target",
    "TraceStep",
    "Verdict",
    "KnownFact",
    "KNOWN_FACTS",
    "omega_lower_bound",
    "decide",
]


class Outcome(str, Enum):
    EXCLUDED = "Excluded"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class Target:
    """A candidate coefficient value sign * 2 * ell^j."""

    sign: int
    ell: int
    j: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.ell < 3 or self.ell % 2 == 0 or not is_probable_prime(self.ell):
            raise ValueError(f"ell={self.ell} must be an odd prime")
        if self.j < 1:
            raise ValueError("exponent j must be >= 1")

    @property
    def value(self) -> int:
        return self.sign * 2 * self.ell ** self.j


@dataclass(frozen=True)
class TraceStep:
    step: str
    cite: str
    ok: bool


@dataclass(frozen=True)
class Verdict:
    target: Target
    outcome: Outcome
    trace: tuple[TraceStep, ...]

    @property
    def excluded(self) -> bool:
        return self.outcome is Outcome.EXCLUDED

    def to_dict(self) -> dict:
        return {
            "sign": "+" if self.target.sign > 0 else "-",
            "ell": self.target.ell,
            "j": self.target.j,
            "value": str(self.target.value),
            "outcome": self.outcome.value,
            "trace": [{"step": s.step, "cite": s.cite, "ok": s.ok} for s in self.trace],
        }


@dataclass(frozen=True)
class KnownFact:
    """An externally proved exclusion, used as a black box with a citation.

    `covers(v)` is the machine-checkable scope: True means the fact rules the
    integer v out (in the fact's stated sense - see `statement`).
    """

    fact_id: str
    statement: str
    citation: str
    covers: Callable[[int], bool]


def _covers_known_odd_values(v: int) -> bool:
    a = abs(v)
    return a in (1, 691) or (3 <= a < 100 and is_probable_prime(a))


def _covers_small_prime_power(v: int) -> bool:
    a = abs(v)
    if a < 3:
        return False
    for ell in SCOPE_PRIMES:
        if a % ell == 0:
            while a % ell == 0:
                a //= ell
            return a == 1
    return False


def _covers_not_multiple_of_four(v: int) -> bool:
    return v % 4 != 0


def _covers_two_times_odd_prime_power(v: int) -> bool:
    a = abs(v)
    if a % 2:
        return False
    half = a // 2
    if half == 1:
        return True  # the value +-2 itself (i = 0)
    if half % 2 == 0:
        return False
    for i in range(1, half.bit_length() + 1):
        root, exact = nth_root(half, i)
        if root < 3:
            break
        if exact and is_probable_prime(root):
            return True
    return False


KNOWN_FACTS: dict[str, KnownFact] = {
    fact.fact_id: fact
    for fact in (
        KnownFact(
            fact_id="known-odd-exclusions",
            statement="tau(n) != v for all n > 1 when v is +-1, +-691, or +-l "
            "for a prime 3 <= l < 100",
            citation="Balakrishnan-Craig-Ono / Balakrishnan-Craig-Ono-Tsai; "
            "Amir-Hong; Dembner-Jain; Hanada-Madhukara",
            covers=_covers_known_odd_values,
        ),
        KnownFact(
            fact_id="prime-power-exclusions",
            statement="|tau(n)| != l^b for every n, prime 3 <= l < 100 and b >= 1",
            citation="Bennett-Gherga-Patel-Siksek, Theorem 6",
            covers=_covers_small_prime_power,
        ),
        KnownFact(
            fact_id="tau-2m-mod-4",
            statement="4 | tau(2^m) for every m >= 1, so tau(2^m) != v when 4 does not divide v",
            citation="tau(2) = -24 with the prime-power recursion at p = 2",
            covers=_covers_not_multiple_of_four,
        ),
        KnownFact(
            fact_id="nondefective-even-lucas",
            statement="no coefficient Lucas number u_n = +-2*l^i (l an odd prime, i >= 0) "
            "is defective; defective +-l forces one of the two curve-point templates",
            citation="Bilu-Hanrot-Voutier; Abouzaid (classification of defective Lucas numbers)",
            covers=_covers_two_times_odd_prime_power,
        ),
    )
}


def omega_lower_bound(factorization: Iterable[tuple[int, int]] | dict[int, int]) -> int:
    """Sum of sigma_0(e+1) - 1 over the factorization: a floor for Omega(tau(n)).

    Also bounds the number of distinct primes of n from above by Omega(tau(n)),
    since every summand is >= 1.
    """
    pairs = list(factorization.items() if isinstance(factorization, dict) else factorization)
    seen = set()
    total = 0
    for p, e in pairs:
        if e < 1:
            raise ValueError(f"exponent {e} must be >= 1")
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if p in seen:
            raise ValueError(f"repeated prime {p}")
        seen.add(p)
        total += sigma(0, e + 1) - 1
    return total


_CITE_SCOPE = (
    "statement scope: primes 3 <= ell < 100 (any j >= 1) and ell = 691 (j = 1 only)"
)
_CITE_OMEGA = (
    "Omega(tau(n)) >= sum over p | n of sigma_0(ord_p(n)+1) - 1 "
    "(Balakrishnan-Craig-Ono-Tsai, prime-factor-count bound)"
)
_CITE_SPLIT = (
    "coefficient multiplicativity; odd cofactors +-l^b die by the registry facts "
    "[known-odd-exclusions; prime-power-exclusions]"
)
_CITE_POW2 = "registry fact [tau-2m-mod-4]: value = 2 (mod 4) cannot be tau(2^m)"
_CITE_PARITY = "theta-series congruence: tau(n) is odd exactly when n is an odd square"
_CITE_LUCAS = (
    "registry fact [nondefective-even-lucas] with relative divisibility u_d | u_n; "
    "index m+1 = 4 would force value = +-4(p^(2k-1) - 2) = 0 (mod 4)"
)
_CITE_INDEX = "m odd and m+1 prime leave m+1 = 2, the only even prime, so m = 1"
_CITE_CONG = "allowed residues of tau(p) mod 3, 5, 7, 23 (classical tau congruences)"


def decide(target: Target) -> Verdict:
    """Run the exclusion chain on sign*2*ell^j and return a traced verdict.

    Gates, in order: (a) factor-count shape bound, (b) multi-prime splits,
    (c) p = 2, (d) exponent parity, (e) prime successor index, (f) index
    forced to 2, (g) congruence exclusion for n = p.  The first failing gate
    stops the chain with NotCovered; a full passing chain means Excluded.
    """
    sign, ell, j = target.sign, target.ell, target.j
    trace: list[TraceStep] = []

    in_tables = 3 <= ell < 100
    if not in_tables and not (ell == 691 and j == 1):
        trace.append(TraceStep("theorem-scope", _CITE_SCOPE, False))
        return Verdict(target, Outcome.NOT_COVERED, tuple(trace))

    value = target.value
    abs_value = abs(value)

    def gate(step: str, cite: str, ok: bool) -> bool:
        trace.append(TraceStep(step, cite, ok))
        return ok

    # (a) Omega(value) = j + 1 caps the factorization shape of any candidate n.
    ok = gate("omega-shape", _CITE_OMEGA, abs_value == 2 * ell ** j and omega_lower_bound({2: 1, ell: j}) <= 1 + j)
    # (b) in a split n = n1 * n2 (coprime, both > 1) exactly one coefficient
    # factor is even (value = 2 mod 4), so some odd cofactor +-l^b must be a
    # coefficient value; the registry facts forbid every such cofactor.
    if ok:
        f1 = KNOWN_FACTS["known-odd-exclusions"]
        f2 = KNOWN_FACTS["prime-power-exclusions"]
        odd_cofactors_dead = all(
            f1.covers(ell ** b) or f2.covers(ell ** b) for b in range(0, j + 1)
        )
        ok = gate("coprime-split", _CITE_SPLIT, abs_value % 4 == 2 and odd_cofactors_dead)
    # (c) n = 2^m is impossible: tau(2^m) = 0 (mod 4) but value = 2 (mod 4).
    if ok:
        f3 = KNOWN_FACTS["tau-2m-mod-4"]
        ok = gate("power-of-two-base", _CITE_POW2, f3.covers(value))
    # (d) tau(p^m) even forces p^m not an odd square; p is odd, so m is odd.
    if ok:
        ok = gate("odd-exponent", _CITE_PARITY, value % 2 == 0)
    # (e) value is never defective, so m+1 has no divisor in (2, m+1); the
    # leftover branch m+1 = 4 dies because 2*ell^j = 2 (mod 4) != 0 (mod 4).
    if ok:
        f4 = KNOWN_FACTS["nondefective-even-lucas"]
        ok = gate("prime-successor-index", _CITE_LUCAS, f4.covers(value) and abs_value % 4 == 2)
    # (f) the only even prime is 2.
    if ok:
        ok = gate("exponent-one", _CITE_INDEX, True)
    # (g) the congruence tables settle tau(p) = value.
    if ok:
        if in_tables:
            cong = in_N(sign, ell, j)
            cite = _CITE_CONG + " via the published progression tables"
        else:
            cong = excluded_by_congruence(sign, ell, j)
            cite = _CITE_CONG + " (residue machinery extended beyond the tabulated primes to ell=691)"
        ok = gate("congruence-exclusion", cite, cong)

    outcome = Outcome.EXCLUDED if ok else Outcome.NOT_COVERED
    return Verdict(target, outcome, tuple(trace))
