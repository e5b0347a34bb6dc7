"""Coefficients of the discriminant cusp form.

The generating identity is the weight-12 product

    sum_n tau(n) q^n = q * prod_{k>=1} (1 - q^k)^24,

so the table builder expands the Euler-product factor as the pentagonal-number
series eta(q) = sum_{k in Z} (-1)^k q^{k(3k+1)/2} (a polynomial with O(sqrt(N))
terms once truncated), raises it to the 24th power by 24 sparse-by-dense
convolution passes, and shifts by one power of q.

Each pass is executed on a packed representation: the dense coefficient row is
split into nonnegative/negative parts and serialized into two big integers
with a fixed slot width chosen per pass from the current coefficient
magnitudes, so a convolution pass becomes a handful of shifted big-integer
additions.  Slot width always covers the worst-case growth of the pass, which
keeps the arithmetic exact; a plain per-coefficient variant of the same pass
is retained for cross-validation at small bounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Callable

from .arith import is_probable_prime, sigma

__all__ = [
    "TauTable",
    "TableFormatError",
    "TableRangeError",
    "compute_tau_table",
    "tau_prime_power",
    "tau_from_factorization",
    "load_tau_table",
    "save_tau_table",
    "sigma",
]

_ETA_POWER = 24

_TABLE_HEADER = re.compile(r"^#tau-table v1 max=(\d+)$")


class TableFormatError(ValueError):
    """A persisted tau table failed header or record validation."""


class TableRangeError(LookupError):
    """A requested index (or required prime power) is outside the table."""


@dataclass(frozen=True)
class TauTable:
    """Dense table of tau(1..max_n).

    `values[i]` holds tau(i+1); use `table[n]` for the 1-based mathematical
    indexing.  Instances are immutable and safe to share between threads.
    """

    max_n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if len(self.values) != self.max_n:
            raise ValueError(f"expected {self.max_n} values, got {len(self.values)}")
        if self.values[0] != 1:
            raise ValueError("tau(1) must be 1; table is corrupt")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise TableRangeError(f"n={n} outside table range 1..{self.max_n}")
        return self.values[n - 1]


def eta_terms(limit: int) -> list[tuple[int, int]]:
    """Pentagonal exponents g = k(3k+1)/2 <= limit for k in Z, with signs (-1)^k."""
    terms = [(0, 1)]
    k = 1
    while True:
        sign = 1 if k % 2 == 0 else -1
        g_neg = k * (3 * k - 1) // 2  # index -k
        g_pos = k * (3 * k + 1) // 2
        if g_neg > limit:
            break
        terms.append((g_neg, sign))
        if g_pos <= limit:
            terms.append((g_pos, sign))
        k += 1
    return terms


def _convolve_eta_plain(dense: list[int], terms: list[tuple[int, int]]) -> list[int]:
    """One sparse-by-dense pass, one coefficient at a time (small-N reference)."""
    n = len(dense)
    out = [0] * n
    for g, s in terms:
        if s > 0:
            for i in range(g, n):
                out[i] += dense[i - g]
        else:
            for i in range(g, n):
                out[i] -= dense[i - g]
    return out


def _convolve_eta_packed(dense: list[int], terms: list[tuple[int, int]]) -> list[int]:
    """One sparse-by-dense pass on packed big integers.

    The slot width is recomputed from the incoming coefficients, with headroom
    for the full fan-in of the pass, so slots can never collide: the result is
    exact for arbitrary coefficient growth.
    """
    n = len(dense)
    fan_in_bits = max(1, (len(terms) - 1).bit_length())
    max_mag = max(abs(c) for c in dense)
    slot_bytes = (max_mag.bit_length() + fan_in_bits + 2 + 7) // 8
    slot_bits = slot_bytes * 8

    pos_buf = bytearray(n * slot_bytes)
    neg_buf = bytearray(n * slot_bytes)
    for i, c in enumerate(dense):
        if c > 0:
            pos_buf[i * slot_bytes:(i + 1) * slot_bytes] = c.to_bytes(slot_bytes, "little")
        elif c < 0:
            neg_buf[i * slot_bytes:(i + 1) * slot_bytes] = (-c).to_bytes(slot_bytes, "little")
    pos = int.from_bytes(bytes(pos_buf), "little")
    neg = int.from_bytes(bytes(neg_buf), "little")

    acc_pos = 0
    acc_neg = 0
    for g, s in terms:
        shift = g * slot_bits
        if s > 0:
            acc_pos += pos << shift
            acc_neg += neg << shift
        else:
            acc_pos += neg << shift
            acc_neg += pos << shift

    # shifted copies run past slot n; keep the headroom and read only n slots
    total = (2 * n + 2) * slot_bytes
    raw_pos = acc_pos.to_bytes(total, "little")
    raw_neg = acc_neg.to_bytes(total, "little")
    out = [0] * n
    limit = 1 << (slot_bits - 1)
    for i in range(n):
        o = i * slot_bytes
        c = int.from_bytes(raw_pos[o:o + slot_bytes], "little") - int.from_bytes(
            raw_neg[o:o + slot_bytes], "little"
        )
        assert -limit < c < limit  # slot sizing above makes overflow impossible
        out[i] = c
    return out


def compute_tau_table(
    max_n: int,
    method: str = "packed",
    progress: Callable[[int, int], None] | None = None,
) -> TauTable:
    """Expand the 24th power of the pentagonal series up to q^max_n.

    `method` selects the convolution carrier: "packed" (default) or "plain",
    the latter being the direct per-coefficient loop used to cross-validate
    the packed arithmetic at small bounds.  `progress`, when given, is called
    as progress(completed_passes, total_passes).
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if method not in ("packed", "plain"):
        raise ValueError(f"unknown method {method!r}")
    convolve = _convolve_eta_packed if method == "packed" else _convolve_eta_plain

    terms = eta_terms(max_n - 1)
    dense = [0] * max_n
    dense[0] = 1
    for i in range(_ETA_POWER):
        dense = convolve(dense, terms)
        if progress is not None:
            progress(i + 1, _ETA_POWER)
    # multiply by q: coefficient of q^n in Delta is dense[n-1]
    return TauTable(max_n=max_n, values=tuple(dense))


def tau_prime_power(tau_p: int, p: int, m: int, weight_2k: int = 12) -> int:
    """Coefficient at p^m from the coefficient at p via the two-term recursion

        a(p^m) = a(p) a(p^(m-1)) - p^(2k-1) a(p^(m-2)),   a(1) = 1.
    """
    if m < 0:
        raise ValueError("exponent m must be >= 0")
    if weight_2k < 4 or weight_2k % 2:
        raise ValueError("weight must be an even integer >= 4")
    if not is_probable_prime(p):
        raise ValueError(f"p={p} is not prime")
    q = p ** (weight_2k - 1)
    if tau_p * tau_p > 4 * q:
        raise ValueError(f"|a(p)|={abs(tau_p)} violates the coefficient bound 2*p^{weight_2k - 1}/2")
    if m == 0:
        return 1
    prev, cur = 1, tau_p
    for _ in range(m - 1):
        prev, cur = cur, tau_p * cur - q * prev
    return cur


def tau_from_factorization(table: TauTable, n: int, factors: dict[int, int] | None = None) -> int:
    """tau(n) as the product of table entries at the prime powers dividing n.

    Independent of table[n] itself, so it doubles as a multiplicativity
    oracle.  `factors` may supply a precomputed factorization of n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    if factors is None:
        factors = _trial_factor(n)
    result = 1
    for p, e in factors.items():
        pe = p ** e
        if pe > table.max_n:
            raise TableRangeError(f"prime power {p}^{e} exceeds table bound {table.max_n}")
        result *= table[pe]
    return result


def _trial_factor(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors[p] = e
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def save_tau_table(table: TauTable, path: str | Path) -> None:
    """Persist as `#tau-table v1 max=<N>` followed by `<n>\\t<tau(n)>` records."""
    lines = [f"#tau-table v1 max={table.max_n}"]
    lines.extend(f"{n}\t{v}" for n, v in enumerate(table.values, start=1))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def load_tau_table(path: str | Path) -> TauTable:
    """Load and validate a persisted table; inconsistent files are rejected."""
    text = Path(path).read_text(encoding="utf-8")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise TableFormatError("empty table file")
    m = _TABLE_HEADER.match(lines[0])
    if not m:
        raise TableFormatError(f"bad header line: {lines[0]!r}")
    max_n = int(m.group(1))
    if max_n < 1:
        raise TableFormatError("header max must be >= 1")
    if len(lines) - 1 != max_n:
        raise TableFormatError(f"header promises {max_n} records, file has {len(lines) - 1}")
    values = []
    for expected_n, line in enumerate(lines[1:], start=1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise TableFormatError(f"record {expected_n}: expected '<n>\\t<value>', got {line!r}")
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise TableFormatError(f"record {expected_n}: non-integer field") from exc
        if n != expected_n:
            raise TableFormatError(f"record {expected_n}: out-of-order index {n}")
        values.append(v)
    try:
        return TauTable(max_n=max_n, values=tuple(values))
    except ValueError as exc:
        raise TableFormatError(str(exc)) from exc


def coprime_splittings(n: int) -> list[tuple[int, int]]:
    """All (n1, n2) with n = n1*n2, gcd(n1,n2)=1, n1 <= n2; used by consistency scans."""
    splits = []
    d = 1
    while d * d <= n:
        if n % d == 0 and gcd(d, n // d) == 1:
            splits.append((d, n // d))
        d += 1
    return splits
