"""Integer-point scans on the three curve families behind defective +-l terms.

A defective value +-l in a coefficient Lucas sequence forces an integer point
with prime X on Y^2 = X^e + 3, Y^2 = X^e - 3 or Y^2 = 2X^e - 1 (e = 2k-1).
These scans are desk-scale searches: an empty result certifies "no points up
to the bound", never "no points".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .arith import primes_up_to

__all__ = ["CurveForm", "CurveSpec", "scan_prime_points"]


class CurveForm(str, Enum):
    X_POW_PLUS_3 = "x^e+3"        # Y^2 = X^e + 3
    X_POW_MINUS_3 = "x^e-3"       # Y^2 = X^e - 3
    TWO_X_POW_MINUS_1 = "2x^e-1"  # Y^2 = 2*X^e - 1


@dataclass(frozen=True)
class CurveSpec:
    form: CurveForm
    exponent: int

    def __post_init__(self):
        if self.exponent < 3 or self.exponent % 2 == 0:
            raise ValueError("exponent must be odd and >= 3")
        if not isinstance(self.form, CurveForm):
            object.__setattr__(self, "form", CurveForm(self.form))

    def rhs(self, x: int) -> int:
        if self.form is CurveForm.X_POW_PLUS_3:
            return x ** self.exponent + 3
        if self.form is CurveForm.X_POW_MINUS_3:
            return x ** self.exponent - 3
        return 2 * x ** self.exponent - 1


def scan_prime_points(
    spec: CurveSpec, x_bound: int, include_composite_x: bool = False
) -> list[tuple[int, int]]:
    """All (X, Y) with prime 2 <= X <= x_bound and rhs(X) a perfect square.

    Y is reported nonnegative; negative right-hand sides are skipped (only
    possible below X=2).  `include_composite_x` widens the scan to every
    integer X >= 2 for exploratory use.
    """
    if x_bound < 2:
        raise ValueError("x_bound must be >= 2")
    xs = range(2, x_bound + 1) if include_composite_x else primes_up_to(x_bound)
    points = []
    for x in xs:
        r = spec.rhs(x)
        if r < 0:
            continue
        y = isqrt(r)
        if y * y == r:
            points.append((x, y))
    return points
