"""Exact q-expansion of the weight-4 eta product q * prod(1-q^{2n})^4 * prod(1-q^{4n})^4.

The two fractional eta powers combine to exactly q^1, so the coefficients a(n)
are plain integers with a(1) = 1 and a(n) = 0 for even n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

DEFAULT_LIMIT = 1000


class OutOfRange(ValueError):
    """A coefficient beyond the computed table bound was requested."""


@dataclass(frozen=True)
class IntSeries:
    """Dense exact-integer power series truncated at a fixed degree bound."""

    coeffs: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        bound = min(self.bound, other.bound)
        out = [0] * (bound + 1)
        for i, ci in enumerate(self.coeffs[: bound + 1]):
            if ci:
                for j, cj in enumerate(other.coeffs[: bound - i + 1]):
                    out[i + j] += ci * cj
        return IntSeries(tuple(out))

    def truncate(self, bound: int) -> "IntSeries":
        if bound >= self.bound:
            return self
        return IntSeries(self.coeffs[: bound + 1])


def eta_factor_series(m: int, e: int, bound: int) -> IntSeries:
    """prod_{n>=1} (1 - q^{mn})^e truncated at the given degree (the constant 1 if m > bound)."""
    coeffs = [0] * (bound + 1)
    coeffs[0] = 1
    # (1 - q^s)^e is sparse: apply each factor in place, descending so reads see old values
    binom = [comb(e, j) * (-1) ** j for j in range(e + 1)]
    n = 1
    while m * n <= bound:
        s = m * n
        for d in range(bound, s - 1, -1):
            acc = coeffs[d]
            for j in range(1, min(e, d // s) + 1):
                acc += binom[j] * coeffs[d - j * s]
            coeffs[d] = acc
        n += 1
    return IntSeries(tuple(coeffs))


@lru_cache(maxsize=8)
def f_coefficients(bound: int) -> tuple[int, ...]:
    """Coefficients a(0..bound) of the eta product, a(0) = 0 and a(1) = 1."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    body = eta_factor_series(2, 4, bound - 1) * eta_factor_series(4, 4, bound - 1)
    return (0,) + body.coeffs  # the leading q^1


def a_p(p: int, limit: int = DEFAULT_LIMIT) -> int:
    """a(p) looked up from the coefficient table of the given bound."""
    if p > limit:
        raise OutOfRange(f"a({p}) requested but table bound is {limit}")
    return f_coefficients(limit)[p]
