"""Exact truncated hypergeometric series over Q and over Q(i)/Q(omega).

All sums are evaluated term-by-term through the multiplicative recurrence
t_{k+1} = t_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1); a from-scratch
evaluator built on Pochhammer symbols is retained as an internal oracle.
On top of the generic evaluator sit the concrete sums and identity instances
the verifier checks: Kilbourn's 4F3, the Van Hamme 6F5(-1), Whipple's
terminating 6F5 with its fully rational closed form, Bailey's 4F3
transformation specialized at cube-root-of-unity parameters, and the
fourth-root specialization whose two sides collapse to plain rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exact import CycloRational, Root, pochhammer, pochhammer_cyclo

Scalar = Union[Fraction, CycloRational]


class ZeroDenominatorPochhammer(ArithmeticError):
    """A bottom-parameter Pochhammer symbol vanished inside the truncation range."""

    def __init__(self, term_index: int, param_index: int):
        self.term_index = term_index
        self.param_index = param_index
        super().__init__(
            f"bottom parameter #{param_index} has a vanishing Pochhammer factor "
            f"at term {term_index}"
        )


class PoleParameter(ValueError):
    """Identity-check inputs sit on a pole of one of the two sides."""


class NonRealResult(ArithmeticError):
    """A provably real cyclotomic value came out with nonzero im-part (implementation bug)."""


@dataclass(frozen=True)
class SeriesSpec:
    """A truncated pFq: top/bottom parameter lists, argument, and truncation index.

    ``terms`` is the truncation index n: the sum runs over k = 0..n inclusive.
    Scalars must all live in one field: plain rationals, or rationals mixed
    with cyclotomic elements of a single tag.
    """

    top: tuple[Scalar, ...]
    bottom: tuple[Scalar, ...]
    argument: Fraction
    terms: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(_as_scalar(a) for a in self.top))
        object.__setattr__(self, "bottom", tuple(_as_scalar(b) for b in self.bottom))
        object.__setattr__(self, "argument", Fraction(self.argument))
        if self.terms < 0:
            raise ValueError("truncation index must be >= 0")
        self.field_tag()  # reject mixed tags eagerly

    def field_tag(self) -> Optional[Root]:
        tags = {s.root for s in self.top + self.bottom if isinstance(s, CycloRational)}
        if len(tags) > 1:
            raise ValueError("top/bottom parameters mix distinct cyclotomic tags")
        return tags.pop() if tags else None


def _as_scalar(x) -> Scalar:
    if isinstance(x, CycloRational):
        return x
    return Fraction(x)


def pfq_truncated(spec: SeriesSpec) -> Scalar:
    """Exact sum_{k=0}^{n} prod(top_i)_k / (prod(bottom_j)_k * k!) * z^k."""
    tag = spec.field_tag()
    if tag is None:
        one: Scalar = Fraction(1)
        lift = Fraction
    else:
        one = CycloRational(Fraction(1), Fraction(0), tag)
        lift = lambda s: s if isinstance(s, CycloRational) else CycloRational(s, Fraction(0), tag)
    top = [lift(a) for a in spec.top]
    bottom = [lift(b) for b in spec.bottom]
    z = lift(spec.argument)

    total = one
    term = one
    for k in range(spec.terms):
        for j, b in enumerate(bottom):
            if not b + k:
                raise ZeroDenominatorPochhammer(k + 1, j)
        num = one
        for a in top:
            num = num * (a + k)
        den = one
        for b in bottom:
            den = den * (b + k)
        term = term * num / den * z / (k + 1)
        total = total + term
    return total


def pfq_truncated_reference(spec: SeriesSpec) -> Scalar:
    """From-scratch evaluation via Pochhammer symbols; the slow oracle for pfq_truncated."""
    tag = spec.field_tag()
    if tag is None:
        one: Scalar = Fraction(1)
        rising = pochhammer
        lift = Fraction
    else:
        one = CycloRational(Fraction(1), Fraction(0), tag)
        rising = pochhammer_cyclo
        lift = lambda s: s if isinstance(s, CycloRational) else CycloRational(s, Fraction(0), tag)
    z = lift(spec.argument)
    total = one - one
    for k in range(spec.terms + 1):
        num = one
        for a in spec.top:
            num = num * rising(lift(a), k)
        den = one * math.factorial(k)
        for j, b in enumerate(spec.bottom):
            factor = rising(lift(b), k)
            if not factor:
                raise ZeroDenominatorPochhammer(k, j)
            den = den * factor
        total = total + num / den * z**k
    return total


# --- the concrete truncated sums -------------------------------------------

F = Fraction


def kilbourn_lhs(p: int) -> Fraction:
    """4F3[1/2,1/2,1/2,1/2; 1,1,1; 1] truncated at (p-1)/2: congruent to a(p) mod p^3."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    half = (p - 1) // 2
    return pfq_truncated(SeriesSpec((F(1, 2),) * 4, (F(1),) * 3, F(1), half))


def thm1_rhs(p: int) -> Fraction:
    """p * 4F3[1/2,1/2,1/2,1/2; 1,3/4,5/4; 1] truncated at (p-1)/2, exact in Q.

    Individual terms can have valuation -1 through the (5/4)_k bottom factor;
    the p-multiplied full sum is p-integral for p >= 5.
    """
    if p < 5:
        raise ValueError("requires p >= 5")
    half = (p - 1) // 2
    return p * pfq_truncated(
        SeriesSpec((F(1, 2),) * 4, (F(1), F(3, 4), F(5, 4)), F(1), half)
    )


def vanhamme_lhs(p: int) -> Fraction:
    """6F5[5/4,1/2,1/2,1/2,1/2,1/2; 1/4,1,1,1,1; -1] truncated at (p-1)/2."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    half = (p - 1) // 2
    return pfq_truncated(
        SeriesSpec((F(5, 4),) + (F(1, 2),) * 5, (F(1, 4),) + (F(1),) * 4, F(-1), half)
    )


# --- identity instances ------------------------------------------------------


@dataclass(frozen=True)
class IdentityOutcome:
    """Both exact sides of an identity check, so failures are diagnosable."""

    lhs: Scalar
    rhs: Scalar
    equal: bool


def whipple_c1_check(n: int, y) -> IdentityOutcome:
    """Terminating Whipple 6F5(-1) at parameter x = 2n + 3/2 against its rational closed form.

    lhs = 6F5[5/4, 1/2, -2n-1, 2n+2, 1/2+y, 1/2-y;
              1/4, 2n+5/2, -2n-1/2, 1-y, 1+y; -1]   (terminates at k = 2n+1)
    rhs = -(4n+3) (y/2)_{n+1} (y/2-n)_{n+1} / ((y-1)/2 - n)_{2n+2}
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    y = F(y)
    bottom = (F(1, 4), 2 * n + F(5, 2), -2 * n - F(1, 2), 1 - y, 1 + y)
    for j, b in enumerate(bottom):
        for t in range(2 * n + 1):
            if b + t == 0:
                raise PoleParameter(f"bottom parameter {b} hits zero at offset {t}")
    rhs_den = pochhammer((y - 1) / 2 - n, 2 * n + 2)
    if rhs_den == 0:
        raise PoleParameter(f"((y-1)/2 - n)_(2n+2) vanishes for y = {y}, n = {n}")

    top = (F(5, 4), F(1, 2), F(-2 * n - 1), F(2 * n + 2), F(1, 2) + y, F(1, 2) - y)
    lhs = pfq_truncated(SeriesSpec(top, bottom, F(-1), 2 * n + 1))
    rhs = -(4 * n + 3) * pochhammer(y / 2, n + 1) * pochhammer(y / 2 - n, n + 1) / rhs_den
    return IdentityOutcome(lhs, rhs, lhs == rhs)


def bailey_b1_check(p: int, corrected: bool = True) -> IdentityOutcome:
    """Bailey's 4F3(1) transformation specialized at a = 1/2, b = (1 - wp)/2 in Q(omega).

    lhs = 4F3[1/2, (1-wp)/2, (1-w^2 p)/2, (1-p)/2;
              1 + wp/2, 1 + w^2 p/2, 1 + p/2; 1]      (terminates at (p-1)/2)
    rhs = p (1/2)_m ((1-p)/2)_m / [(1+wp/2)_m (1+w^2 p/2)_m]
          * 4F3[1/2, (1-wp)/2, (1-w^2 p)/2, (1-p)/2; 1, 3/4, 5/4; 1]_m

    ``corrected=False`` swaps the rhs second top parameter for (1-w)/2, the
    other candidate reading; only the corrected one gives exact equality.
    """
    if p % 2 == 0 or p < 3:
        raise ValueError("p must be an odd prime")
    m = (p - 1) // 2
    w = CycloRational.zeta(Root.OMEGA)
    w2 = w * w
    one = CycloRational(F(1), F(0), Root.OMEGA)

    b_param = (one - w * p) / 2
    c_param = (one - w2 * p) / 2
    lhs_top = (F(1, 2), b_param, c_param, F(1 - p, 2))
    lhs_bottom = (one + w * p / 2, one + w2 * p / 2, 1 + F(p, 2))
    lhs = pfq_truncated(SeriesSpec(lhs_top, lhs_bottom, F(1), m))

    prefactor = (
        p
        * pochhammer(F(1, 2), m)
        * pochhammer(F(1 - p, 2), m)
        / (pochhammer_cyclo(one + w * p / 2, m) * pochhammer_cyclo(one + w2 * p / 2, m))
    )
    second_top = b_param if corrected else (one - w) / 2
    rhs_top = (F(1, 2), second_top, c_param, F(1 - p, 2))
    rhs_series = pfq_truncated(SeriesSpec(rhs_top, (F(1), F(3, 4), F(5, 4)), F(1), m))
    rhs = prefactor * rhs_series
    return IdentityOutcome(lhs, rhs, lhs == rhs)


def c3_rhs_closed(p: int) -> Fraction:
    """The closed form -p (-ip/4)_{(p+1)/4} ((3-(i+1)p)/4)_{(p+1)/4} / ((1-(i+1)p)/4)_{(p+1)/2}.

    Computed in Q(i); the conjugate pairing makes the im-part vanish exactly,
    so the value is returned as a plain rational.
    """
    if p % 4 != 3 or p < 7:
        raise ValueError("requires a prime p = 3 (mod 4), p >= 7")
    i = CycloRational.zeta(Root.I)
    one = CycloRational(F(1), F(0), Root.I)
    q = (p + 1) // 4
    num = pochhammer_cyclo(-i * p / 4, q) * pochhammer_cyclo((3 * one - (i + 1) * p) / 4, q)
    den = pochhammer_cyclo((one - (i + 1) * p) / 4, 2 * q)
    value = -p * num / den
    try:
        return value.as_rational()
    except ValueError as exc:
        raise NonRealResult(str(exc)) from None


def c3_check(p: int) -> IdentityOutcome:
    """The fourth-root specialization of the Whipple closed form, at n=(p-3)/4, y=-ip/2.

    Both sides live in Q(i) with conjugate-paired parameters and are provably
    rational; NonRealResult flags an implementation bug, never bad input.
    """
    if p % 4 != 3 or p < 7:
        raise ValueError("requires a prime p = 3 (mod 4), p >= 7")
    i = CycloRational.zeta(Root.I)
    one = CycloRational(F(1), F(0), Root.I)
    top = (
        F(5, 4),
        F(1, 2),
        F(1 - p, 2),
        F(1 + p, 2),
        (one - i * p) / 2,
        (one + i * p) / 2,
    )
    bottom = (F(1, 4), 1 - F(p, 2), 1 + F(p, 2), one - i * p / 2, one + i * p / 2)
    lhs_c = pfq_truncated(SeriesSpec(top, bottom, F(-1), (p - 1) // 2))
    try:
        lhs = lhs_c.as_rational()
    except ValueError as exc:
        raise NonRealResult(str(exc)) from None
    rhs = c3_rhs_closed(p)
    return IdentityOutcome(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class FloatOutcome:
    partial: float
    target: float
    abs_err: float


def ramanujan_float_check(terms: int) -> FloatOutcome:
    """Double-precision partial sum of the full 6F5(-1) against 2/Gamma(3/4)^4.

    The series is sum_k (-1)^k (4k+1) ((1/2)_k / k!)^5; terms decay like
    k^(-3/2), so 10^4 terms reach ~1e-7.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    partial = 0.0
    c = 1.0  # ((1/2)_k / k!)^5
    for k in range(terms):
        partial += (-1) ** k * (4 * k + 1) * c
        c *= ((k + 0.5) / (k + 1)) ** 5
    target = 2 / math.gamma(0.75) ** 4
    return FloatOutcome(partial, target, abs(partial - target))
