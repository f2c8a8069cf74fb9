"""Exact scalar arithmetic: rationals, residues mod p^k, quadratic cyclotomic elements.

Everything here is exact.  Rationals are ``fractions.Fraction`` (always reduced,
positive denominator), residues live in Z/p^k, and the two cyclotomic fields
Q(i) and Q(omega) are implemented with hard-coded reduction rules.  Congruence
between rationals is valuation-based: x = y (mod p^k) means vp(x - y) >= k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class NegativeValuation(ArithmeticError):
    """Raised when a residue reduction is applied to a value with p in its denominator."""


def vp(x: RationalLike, p: int) -> Union[int, float]:
    """p-adic valuation of a rational: the v with x = p**v * (a/b), p dividing neither a nor b.

    vp(0) is math.inf, so congruence tests degenerate correctly when both sides
    are equal.
    """
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def reduce_mod(x: RationalLike, p: int, k: int) -> "ResidueInt":
    """Reduce a p-integral rational into Z/p^k as num * den**-1.

    Raises NegativeValuation when p divides the denominator: a congruence is
    being applied to a non-p-integral value, which is always a caller bug here
    (individual series terms may have vp = -1; only fully summed expressions
    are reduced).
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NegativeValuation(f"{x} has negative {p}-adic valuation, cannot reduce mod {p}^{k}")
    modulus = p**k
    value = x.numerator * pow(x.denominator, -1, modulus) % modulus
    return ResidueInt(value, p, k)


def congruent(x: RationalLike, y: RationalLike, p: int, k: int) -> bool:
    """Whether x = y (mod p^k) in the valuation sense: vp(x - y) >= k."""
    return vp(Fraction(x) - Fraction(y), p) >= k


@dataclass(frozen=True)
class ResidueInt:
    """An element of Z/p^k.  Arithmetic combines only residues with matching (p, k)."""

    value: int
    p: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("precision exponent k must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def _coerce(self, other: Union["ResidueInt", int]) -> "ResidueInt":
        if isinstance(other, ResidueInt):
            if (other.p, other.k) != (self.p, self.k):
                raise ValueError(
                    f"cannot combine residues mod {self.p}^{self.k} and mod {other.p}^{other.k}"
                )
            return other
        if isinstance(other, int):
            return ResidueInt(other, self.p, self.k)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueInt(self.value + other.value, self.p, self.k)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueInt(self.value - other.value, self.p, self.k)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueInt(other.value - self.value, self.p, self.k)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueInt(self.value * other.value, self.p, self.k)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueInt(-self.value, self.p, self.k)

    def __pow__(self, exponent: int):
        return ResidueInt(pow(self.value, exponent, self.modulus), self.p, self.k)

    def inverse(self) -> "ResidueInt":
        return ResidueInt(pow(self.value, -1, self.modulus), self.p, self.k)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.p}^{self.k})"


class Root(Enum):
    """The two quadratic roots of unity in use: i (zeta^2 = -1) and omega (zeta^2 = -1 - zeta)."""

    I = "i"
    OMEGA = "omega"


_ROOT_SYMBOL = {Root.I: "i", Root.OMEGA: "w"}


@dataclass(frozen=True)
class CycloRational:
    """An element re + im*zeta of Q(i) or Q(omega), tagged by the root.

    Elements of different tags never mix; binary operations raise ValueError on
    a tag mismatch.  Plain ints and Fractions coerce into either field.
    """

    re: Fraction
    im: Fraction
    root: Root

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def zeta(root: Root) -> "CycloRational":
        """The root of unity itself: i or omega."""
        return CycloRational(Fraction(0), Fraction(1), root)

    def _coerce(self, other) -> "CycloRational":
        if isinstance(other, CycloRational):
            if other.root is not self.root:
                raise ValueError(f"cannot mix Q({self.root.value}) and Q({other.root.value})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloRational(Fraction(other), Fraction(0), self.root)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloRational(self.re + other.re, self.im + other.im, self.root)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloRational(self.re - other.re, self.im - other.im, self.root)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloRational(-self.re, -self.im, self.root)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # zeta^2 = -1 for i, zeta^2 = -1 - zeta for omega
        if self.root is Root.I:
            return CycloRational(a * c - b * d, a * d + b * c, self.root)
        return CycloRational(a * c - b * d, a * d + b * c - b * d, self.root)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        inv = other.conj() * CycloRational(Fraction(1, 1) / n, Fraction(0), self.root)
        return self * inv

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return (CycloRational(Fraction(1), Fraction(0), self.root) / self) ** (-exponent)
        out = CycloRational(Fraction(1), Fraction(0), self.root)
        for _ in range(exponent):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conj(self) -> "CycloRational":
        """Galois conjugate: i -> -i, omega -> omega^2 = -1 - omega."""
        if self.root is Root.I:
            return CycloRational(self.re, -self.im, self.root)
        return CycloRational(self.re - self.im, -self.im, self.root)

    def norm(self) -> Fraction:
        """Field norm conj(x) * x, always a plain rational."""
        prod = self * self.conj()
        assert prod.im == 0
        return prod.re

    def as_rational(self) -> Fraction:
        """The value as a Fraction; raises ValueError unless the im-part is exactly 0."""
        if self.im != 0:
            raise ValueError(f"{self} has nonzero im-part")
        return self.re

    def __str__(self) -> str:
        return f"{self.re} + {self.im}*{_ROOT_SYMBOL[self.root]}"


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.  Exact."""
    if n < 0:
        raise ValueError("pochhammer index must be >= 0")
    out = Fraction(1)
    a = Fraction(a)
    for j in range(n):
        out *= a + j
    return out


def pochhammer_cyclo(a: CycloRational, n: int) -> CycloRational:
    """Rising factorial in the tagged quadratic field."""
    if n < 0:
        raise ValueError("pochhammer index must be >= 0")
    out = CycloRational(Fraction(1), Fraction(0), a.root)
    for j in range(n):
        out = out * (a + j)
    return out


def collapsed_poch3(u: RationalLike, v: RationalLike, p: int, k: int) -> Fraction:
    """prod_{j<k} ((u+j)^3 + v^3 p^3): the rational collapse of the conjugate triple
    (u+vp)_k (u+vp*w)_k (u+vp*w^2)_k over the cube roots of unity."""
    u, v = Fraction(u), Fraction(v)
    shift = v**3 * p**3
    out = Fraction(1)
    for j in range(k):
        out *= (u + j) ** 3 + shift
    return out


def collapsed_poch4(u: RationalLike, v: RationalLike, p: int, k: int) -> Fraction:
    """prod_{j<k} ((u+j)^4 - v^4 p^4): the quartic analogue over the fourth roots of unity."""
    u, v = Fraction(u), Fraction(v)
    shift = v**4 * p**4
    out = Fraction(1)
    for j in range(k):
        out *= (u + j) ** 4 - shift
    return out


def half_harmonic2(p: int) -> Fraction:
    """sum_{j=1}^{(p-1)/2} 1/j^2, exactly.  Divisible by p for p >= 5 (Wolstenholme)."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    return sum((Fraction(1, j * j) for j in range(1, (p - 1) // 2 + 1)), Fraction(0))
