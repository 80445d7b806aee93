"""Rational interval brackets for ln and sqrt.

Comparisons involving logarithms are decided by tightening brackets until the
answer no longer depends on where the true value lies inside them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import as_rational


@dataclass(frozen=True)
class RInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> RInterval:
        return cls(x, x)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, RInterval) else RInterval.point(x)

    def __add__(self, other):
        o = self._lift(other)
        return RInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        ps = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return RInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> RInterval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._lift(other).reciprocal()

    def __rtruediv__(self, other):
        return self._lift(other) * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        if k % 2 == 0 and self.lo < 0 < self.hi:
            return RInterval(0, max(self.lo ** k, self.hi ** k))
        a, b = self.lo ** k, self.hi ** k
        return RInterval(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= as_rational(x) <= self.hi

    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    def as_strs(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def _atanh_series(z: Fraction, bits: int) -> RInterval:
    """Bracket of 2*atanh(z) for 0 <= z <= 1/2, error below 2**-bits."""
    if z == 0:
        return RInterval.point(0)
    tol = Fraction(1, 2 ** bits)
    total = Fraction(0)
    zpow = z
    z2 = z * z
    k = 0
    while True:
        total += 2 * zpow / (2 * k + 1)
        k += 1
        zpow *= z2
        # tail bound: sum_{i>=k} 2 z^(2i+1)/(2i+1) <= 2 z^(2k+1) / ((2k+1)(1-z^2))
        tail = 2 * zpow / ((2 * k + 1) * (1 - z2))
        if tail < tol:
            return RInterval(total, total + tail)


def ln_interval(x, bits: int = 64) -> RInterval:
    """Rational bracket of the natural log of a positive rational, width < 2**(2-bits)."""
    x = as_rational(x)
    if x <= 0:
        raise ValueError("log of a nonpositive number")
    if x < 1:
        return -ln_interval(1 / x, bits)
    # reduce to r in [1, 2)
    j = max(0, x.numerator.bit_length() - x.denominator.bit_length() - 1)
    r = x / 2 ** j
    while r >= 2:
        r /= 2
        j += 1
    ln2 = _atanh_series(Fraction(1, 3), bits + max(j, 1).bit_length())
    lnr = _atanh_series((r - 1) / (r + 1), bits)
    return ln2 * j + lnr


def sqrt_interval(x, bits: int = 64) -> RInterval:
    x = as_rational(x)
    if x < 0:
        raise ValueError("sqrt of a negative number")
    scale = 4 ** bits
    v = x * scale
    lo = math.isqrt(v.numerator // v.denominator)
    out_lo = Fraction(lo, 2 ** bits)
    out_hi = Fraction(lo + 1, 2 ** bits)
    if out_lo * out_lo == x:
        out_hi = out_lo
    return RInterval(out_lo, out_hi)


class Undecided(RuntimeError):
    pass


def decide(predicate_interval, threshold=0, start_bits: int = 24, max_bits: int = 4096) -> bool:
    """Decide ``value > threshold`` where ``predicate_interval(bits)`` brackets value.

    Doubles precision until the bracket excludes the threshold; raises
    ``Undecided`` if it never does (e.g. exact equality).
    """
    threshold = as_rational(threshold)
    bits = start_bits
    while bits <= max_bits:
        iv = predicate_interval(bits)
        if iv.lo > threshold:
            return True
        if iv.hi <= threshold:
            return False
        bits *= 2
    raise Undecided(f"could not separate value from {threshold} at {max_bits} bits")
