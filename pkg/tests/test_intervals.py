import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from andor.intervals import RInterval, Undecided, decide, ln_interval, sqrt_interval


@given(st.fractions(min_value=Fraction(1, 1000), max_value=10 ** 6))
def test_ln_brackets_math_log(x):
    iv = ln_interval(x, 60)
    v = math.log(x)
    assert float(iv.lo) - 1e-12 <= v <= float(iv.hi) + 1e-12
    assert iv.width < Fraction(1, 2 ** 56)


def test_ln_exact_at_one():
    iv = ln_interval(1)
    assert iv.lo == iv.hi == 0


def test_ln16_bracket():
    iv = ln_interval(16)
    assert Fraction(27725, 10000) < iv.lo and iv.hi < Fraction(27727, 10000)


@given(st.fractions(min_value=0, max_value=10 ** 4))
def test_sqrt_bracket(x):
    iv = sqrt_interval(x, 40)
    assert iv.lo ** 2 <= x <= iv.hi ** 2


def test_sqrt_exact_square():
    assert sqrt_interval(Fraction(9, 4)).lo == sqrt_interval(Fraction(9, 4)).hi == Fraction(3, 2)


def test_interval_arithmetic():
    a = RInterval(1, 2)
    b = RInterval(-1, 3)
    assert (a * b) == RInterval(-2, 6)
    assert (a - b) == RInterval(-2, 3)
    assert RInterval(-1, 2) ** 2 == RInterval(0, 4)
    with pytest.raises(ZeroDivisionError):
        a / b


def test_decide():
    assert decide(lambda bits: ln_interval(3, bits), 1)
    assert not decide(lambda bits: ln_interval(2, bits), 1)
    assert not decide(lambda bits: ln_interval(1, bits), 0)
    with pytest.raises(Undecided):
        decide(lambda bits: RInterval(-Fraction(1, 2 ** bits), Fraction(1, 2 ** bits)), 0, max_bits=64)
