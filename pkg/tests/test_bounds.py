import math
from fractions import Fraction

import pytest

from andor.bounds import cor33_bound, prob_bound_checks, sixth_bound_holds


@pytest.mark.parametrize("m,n", [(10, 10), (10, 100), (100, 20), (50, 9)])
def test_prob_bounds_hold(m, n):
    rep = prob_bound_checks(m, n)
    assert rep["passed"]
    lo = Fraction(rep["checks"]["union_bound"]["value"]["lo"])
    assert lo <= m * (1 - 2 * math.log(m) / n) ** n + 1e-9


def test_prob_bound_preconditions():
    with pytest.raises(ValueError):
        prob_bound_checks(9, 100)
    with pytest.raises(ValueError):
        prob_bound_checks(100, 9)  # 2 ln 100 > 9


def test_sixth_boundary():
    assert sixth_bound_holds(1)
    assert (1 - Fraction(1, 6)) ** 1 == Fraction(5, 6)
    assert all(sixth_bound_holds(n) for n in range(1, 60))
    assert Fraction(2, 3) * (1 - Fraction(1, 10)) == Fraction(3, 5)


def test_cor33_value():
    rep = cor33_bound(16, 1024)
    assert rep["branch"] == "main"
    lo, hi = Fraction(rep["value"]["lo"]), Fraction(rep["value"]["hi"])
    assert Fraction(965, 100) <= lo <= hi <= Fraction(967, 100)
    L = math.log(16)
    assert lo <= (1024 - 2 * L) / (2 * L - 1 / 6) * math.sqrt(16 / 6144) <= hi


def test_cor33_flags():
    for m in range(2, 41):
        for n in (1, 5, 50, 200, 400, 1000, 5000):
            rep = cor33_bound(m, n)
            ref = 24 * math.log(m) ** 2
            if abs(n - ref) > 1e-6:
                assert rep["trivial_sqrt_m"] == (n <= ref)
            assert rep["trivial_sqrt_n"] == (m < 10)
            main = not rep["trivial_sqrt_m"] and not rep["trivial_sqrt_n"]
            assert (rep["branch"] == "main") == main


def test_cor33_preconditions():
    with pytest.raises(ValueError):
        cor33_bound(1, 10)
