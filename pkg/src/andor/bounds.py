"""Interval evaluation of the robust-symmetrization constants and the final lower bound."""

from __future__ import annotations

import math
from fractions import Fraction

from .intervals import RInterval, decide, ln_interval, sqrt_interval

SIXTH = Fraction(1, 6)


REPORT_DENOM = 10 ** 12


def _iv(x: RInterval) -> dict:
    # rounded outward so the printed bracket still contains the value
    lo = Fraction(math.floor(x.lo * REPORT_DENOM), REPORT_DENOM)
    hi = Fraction(math.ceil(x.hi * REPORT_DENOM), REPORT_DENOM)
    return {"lo": str(lo), "hi": str(hi), "approx": x.mid()}


def log_exceeds(n, m, factor=2) -> bool:
    """Decide ``n > factor * ln m``."""
    n = Fraction(n)
    if m == 1:
        return n > 0
    return decide(lambda bits: n - factor * ln_interval(m, bits), 0)


def union_term(m: int, n: int, bits: int) -> RInterval:
    """Bracket of ``m (1 - 2 ln m / n)^n``; needs ``n > 2 ln m``."""
    base = 1 - 2 * ln_interval(m, bits) / n
    return m * base ** n


def sixth_bound_holds(n: int) -> bool:
    """``(1 - 1/(6n))^n >= 5/6``, exact."""
    if n < 1:
        raise ValueError("n must be positive")
    return (1 - SIXTH / n) ** n >= Fraction(5, 6)


def prob_bound_checks(m: int, n: int, bits: int = 64) -> dict:
    if m < 10:
        raise ValueError(f"need m >= 10, got m={m}")
    if n < 1 or not log_exceeds(n, m):
        raise ValueError(f"need n > 2 ln m, got m={m}, n={n}")
    union_ok = decide(lambda bt: Fraction(1, m) - union_term(m, n, bt), 0, start_bits=bits)
    sixth = (1 - SIXTH / n) ** n
    checks = {
        "union_bound": {"claim": "m(1-2 ln m/n)^n <= 1/m", "value": _iv(union_term(m, n, bits)),
                        "threshold": str(Fraction(1, m)), "holds": union_ok},
        "sixth_power": {"claim": "(1-1/(6n))^n >= 5/6", "value": float(sixth),
                        "holds": sixth >= Fraction(5, 6)},
        "case1_constant": {"claim": "1/3 + 1/6 = 1/2",
                           "holds": Fraction(1, 3) + SIXTH == Fraction(1, 2)},
        "case2_constant": {"claim": "(2/3)(1-1/m) >= 3/5", "value": str(Fraction(2, 3) * (1 - Fraction(1, m))),
                           "holds": Fraction(2, 3) * (1 - Fraction(1, m)) >= Fraction(3, 5)},
    }
    return {"m": m, "n": n, "ln_m": _iv(ln_interval(m, bits)), "checks": checks,
            "passed": all(c["holds"] for c in checks.values())}


def main_expression(m: int, n: int, bits: int = 64) -> RInterval:
    """``(n - 2 ln m)/(2 ln m - 1/6) * sqrt(m/(6n))`` as a rational bracket."""
    L = ln_interval(m, bits)
    return (n - 2 * L) / (2 * L - SIXTH) * sqrt_interval(Fraction(m, 6 * n), bits)


def cor33_bound(m: int, n: int, bits: int = 64) -> dict:
    """Lower-bound expression for AND_m o OR_n, or the trivial branch that covers (m, n).

    ``trivial_sqrt_m`` fires when ``n <= 24 ln^2 m`` and ``trivial_sqrt_n`` when
    ``m < 10``; the main expression is used only when neither does.
    """
    if m < 2 or n < 1:
        raise ValueError("need m >= 2 and n >= 1")
    L = ln_interval(m, bits)
    small_n = not decide(lambda bt: n - 24 * ln_interval(m, bt) ** 2, 0)
    small_m = m < 10
    out = {"m": m, "n": n, "ln_m": _iv(L), "trivial_sqrt_m": small_n, "trivial_sqrt_n": small_m}
    if small_n:
        out["branch"] = "sqrt_m"
        out["value"] = _iv(sqrt_interval(m, bits))
    elif small_m:
        out["branch"] = "sqrt_n"
        out["value"] = _iv(sqrt_interval(n, bits))
    else:
        out["branch"] = "main"
        out["value"] = _iv(main_expression(m, n, bits))
    out["sqrt_mn_over_log_m"] = _iv(sqrt_interval(m * n, bits) / L)
    return out
