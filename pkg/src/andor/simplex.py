"""Exact rational simplex (Bland's rule) and a certified feasibility layer.

``solve_standard`` handles ``min c.x  s.t.  A x = b, x >= 0``. On top of it,
``solve_inequalities`` decides whether a system of rows ``g_i . c <= h_i`` in
free unknowns ``c`` is feasible, returning either a point with maximal uniform
slack or nonnegative multipliers whose combination is contradictory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class LPResult:
    status: str  # optimal | infeasible | unbounded
    x: list[Fraction] | None = None
    objective: Fraction | None = None
    duals: list[Fraction] | None = None
    farkas: list[Fraction] | None = None
    pivots: int = 0
    basis: list[int] | None = None


class _Tableau:
    def __init__(self, A, b, ncols):
        self.rows = [list(r) + [rhs] for r, rhs in zip(A, b)]
        self.ncols = ncols
        self.basis: list[int] = []
        self.obj: list[Fraction] = []
        self.pivots = 0

    def set_objective(self, cost: Sequence[Fraction]):
        obj = list(cost) + [ZERO]
        for r, bv in enumerate(self.basis):
            cb = obj[bv]
            if cb:
                row = self.rows[r]
                for j, v in enumerate(row):
                    if v:
                        obj[j] -= cb * v
        self.obj = obj

    def pivot(self, r: int, j: int):
        self.pivots += 1
        prow = self.rows[r]
        pv = prow[j]
        if pv != ONE:
            prow = [v / pv for v in prow]
            self.rows[r] = prow
        nz = [(k, v) for k, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[j]
                if f:
                    for k, v in nz:
                        row[k] -= f * v
        f = self.obj[j] if self.obj else ZERO
        if f:
            for k, v in nz:
                self.obj[k] -= f * v
        self.basis[r] = j

    def run(self, allowed) -> str:
        """Bland's rule: lowest-index improving column, lowest-index leaving variable."""
        while True:
            enter = next((j for j in range(self.ncols) if allowed[j] and self.obj[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def _try_hint(tab: _Tableau, hint: Sequence[int], n: int) -> bool:
    """Pivot hinted columns into the basis; True if the result is primal feasible."""
    for j in hint:
        r = next((r for r, bv in enumerate(tab.basis) if bv >= n and tab.rows[r][j]), None)
        if r is not None:
            tab.pivot(r, j)
    for r, bv in enumerate(tab.basis):
        rhs = tab.rows[r][-1]
        if rhs < 0 or (bv >= n and rhs):
            return False
    return True


def solve_standard(A: Sequence[Sequence], b: Sequence, c: Sequence,
                   basis_hint: Sequence[int] | None = None) -> LPResult:
    """Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly.

    ``duals`` are the equality multipliers ``y`` (reduced costs ``c - A^T y``
    are nonnegative at optimality). On infeasibility ``farkas`` holds ``y``
    with ``A^T y <= 0`` and ``b.y > 0``. ``basis_hint`` lists columns to try as
    the starting basis; if they do not give a feasible basis the solve starts
    cold, so the hint never affects the answer.
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("dimension mismatch")
    sign = [ONE] * m
    for i in range(m):
        if b[i] < 0:
            sign[i] = -ONE
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # artificial columns n..n+m-1
    rows = [A[i] + [ONE if k == i else ZERO for k in range(m)] for i in range(m)]

    def fresh():
        t = _Tableau([list(r) for r in rows], b, n + m)
        t.basis = list(range(n, n + m))
        return t

    tab = fresh()
    warm = False
    if basis_hint:
        warm = _try_hint(tab, basis_hint, n)
        if not warm:
            spent = tab.pivots
            tab = fresh()
            tab.pivots = spent
    tab.set_objective([ZERO] * n + [ONE] * m)
    if not warm:
        tab.run([True] * (n + m))
    phase1 = -tab.obj[-1]
    if phase1 > 0:
        y = [-tab.obj[n + i] + ONE for i in range(m)]
        # reduced cost of artificial i is 1 - y_i
        y = [sign[i] * y[i] for i in range(m)]
        return LPResult("infeasible", farkas=y, pivots=tab.pivots)
    # drive zero-level artificials out of the basis where possible
    for r in range(m):
        if tab.basis[r] >= n:
            j = next((j for j in range(n) if tab.rows[r][j]), None)
            if j is not None:
                tab.pivot(r, j)
    tab.set_objective(c + [ZERO] * m)
    status = tab.run([True] * n + [False] * m)
    if status == "unbounded":
        return LPResult("unbounded", pivots=tab.pivots)
    x = [ZERO] * n
    for r, bv in enumerate(tab.basis):
        if bv < n:
            x[bv] = tab.rows[r][-1]
    y = [sign[i] * -tab.obj[n + i] for i in range(m)]
    obj = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return LPResult("optimal", x=x, objective=obj, duals=y, pivots=tab.pivots, basis=list(tab.basis))


@dataclass
class Row:
    """Constraint ``g . c <= h`` with an optional human-readable label."""

    g: tuple
    h: Fraction
    label: object = None


@dataclass
class FeasibilityResult:
    feasible: bool
    margin: Fraction  # minimal slack of the returned point, or -(contradiction) when infeasible
    solution: list[Fraction] | None = None
    certificate: dict[int, Fraction] = field(default_factory=dict)
    rounds: int = 0
    pivots: int = 0


def check_point(rows: Sequence[Row], c: Sequence[Fraction]) -> int | None:
    """Index of the first violated row, or None."""
    for i, r in enumerate(rows):
        if sum((gi * ci for gi, ci in zip(r.g, c) if gi), ZERO) > r.h:
            return i
    return None


def certificate_value(rows: Sequence[Row], mult: dict[int, Fraction]) -> Fraction:
    """Recombine multipliers from scratch and return the contradiction value.

    For feasible ``c`` the combination ``sum y_i (g_i.c - h_i)`` is <= 0; a valid
    certificate makes the linear part vanish so it equals ``-sum y_i h_i``.
    Returns that constant (positive means contradiction) and raises if the
    multipliers are negative or the linear part does not cancel.
    """
    if not mult:
        raise ValueError("empty certificate")
    k = len(rows[next(iter(mult))].g)
    lin = [ZERO] * k
    const = ZERO
    for i, y in mult.items():
        if y < 0:
            raise ValueError(f"negative multiplier on row {i}")
        r = rows[i]
        for j, gj in enumerate(r.g):
            if gj:
                lin[j] += y * gj
        const += y * r.h
    if any(lin):
        raise ValueError("linear part of the combination does not cancel")
    return -const


def _float_support(rows: Sequence[Row], k: int, cap: Fraction) -> list[int] | None:
    """Rows carrying weight in a floating-point solve of the dual; None on failure."""
    try:
        import numpy as np
        from scipy.optimize import linprog
    except ImportError:  # pragma: no cover
        return None
    G = np.array([[float(v) for v in r.g] for r in rows]).reshape(len(rows), k)
    h = np.array([float(r.h) for r in rows] + [float(cap)])
    A = np.zeros((k + 1, len(rows) + 1))
    A[:k, :len(rows)] = G.T
    A[k, :] = 1.0
    b = np.zeros(k + 1)
    b[k] = 1.0
    res = linprog(h, A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    if res.status != 0:
        return None
    y = res.x[:len(rows)]
    return [i for i in np.argsort(-y) if y[i] > 1e-12][: 2 * (k + 1)]


def solve_inequalities(rows: Sequence[Row], nunknowns: int, margin_cap=ONE,
                       batch: int | None = None, initial: Sequence[int] | None = None,
                       warm_start: bool = True) -> FeasibilityResult:
    """Decide feasibility of ``g_i . c <= h_i`` exactly.

    Solves ``min eps  s.t.  g_i.c - eps <= h_i,  eps >= -margin_cap`` through its
    dual, adding violated rows to a working set until none remain. The returned
    point has slack at least ``min(-eps*, margin_cap)`` on every row.

    With ``warm_start`` the working set is seeded from a floating-point solve;
    the float answer only chooses which rows to start from, every decision is
    made by the exact solver.
    """
    k = nunknowns
    nrows = len(rows)
    if nrows == 0:
        return FeasibilityResult(True, Fraction(margin_cap), [ZERO] * k)
    cap = Fraction(margin_cap)
    batch = batch or max(k + 1, 8)
    if initial is None and warm_start and nrows > k + 1:
        initial = _float_support(rows, k, cap)
    if initial is None:
        step = max(1, nrows // max(2 * (k + 1), 1))
        initial = list(range(0, nrows, step))
    working = sorted(set(initial))
    in_work = set(working)
    hint = list(working)
    rounds = pivots = 0
    while True:
        rounds += 1
        # dual: min sum y_i h_i + y_cap*cap, sum y_i g_i = 0, sum y_i + y_cap = 1, y >= 0
        cols = [rows[i] for i in working]
        A = [[r.g[j] for r in cols] + [ZERO] for j in range(k)]
        A.append([ONE] * len(cols) + [ONE])
        b = [ZERO] * k + [ONE]
        cost = [r.h for r in cols] + [cap]
        pos = {row: j for j, row in enumerate(working)}
        res = solve_standard(A, b, cost, basis_hint=[pos[i] for i in hint if i in pos])
        pivots += res.pivots
        if res.status != "optimal":
            raise RuntimeError(f"dual LP unexpectedly {res.status}")
        pi = res.duals[:k]
        sigma = res.duals[k]
        eps = -sigma
        # most violated rows of g.pi - eps <= h over the full system
        viol = []
        for i, r in enumerate(rows):
            if i in in_work:
                continue
            s = r.h - sum((gj * pj for gj, pj in zip(r.g, pi) if gj), ZERO) - sigma
            if s < 0:
                viol.append((s, i))
        if not viol:
            break
        hint = [working[j] for j in res.basis if j < len(working)]
        viol.sort()
        for _, i in viol[:batch]:
            working.append(i)
            in_work.add(i)
        working.sort()
    if eps > 0:
        cert = {}
        for col, yi in zip(working, res.x[:len(working)]):
            if yi:
                cert[col] = yi
        return FeasibilityResult(False, -eps, None, cert, rounds, pivots)
    sol = list(pi)
    return FeasibilityResult(True, -eps, sol, {}, rounds, pivots)
