"""Reductions from robust AND-OR approximators down to NOR approximators.

Reports are plain dicts with rationals rendered as ``num/den`` strings so they
serialize deterministically.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bernstein import Box, certify_bounds
from .intervals import decide, ln_interval
from .poly import MultiPoly, as_rational, eval_boolean_cube, fix_variable, multilinearize, \
    substitute_affine, symmetrize_average
from .symmetrize import BlockPartition, PairScaleParams, block_erase, erase_all_subscripts, \
    laurent_symmetrize_pairs

GRID_POINT_LIMIT = 2_000_000


class ConditionViolation(ValueError):
    """A region condition failed; carries the offending point."""

    def __init__(self, message, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


def fstr(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _pt(point) -> list[str]:
    return [fstr(v) for v in point]


@dataclass(frozen=True)
class RegionSpec:
    """Two-case region conditions over the box ``[0, n]^m``.

    Case 1: some ``x_i <= a`` requires ``0 <= p <= alpha``.
    Case 2: all ``x_i >= b`` requires ``beta <= p <= 1``.
    """

    m: int
    n: Fraction
    a: Fraction
    b: Fraction
    alpha: Fraction = Fraction(1, 3)
    beta: Fraction = Fraction(2, 3)

    def __post_init__(self):
        for name in ("n", "a", "b", "alpha", "beta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if not 0 < self.a < self.b <= self.n:
            raise ValueError(f"need 0 < a < b <= n, got a={self.a}, b={self.b}, n={self.n}")
        if not 0 < self.alpha < self.beta < 1:
            raise ValueError(f"need 0 < alpha < beta < 1, got {self.alpha}, {self.beta}")

    def classify(self, point: Sequence) -> int:
        """1 for case 1, 2 for case 2, 0 if neither applies."""
        if any(x <= self.a for x in point):
            return 1
        if all(x >= self.b for x in point):
            return 2
        return 0

    def bounds(self, case: int) -> tuple[Fraction, Fraction]:
        return (Fraction(0), self.alpha) if case == 1 else (self.beta, Fraction(1))

    def to_dict(self) -> dict:
        return {"m": self.m, "n": fstr(self.n), "a": fstr(self.a), "b": fstr(self.b),
                "alpha": fstr(self.alpha), "beta": fstr(self.beta)}


@dataclass(frozen=True)
class RobustRegionSpec(RegionSpec):
    """Region conditions with the side constraints the pairing reduction needs."""

    def __post_init__(self):
        super().__post_init__()
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if not self.b < self.n:
            raise ValueError(f"need b < n, got b={self.b}, n={self.n}")
        if not self.b / self.a < self.n / self.b:
            raise ValueError(f"need b/a < n/b, got b/a={self.b / self.a}, n/b={self.n / self.b}")


@dataclass(frozen=True)
class ShiftParams:
    scale: Fraction
    k: Fraction
    k_floor: int

    @classmethod
    def from_spec(cls, spec: RegionSpec) -> ShiftParams:
        a, b, n = spec.a, spec.b, spec.n
        scale = a * b / (b - a) ** 2
        k = a * (n - b) ** 2 / (n * (b - a) ** 2)
        if k < 1:
            raise ValueError(f"k = {k} < 1")
        return cls(scale, k, math.floor(k))

    @staticmethod
    def k_from_endpoint(spec: RegionSpec) -> Fraction:
        """k computed as the image of t = n/b + b/n under the shift."""
        a, b, n = spec.a, spec.b, spec.n
        return (n / b + b / n - 2) * a * b / (b - a) ** 2


# grids

def axis_grid(lo, hi, resolution: int, extra: Iterable = ()) -> list[Fraction]:
    """Rational lattice ``j/resolution`` within [lo, hi], plus endpoints and extras."""
    lo, hi = as_rational(lo), as_rational(hi)
    start = math.ceil(lo * resolution)
    stop = math.floor(hi * resolution)
    vals = {Fraction(j, resolution) for j in range(start, stop + 1)}
    vals.update((lo, hi))
    vals.update(as_rational(v) for v in extra if lo <= as_rational(v) <= hi)
    return sorted(vals)


def _grid_size(axes) -> int:
    return math.prod(len(a) for a in axes)


def _check_grid(p: MultiPoly, points: Iterable, classify, bounds_of) -> dict:
    """Exact evaluation over points; returns per-case summaries."""
    summary = {}
    for pt in points:
        case = classify(pt)
        if not case:
            continue
        lo, hi = bounds_of(case)
        v = p.eval(pt)
        s = summary.setdefault(case, {"points": 0, "min": v, "max": v, "witness": None})
        s["points"] += 1
        s["min"] = min(s["min"], v)
        s["max"] = max(s["max"], v)
        if s["witness"] is None and not lo <= v <= hi:
            s["witness"] = (pt, v)
    return summary


def _condition_entry(name, region, bounds, mode, s) -> dict:
    entry = {"name": name, "region": region, "bounds": _pt(bounds), "mode": mode}
    if s is None or not s["points"]:
        entry.update(outcome="vacuous", points=0)
        return entry
    entry.update(points=s["points"], min=fstr(s["min"]), max=fstr(s["max"]),
                 min_approx=float(s["min"]), max_approx=float(s["max"]))
    if s["witness"] is not None:
        entry.update(outcome="fail", witness=_pt(s["witness"][0]), value=fstr(s["witness"][1]))
    else:
        entry["outcome"] = "pass"
    return entry


def _finish(report: dict) -> dict:
    outcomes = [c["outcome"] for c in report["conditions"]]
    if "fail" in outcomes:
        report["status"] = "falsified"
    elif report["mode"] == "certified":
        report["status"] = "certified" if all(o in ("proven", "vacuous") for o in outcomes) else "uncertified"
    else:
        report["status"] = "grid-pass (falsification only, not a proof)"
    report["passed"] = "fail" not in outcomes
    return report


def verify_region_conditions(p: MultiPoly, spec: RegionSpec, mode: str = "grid",
                             resolution: int = 6, max_depth: int = 12) -> dict:
    """Check both region conditions on a grid or certify them with Bernstein bounds."""
    if p.nvars != spec.m:
        raise ValueError(f"polynomial has {p.nvars} variables, spec has m={spec.m}")
    report = {"check": "region", "spec": spec.to_dict(), "mode": mode, "conditions": []}
    c1 = f"some x_i <= {fstr(spec.a)}"
    c2 = f"all x_i >= {fstr(spec.b)}"
    if mode == "grid":
        axis = axis_grid(0, spec.n, resolution, (spec.a, spec.b))
        axes = [axis] * spec.m
        if _grid_size(axes) > GRID_POINT_LIMIT:
            raise ValueError("grid too large; lower the resolution")
        s = _check_grid(p, itertools.product(*axes), spec.classify, spec.bounds)
        report["resolution"] = resolution
        report["conditions"].append(_condition_entry("case1", c1, spec.bounds(1), mode, s.get(1)))
        report["conditions"].append(_condition_entry("case2", c2, spec.bounds(2), mode, s.get(2)))
    elif mode == "certified":
        boxes1 = []
        for i in range(spec.m):
            ivs = [(Fraction(0), spec.n)] * spec.m
            ivs[i] = (Fraction(0), spec.a)
            boxes1.append(Box(tuple(ivs)))
        boxes2 = [Box.cube(spec.m, spec.b, spec.n)]
        report["max_depth"] = max_depth
        report["conditions"].append(_certify_entry(p, "case1", c1, boxes1, spec.bounds(1), max_depth))
        report["conditions"].append(_certify_entry(p, "case2", c2, boxes2, spec.bounds(2), max_depth))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _finish(report)


def _certify_entry(p, name, region, boxes, bounds, max_depth) -> dict:
    entry = {"name": name, "region": region, "bounds": _pt(bounds), "mode": "certified",
             "boxes": [b.as_strs() for b in boxes]}
    explored = 0
    for b in boxes:
        cert = certify_bounds(p, b, bounds[0], bounds[1], max_depth)
        explored += cert.boxes
        if cert.status == "counterexample":
            entry.update(outcome="fail", witness=_pt(cert.witness), value=fstr(cert.value))
            break
        if cert.status == "undecided":
            entry.update(outcome="undecided", open_box=cert.open_box.as_strs())
            break
    else:
        entry["outcome"] = "proven"
    entry["subboxes"] = explored
    return entry


def weaker_conditions_check(p: MultiPoly, spec: RegionSpec, mode: str = "grid",
                            resolution: int = 6, max_depth: int = 12) -> dict:
    """Case 1 only where every coordinate avoids (a, b); case 2 only at (b, ..., b)."""
    if p.nvars != spec.m:
        raise ValueError(f"polynomial has {p.nvars} variables, spec has m={spec.m}")
    report = {"check": "weaker", "spec": spec.to_dict(), "mode": mode, "conditions": []}
    c1 = f"all x_i in [0,{fstr(spec.a)}] u [{fstr(spec.b)},{fstr(spec.n)}], some x_i <= {fstr(spec.a)}"
    if mode == "grid":
        axis = axis_grid(0, spec.n, resolution, (spec.a, spec.b))
        axis = [x for x in axis if x <= spec.a or x >= spec.b]
        axes = [axis] * spec.m
        if _grid_size(axes) > GRID_POINT_LIMIT:
            raise ValueError("grid too large; lower the resolution")
        pts = (pt for pt in itertools.product(*axes) if any(x <= spec.a for x in pt))
        s = _check_grid(p, pts, lambda pt: 1, spec.bounds)
        report["resolution"] = resolution
        report["conditions"].append(_condition_entry("case1", c1, spec.bounds(1), mode, s.get(1)))
    elif mode == "certified":
        boxes = []
        for choice in itertools.product((0, 1), repeat=spec.m):
            if any(c == 0 for c in choice):
                boxes.append(Box(tuple((Fraction(0), spec.a) if c == 0 else (spec.b, spec.n)
                                       for c in choice)))
        report["max_depth"] = max_depth
        report["conditions"].append(_certify_entry(p, "case1", c1, boxes, spec.bounds(1), max_depth))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    # case 2 is a single exact evaluation in either mode
    pt = (spec.b,) * spec.m
    v = p.eval(pt)
    lo, hi = spec.bounds(2)
    s2 = {"points": 1, "min": v, "max": v, "witness": None if lo <= v <= hi else (pt, v)}
    entry = _condition_entry("case2", f"x_i = {fstr(spec.b)} for all i", (lo, hi), "exact", s2)
    if mode == "certified" and entry["outcome"] == "pass":
        entry["outcome"] = "proven"
    report["conditions"].append(entry)
    return _finish(report)


# NOR verification and un-symmetrization

@dataclass
class NorCheck:
    passed: bool
    witness: tuple | None = None
    value: Fraction | None = None
    min_zero: Fraction | None = None
    max_rest: Fraction | None = None


def verify_nor_approx(final: MultiPoly, arity: int, alpha, beta) -> NorCheck:
    """Exact check that ``final`` approximates NOR on all of {0,1}^arity."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    if arity > 20:
        raise ValueError("NOR check is limited to 20 inputs")
    if final.nvars != arity:
        raise ValueError(f"polynomial has {final.nvars} variables, expected {arity}")
    vals = eval_boolean_cube(final)
    v0 = vals[0]
    if not beta <= v0 <= 1:
        return NorCheck(False, (0,) * arity, v0, v0, None)
    rest = vals[1:]
    for mask, v in enumerate(rest, start=1):
        if not 0 <= v <= alpha:
            return NorCheck(False, tuple((mask >> i) & 1 for i in range(arity)), v, v0, None)
    return NorCheck(True, None, None, v0, max(rest) if rest else None)


def _stirling2(e: int) -> list[int]:
    row = [1]
    for i in range(1, e + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            new[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = new
    return row


def elementary_symmetric(r: int, vars: Sequence[int], nvars: int) -> MultiPoly:
    terms = {}
    for S in itertools.combinations(vars, r):
        e = [0] * nvars
        for v in S:
            e[v] = 1
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def unsymmetrize(qbar: MultiPoly, count: int) -> MultiPoly:
    """Replace each variable by a sum of ``count`` fresh Boolean variables.

    Variable ``i`` becomes ``y_{i,0} + ... + y_{i,count-1}`` (index
    ``i*count + j``). The result is multilinearized, which leaves its values
    on {0,1} unchanged: over Booleans ``(sum y)^e = sum_r r! S(e,r) e_r(y)``.
    """
    if count < 1:
        raise ValueError("need at least one Boolean variable per block")
    nb = qbar.nvars
    total = nb * count
    cache: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            block = range(i * count, (i + 1) * count)
            st = _stirling2(e)
            out = MultiPoly.const(0, total)
            for r in range(0, min(e, count) + 1):
                coef = math.factorial(r) * st[r]
                if coef:
                    out = out + elementary_symmetric(r, block, total) * coef
            cache[key] = out
        return cache[key]

    result = MultiPoly.const(0, total)
    for e, c in qbar.terms.items():
        term = MultiPoly.const(c, total)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return multilinearize(result)


# pairing reduction

@dataclass
class ReductionResult:
    final: MultiPoly
    arity: int
    shift: ShiftParams
    trace: list[tuple[str, MultiPoly]] = field(default_factory=list)
    report: dict = field(default_factory=dict)


def _check_cases(p, points, classify, bounds_of, names) -> list[dict]:
    s = _check_grid(p, points, classify, bounds_of)
    return [_condition_entry(f"case{c}", names[c], bounds_of(c), "grid", s.get(c)) for c in (1, 2)]


def thm31_reduce(p: MultiPoly, spec: RobustRegionSpec, resolution: int = 6, check_stages: bool = True,
                 seed: int = 0, strict: bool = False, verify_input: bool = True) -> ReductionResult:
    """Pair, Laurent-symmetrize, shift and un-symmetrize a robust approximator.

    Produces a polynomial on ``(m_even/2) * floor(k)`` Boolean variables. Intermediate
    conditions are checked on grids and recorded; with ``strict`` a failing
    check raises ``ConditionViolation``.
    """
    if not isinstance(spec, RobustRegionSpec):
        spec = RobustRegionSpec(**{f: getattr(spec, f) for f in ("m", "n", "a", "b", "alpha", "beta")})
    if p.nvars != spec.m:
        raise ValueError(f"polynomial has {p.nvars} variables, spec has m={spec.m}")
    a, b, n = spec.a, spec.b, spec.n
    shift = ShiftParams.from_spec(spec)
    d0 = p.degree()
    rng = random.Random(seed)
    report: dict = {"spec": spec.to_dict(), "shift": {"scale": fstr(shift.scale), "k": fstr(shift.k),
                                                      "k_floor": shift.k_floor},
                    "degrees": {}, "stage_checks": [], "conditions": {}}
    trace = [("input", p)]

    def degree_ok(name, poly):
        report["degrees"][name] = poly.degree()
        if poly.degree() > d0:
            raise AssertionError(f"degree increased at stage {name}")

    def fail(msg, entry):
        if strict:
            raise ConditionViolation(msg, entry.get("witness"), entry.get("value"))

    if verify_input:
        pre = verify_region_conditions(p, spec, "grid", resolution)
        report["input_check"] = pre
        if not pre["passed"]:
            bad = next(c for c in pre["conditions"] if c["outcome"] == "fail")
            raise ConditionViolation("input polynomial violates the region conditions",
                                     bad.get("witness"), bad.get("value"))

    # (i) odd m: fix the last variable at b
    cur = p
    m_even = spec.m
    if spec.m % 2:
        cur = fix_variable(cur, spec.m - 1, b)
        m_even -= 1
        trace.append(("fix_last_at_b", cur))
        degree_ok("fix_last_at_b", cur)
    # (ii) permutation average
    sym = symmetrize_average(cur, range(m_even)) if m_even > 1 else cur
    trace.append(("symmetrized", sym))
    degree_ok("symmetrized", sym)
    # (iii) pair and Laurent-symmetrize with rescaling by b
    params = PairScaleParams.consecutive(m_even, b)
    q = laurent_symmetrize_pairs(sym, params)
    trace.append(("laurent", q))
    degree_ok("laurent", q)
    half = m_even // 2
    if check_stages:
        ok = True
        for _ in range(50):
            s = [Fraction(rng.randint(1, 97), rng.randint(1, 97)) for _ in range(half)]
            xs = []
            for si in s:
                xs += [b * si, b / si]
            if q.eval([si + 1 / si for si in s]) != sym.eval(xs):
                ok = False
                break
        report["stage_checks"].append({"stage": "laurent", "samples": 50, "outcome": "pass" if ok else "fail"})
        if not ok:
            raise AssertionError("Laurent stage identity failed")
    # q-conditions on [2, n/b + b/n]
    t_hi = n / b + b / n
    t_cut = b / a + a / b
    t_axis = axis_grid(2, t_hi, resolution, (t_cut,))
    t_axes = [t_axis] * half
    if _grid_size(t_axes) <= GRID_POINT_LIMIT:
        def cls_q(pt):
            if any(t >= t_cut for t in pt):
                return 1
            return 2 if all(t == 2 for t in pt) else 0
        conds = _check_cases(q, itertools.product(*t_axes), cls_q, spec.bounds,
                             {1: f"some t_i >= {fstr(t_cut)}", 2: "all t_i = 2"})
        report["conditions"]["q"] = {"domain": [fstr(2), fstr(t_hi)], "resolution": resolution,
                                     "conditions": conds}
        for c in conds:
            if c["outcome"] == "fail":
                fail("q-condition failed", c)
    # (iv) affine shift t = tbar/scale + 2
    qbar = q
    for i in range(half):
        qbar = substitute_affine(qbar, i, 1 / shift.scale, 2)
    trace.append(("shifted", qbar))
    degree_ok("shifted", qbar)
    if check_stages:
        back = qbar
        for i in range(half):
            back = substitute_affine(back, i, shift.scale, -2 * shift.scale)
        ok = back == q
        report["stage_checks"].append({"stage": "shift", "check": "inverse substitution",
                                       "outcome": "pass" if ok else "fail"})
        if not ok:
            raise AssertionError("shift stage inverse substitution failed")
    tb_axis = axis_grid(0, shift.k, resolution, range(shift.k_floor + 1))
    tb_axes = [tb_axis] * half
    if _grid_size(tb_axes) <= GRID_POINT_LIMIT:
        def cls_qbar(pt):
            if any(t >= 1 for t in pt):
                return 1
            return 2 if all(t == 0 for t in pt) else 0
        conds = _check_cases(qbar, itertools.product(*tb_axes), cls_qbar, spec.bounds,
                             {1: "some tbar_i >= 1", 2: "all tbar_i = 0"})
        report["conditions"]["qbar"] = {"domain": [fstr(0), fstr(shift.k)], "resolution": resolution,
                                        "conditions": conds}
        for c in conds:
            if c["outcome"] == "fail":
                fail("qbar-condition failed", c)
    # (v) un-symmetrize
    final = unsymmetrize(qbar, shift.k_floor)
    arity = half * shift.k_floor
    trace.append(("unsymmetrized", final))
    degree_ok("unsymmetrized", final)
    if check_stages:
        ok = True
        samples = 0
        for _ in range(64):
            counts = [rng.randint(0, shift.k_floor) for _ in range(half)]
            bits = []
            for c in counts:
                block = [1] * c + [0] * (shift.k_floor - c)
                rng.shuffle(block)
                bits += block
            samples += 1
            if final.eval(bits) != qbar.eval(counts):
                ok = False
                break
        report["stage_checks"].append({"stage": "unsymmetrize", "samples": samples,
                                       "outcome": "pass" if ok else "fail"})
        if not ok:
            raise AssertionError("un-symmetrization stage failed")
    report["final"] = {"arity": arity, "degree": final.degree(), "terms": len(final.terms)}
    return ReductionResult(final, arity, shift, trace, report)


# blockwise robust symmetrization

@dataclass(frozen=True)
class BlockProductPoly:
    """Product of factors over disjoint variable blocks.

    Factor ``i`` is a polynomial in ``len(blocks[i])`` local variables, the
    ``j``-th of which is global variable ``blocks[i][j]``.
    """

    factors: tuple[MultiPoly, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if len(self.factors) != len(self.blocks):
            raise ValueError("one factor per block")
        BlockPartition(self.blocks)
        for f, blk in zip(self.factors, self.blocks):
            if f.nvars != len(blk):
                raise ValueError("factor variable count does not match its block")

    @classmethod
    def and_or(cls, m: int, n: int) -> BlockProductPoly:
        from .adeg import or_poly
        part = BlockPartition.uniform(m, n)
        return cls(tuple(or_poly(n) for _ in range(m)), part.blocks)

    @property
    def num_vars(self) -> int:
        return sum(len(b) for b in self.blocks)

    def degree(self) -> int:
        if any(f.is_zero() for f in self.factors):
            return -1
        return sum(f.degree() for f in self.factors)

    def eval(self, point: Sequence) -> Fraction:
        out = Fraction(1)
        for f, blk in zip(self.factors, self.blocks):
            out *= f.eval([point[v] for v in blk])
        return out

    def expand(self) -> MultiPoly:
        N = self.num_vars
        out = MultiPoly.const(1, N)
        for f, blk in zip(self.factors, self.blocks):
            out = out * f.embed(N, blk)
        return out


def _product_extremes(value_sets: Sequence[Sequence[tuple]]):
    """Exact (min, argmin, max, argmax) of products over independent finite choices.

    ``value_sets[i]`` is a list of (value, coordinate) pairs.
    """
    lo = hi = (Fraction(1), ())
    for vals in value_sets:
        vmin = min(vals, key=lambda t: t[0])
        vmax = max(vals, key=lambda t: t[0])
        cands = [(x[0] * v[0], x[1] + (v[1],)) for x in (lo, hi) for v in (vmin, vmax)]
        lo = min(cands, key=lambda t: t[0])
        hi = max(cands, key=lambda t: t[0])
    return lo, hi


def log_upper_bound(m: int, log_upper=None, bits: int = 64) -> Fraction:
    """A rational upper bound on ln m; a supplied one is checked to really bound it."""
    if log_upper is None:
        # short rational just above the bracket
        return Fraction(math.ceil(ln_interval(m, bits).hi * 10**6), 10**6)
    log_upper = as_rational(log_upper)
    ok = log_upper >= 0 if m == 1 else decide(lambda bt: log_upper - ln_interval(m, bt), 0)
    if not ok:
        raise ValueError(f"{log_upper} is not an upper bound on ln {m}")
    return log_upper


def thm32_symmetrize(p, m: int, n: int, log_upper=None, resolution: int = 6):
    """Erase subscripts in each OR block and check the two robust conclusions on a grid.

    ``p`` is a ``BlockProductPoly`` (result is one again, with univariate
    factors) or a multilinear ``MultiPoly`` on ``m*n`` variables laid out
    block by block.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    L = log_upper_bound(m, log_upper)
    part = BlockPartition.uniform(m, n)
    if isinstance(p, BlockProductPoly):
        if p.blocks != part.blocks:
            raise ValueError("block structure does not match m x n layout")
        for f in p.factors:
            if not f.is_multilinear():
                raise ValueError("every block factor must be multilinear")
        q = BlockProductPoly(tuple(erase_all_subscripts(f) for f in p.factors),
                             tuple((i,) for i in range(m)))
    elif isinstance(p, MultiPoly):
        if p.nvars != m * n:
            raise ValueError(f"polynomial has {p.nvars} variables, expected m*n = {m * n}")
        q = block_erase(p, part)
    else:
        raise TypeError("p must be a MultiPoly or BlockProductPoly")
    applies = m >= 10 and decide(lambda bt: n - 2 * ln_interval(m, bt), 0)
    sixth = Fraction(1, 6)
    hi_cut = 2 * L
    axis = axis_grid(0, n, resolution, (sixth, hi_cut))
    low_axis = [x for x in axis if x <= sixth]
    high_axis = [x for x in axis if x >= hi_cut]
    report = {"m": m, "n": n, "log_upper": fstr(L), "resolution": resolution,
              "constants_apply": bool(applies), "degree_in": p.degree(), "degree_out": q.degree(),
              "conditions": []}
    if not applies:
        report["note"] = "the 1/2 and 3/5 bounds are only guaranteed for m >= 10 and n > 2 ln m"
    names = {1: "some x_i <= 1/6", 2: f"all x_i >= 2*{fstr(L)}"}
    bounds = {1: (Fraction(0), Fraction(1, 2)), 2: (Fraction(3, 5), Fraction(1))}
    if isinstance(q, BlockProductPoly):
        f = [fac for fac in q.factors]
        summaries = {}
        # case 1: coordinate i pinned low, others free
        for case in (1, 2):
            if case == 2 and not high_axis:
                summaries[case] = None
                continue
            results = []
            pins = range(m) if case == 1 else [None]
            for i in pins:
                sets = []
                for j in range(m):
                    ax = (low_axis if j == i else axis) if case == 1 else high_axis
                    sets.append([(f[j].eval([x]), x) for x in ax])
                results.append(_product_extremes(sets))
            lo = min((r[0] for r in results), key=lambda t: t[0])
            hi = max((r[1] for r in results), key=lambda t: t[0])
            blo, bhi = bounds[case]
            witness = None
            if lo[0] < blo:
                witness = (lo[1], lo[0])
            elif hi[0] > bhi:
                witness = (hi[1], hi[0])
            npts = sum(math.prod(len(low_axis if j == i else axis) for j in range(m)) for i in pins) \
                if case == 1 else len(high_axis) ** m
            summaries[case] = {"points": npts, "min": lo[0], "max": hi[0], "witness": witness}
        for case in (1, 2):
            report["conditions"].append(_condition_entry(f"case{case}", names[case], bounds[case], "grid",
                                                         summaries[case]))
    else:
        axes = [axis] * m
        if _grid_size(axes) > GRID_POINT_LIMIT:
            raise ValueError("grid too large; lower the resolution")

        def classify(pt):
            if any(x <= sixth for x in pt):
                return 1
            return 2 if all(x >= hi_cut for x in pt) else 0
        s = _check_grid(q, itertools.product(*axes), classify, lambda c: bounds[c])
        for case in (1, 2):
            report["conditions"].append(_condition_entry(f"case{case}", names[case], bounds[case], "grid",
                                                         s.get(case)))
    report["passed"] = all(c["outcome"] != "fail" for c in report["conditions"])
    return q, report


def and_or_erased_closed_form(m: int, n: int) -> MultiPoly:
    """``prod_i (1 - (1 - x_i/n)^n)`` as an expanded polynomial in m variables."""
    out = MultiPoly.const(1, m)
    for i in range(m):
        xi = MultiPoly.var(i, m)
        out = out * (1 - (1 - xi / n) ** n)
    return out
