"""Approximate degree of small Boolean functions by exact linear programming."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .poly import MultiPoly, PolyFormatError, as_rational, dumps, eval_boolean_cube, loads
from .simplex import Row, certificate_value, solve_inequalities

DEFAULT_GUARD = 50_000


class GuardExceeded(RuntimeError):
    """The LP basis would exceed the configured size limit."""


# Boolean functions

@dataclass(frozen=True)
class BoolFn:
    """Total function on {0,1}^N; ``table[mask]`` with bit i of mask = x_i."""

    arity: int
    table: tuple[int, ...]
    name: str = "f"

    def __post_init__(self):
        if self.arity > 24:
            raise ValueError("truth tables are limited to 24 inputs")
        if len(self.table) != 1 << self.arity:
            raise ValueError("truth table has the wrong length")
        if any(v not in (0, 1) for v in self.table):
            raise ValueError("truth table entries must be 0 or 1")

    @classmethod
    def from_callable(cls, arity: int, fn: Callable[[tuple], int], name="f") -> BoolFn:
        return cls(arity, tuple(int(bool(fn(_bits(mask, arity)))) for mask in range(1 << arity)), name)

    def __call__(self, x: Sequence[int]) -> int:
        mask = 0
        for i, v in enumerate(x):
            if v:
                mask |= 1 << i
        return self.table[mask]

    def negate(self) -> BoolFn:
        return BoolFn(self.arity, tuple(1 - v for v in self.table), f"not {self.name}")

    def is_symmetric(self) -> bool:
        by_weight: dict = {}
        for mask, v in enumerate(self.table):
            if by_weight.setdefault(bin(mask).count("1"), v) != v:
                return False
        return True

    def weight_profile(self) -> list[int]:
        """Value at each Hamming weight; only meaningful for symmetric f."""
        if not self.is_symmetric():
            raise ValueError(f"{self.name} is not symmetric")
        return [self.table[(1 << w) - 1] for w in range(self.arity + 1)]


def _bits(mask: int, n: int) -> tuple:
    return tuple((mask >> i) & 1 for i in range(n))


def OR(n: int) -> BoolFn:
    return BoolFn.from_callable(n, lambda x: any(x), f"OR_{n}")


def AND(n: int) -> BoolFn:
    return BoolFn.from_callable(n, lambda x: all(x), f"AND_{n}")


def NOR(n: int) -> BoolFn:
    return BoolFn.from_callable(n, lambda x: not any(x), f"NOR_{n}")


def AND_OR(m: int, n: int) -> BoolFn:
    """AND of m disjoint ORs; x_{i,j} is input ``i*n + j``."""
    return BoolFn.from_callable(
        m * n, lambda x: all(any(x[i * n:(i + 1) * n]) for i in range(m)), f"AND_{m}.OR_{n}")


def named(name: str, n: int, m: int | None = None) -> BoolFn:
    name = name.upper().replace("-", "_")
    if name == "OR":
        return OR(n)
    if name == "AND":
        return AND(n)
    if name == "NOR":
        return NOR(n)
    if name in ("AND_OR", "ANDOR"):
        if m is None:
            raise ValueError("AND_OR needs m")
        return AND_OR(m, n)
    raise ValueError(f"unknown function family {name!r}")


def or_poly(n: int, offset: int = 0, nvars: int | None = None) -> MultiPoly:
    """Exact multilinear OR on variables ``offset .. offset+n-1``."""
    nvars = n + offset if nvars is None else nvars
    prod = MultiPoly.const(1, nvars)
    for j in range(n):
        prod = prod * (1 - MultiPoly.var(offset + j, nvars))
    return 1 - prod


def and_poly(n: int) -> MultiPoly:
    return MultiPoly.monomial([1] * n)


@dataclass(frozen=True)
class ApproxSpec:
    alpha: Fraction = Fraction(1, 3)
    beta: Fraction = Fraction(2, 3)

    def __post_init__(self):
        a, b = as_rational(self.alpha), as_rational(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if not 0 < a < b < 1:
            raise ValueError(f"need 0 < alpha < beta < 1, got alpha={a}, beta={b}")

    def bounds(self, value: int) -> tuple[Fraction, Fraction]:
        return (Fraction(0), self.alpha) if value == 0 else (self.beta, Fraction(1))


# certificates

@dataclass
class DualCertificate:
    """Nonnegative multipliers on constraint rows of the degree-d system.

    A row is ``p(point) <= bound`` (sense ``le``) or ``p(point) >= bound``
    (sense ``ge``) where ``p`` ranges over spans of ``basis`` monomials
    evaluated at ``point / scale``.
    """

    degree: int
    basis: list[tuple[int, ...]]
    entries: list[tuple[Fraction, tuple, str, Fraction]]
    scale: Fraction = Fraction(1)

    def row(self, point, sense, bound) -> Row:
        u = [Fraction(x) / self.scale for x in point]
        vec = []
        for e in self.basis:
            v = Fraction(1)
            for ui, k in zip(u, e):
                if k:
                    v *= ui ** k
            vec.append(v)
        if sense == "le":
            return Row(tuple(vec), bound)
        if sense == "ge":
            return Row(tuple(-v for v in vec), -bound)
        raise ValueError(f"bad sense {sense!r}")

    def contradiction(self) -> Fraction:
        """Recompute the combination from the stored points; positive means valid."""
        rows = [self.row(pt, s, b) for _, pt, s, b in self.entries]
        return certificate_value(rows, {i: y for i, (y, _, _, _) in enumerate(self.entries)})

    def verify(self) -> bool:
        try:
            return self.contradiction() > 0
        except ValueError:
            return False

    def dumps(self) -> str:
        lines = ["certificate", f"degree {self.degree}",
                 f"scale {self.scale.numerator}/{self.scale.denominator}",
                 f"basis {len(self.basis)}"]
        lines += [" ".join(map(str, e)) for e in self.basis]
        for y, pt, sense, bound in self.entries:
            coords = " ".join(f"{Fraction(x).numerator}/{Fraction(x).denominator}" for x in pt)
            lines.append(f"row {y.numerator}/{y.denominator} {sense} "
                         f"{bound.numerator}/{bound.denominator} : {coords}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> DualCertificate:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        try:
            start = lines.index("certificate")
            degree = int(lines[start + 1].split()[1])
            scale = Fraction(lines[start + 2].split()[1])
            nb = int(lines[start + 3].split()[1])
            basis = [tuple(int(x) for x in ln.split()) for ln in lines[start + 4:start + 4 + nb]]
            entries = []
            for ln in lines[start + 4 + nb:]:
                head, coords = ln.split(":")
                _, y, sense, bound = head.split()
                entries.append((Fraction(y), tuple(Fraction(c) for c in coords.split()),
                                sense, Fraction(bound)))
        except (ValueError, IndexError) as exc:
            raise PolyFormatError(f"bad certificate section: {exc}") from None
        return cls(degree, basis, entries, scale)


@dataclass
class LPOutcome:
    """Exactly one of ``witness`` / ``certificate`` is set."""

    degree: int
    witness: MultiPoly | None = None
    certificate: DualCertificate | None = None
    margin: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.witness is not None


@dataclass
class DegreeResult:
    degree: int
    witness: MultiPoly
    certificate: DualCertificate | None = None
    outcomes: list[LPOutcome] = field(default_factory=list)

    def dumps(self) -> str:
        text = f"# approximate degree {self.degree}\n" + dumps(self.witness)
        if self.certificate is not None:
            text += self.certificate.dumps()
        return text

    @classmethod
    def loads(cls, text: str) -> DegreeResult:
        head, _, cert = text.partition("certificate")
        witness = loads(head)
        certificate = DualCertificate.loads("certificate" + cert) if cert else None
        return cls(witness.degree(), witness, certificate)


# LP construction

def multilinear_basis(n: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(min(d, n) + 1):
        for S in itertools.combinations(range(n), k):
            e = [0] * n
            for i in S:
                e[i] = 1
            out.append(tuple(e))
    return out


def _basis_size(n: int, d: int) -> int:
    return sum(math.comb(n, k) for k in range(min(d, n) + 1))


def solve_pointwise(basis: Sequence[tuple], constraints: Sequence[tuple], degree: int,
                    scale=1, margin_cap=1) -> LPOutcome:
    """Fit ``sum c_e (x/scale)^e`` to interval constraints ``(point, lo, hi)``.

    Either bound may be None. Returns a verified witness or certificate.
    """
    scale = as_rational(scale)
    proto = DualCertificate(degree, list(basis), [], scale)
    rows, meta = [], []
    for point, lo, hi in constraints:
        if hi is not None:
            rows.append(proto.row(point, "le", hi))
            meta.append((tuple(point), "le", hi))
        if lo is not None:
            rows.append(proto.row(point, "ge", lo))
            meta.append((tuple(point), "ge", lo))
    res = solve_inequalities(rows, len(basis), margin_cap=margin_cap)
    nv = len(basis[0]) if basis else 0
    if res.feasible:
        terms = {}
        for e, c in zip(basis, res.solution):
            if c:
                terms[e] = c / scale ** sum(e)
        witness = MultiPoly(nv, terms)
        for point, lo, hi in constraints:
            v = witness.eval(point)
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                raise AssertionError(f"LP witness fails at {point}: {v}")
        return LPOutcome(degree, witness=witness, margin=res.margin)
    entries = [(y,) + meta[i] for i, y in sorted(res.certificate.items())]
    cert = DualCertificate(degree, list(basis), entries, scale)
    if not cert.verify():
        raise AssertionError("LP certificate failed to re-verify")
    return LPOutcome(degree, certificate=cert, margin=res.margin)


def _check_witness_on_cube(f: BoolFn, spec: ApproxSpec, p: MultiPoly):
    vals = eval_boolean_cube(p)
    for mask, v in enumerate(vals):
        lo, hi = spec.bounds(f.table[mask])
        if not lo <= v <= hi:
            raise AssertionError(f"witness violates spec at {_bits(mask, f.arity)}: {v}")


def lp_feasible(f: BoolFn, d: int, spec: ApproxSpec, guard: int = DEFAULT_GUARD) -> LPOutcome:
    """Degree-``d`` multilinear approximation of ``f`` or an infeasibility certificate."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    size = _basis_size(f.arity, d)
    if size > guard:
        raise GuardExceeded(f"basis of {size} monomials exceeds guard {guard}")
    basis = multilinear_basis(f.arity, d)
    cons = []
    for mask, v in enumerate(f.table):
        lo, hi = spec.bounds(v)
        cons.append((_bits(mask, f.arity), lo, hi))
    out = solve_pointwise(basis, cons, d)
    if out.feasible:
        _check_witness_on_cube(f, spec, out.witness)
    return out


def approx_degree(f: BoolFn, spec: ApproxSpec = ApproxSpec(), guard: int = DEFAULT_GUARD,
                  solver: Callable | None = None) -> DegreeResult:
    """Smallest feasible degree, searched upward from 0."""
    solver = solver or lp_feasible
    outcomes = []
    last_cert = None
    for d in range(f.arity + 1):
        out = solver(f, d, spec, guard=guard)
        outcomes.append(out)
        if out.feasible:
            return DegreeResult(d, out.witness, last_cert, outcomes)
        last_cert = out.certificate
    raise AssertionError("degree N must always be feasible")


def symmetric_reduce_lp(f: BoolFn, d: int, spec: ApproxSpec, guard: int = DEFAULT_GUARD) -> LPOutcome:
    """Same contract as ``lp_feasible`` for symmetric ``f``, over Hamming weights.

    The witness is univariate in the Hamming weight ``mu``.
    """
    if not f.is_symmetric():
        raise ValueError(f"{f.name} is not symmetric")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d + 1 > guard:
        raise GuardExceeded(f"basis of {d + 1} monomials exceeds guard {guard}")
    prof = f.weight_profile()
    basis = [(j,) for j in range(d + 1)]
    cons = [((w,), *spec.bounds(v)) for w, v in enumerate(prof)]
    return solve_pointwise(basis, cons, d)


def theta_sqrt_check(results: Sequence[tuple[int, int]]) -> dict:
    """Monotonicity and degree/sqrt(n) window for (n, degree) pairs."""
    ns = [n for n, _ in results]
    if len(set(ns)) != len(ns):
        raise ValueError("duplicate n in results")
    if not results:
        return {"entries": [], "monotone": True, "contiguous": True, "ratio_window": None}
    entries = sorted(results)
    degs = [d for _, d in entries]
    ratios = [d / math.sqrt(n) for n, d in entries]
    return {
        "entries": [{"n": n, "degree": d, "ratio": round(r, 6)} for (n, d), r in zip(entries, ratios)],
        "monotone": all(a <= b for a, b in zip(degs, degs[1:])),
        "contiguous": [n for n, _ in entries] == list(range(entries[0][0], entries[-1][0] + 1)),
        "ratio_window": [round(min(ratios), 6), round(max(ratios), 6)],
    }
