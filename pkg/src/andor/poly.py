"""Exact sparse polynomials over the rationals.

``MultiPoly`` maps exponent tuples to ``Fraction`` coefficients; zero
coefficients are never stored, so structural equality is polynomial equality.
``LaurentPoly`` is the univariate analogue allowing negative exponents.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction


class PolyFormatError(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'num/den' string")
    return Fraction(x)


class MultiPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms: dict[tuple, Fraction] = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MultiPoly:
        # trusted path: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars: int = 0) -> MultiPoly:
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> MultiPoly:
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> MultiPoly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def univariate(cls, coeffs: Sequence) -> MultiPoly:
        """Build ``sum coeffs[i] * t**i``."""
        return cls(1, {(i,): c for i, c in enumerate(coeffs)})

    # basic queries

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_multilinear(self) -> bool:
        return all(x <= 1 for e in self.terms for x in e)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def univariate_coeffs(self) -> list[Fraction]:
        if self.nvars != 1:
            raise ValueError("not univariate")
        d = self.degree()
        return [self.terms.get((i,), Fraction(0)) for i in range(d + 1)]

    # arithmetic

    def _check(self, other: MultiPoly):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            if not c:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / as_rational(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == MultiPoly.const(other, self.nvars)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_str()})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # evaluation and substitution

    def __call__(self, *point):
        return self.eval(point)

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        point = [as_rational(x) for x in point]
        # cache powers per variable
        pows: list[dict] = [{} for _ in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    pk = pows[i].get(k)
                    if pk is None:
                        pk = pows[i][k] = point[i] ** k
                    v *= pk
            total += v
        return total

    def compose(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``images[i]`` for variable ``i``; all images share one ring."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return MultiPoly._raw(0, dict(self.terms))
        target = images[0].nvars
        for im in images:
            if im.nvars != target:
                raise ValueError("images must share a variable count")
        powcache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powcache:
                powcache[key] = images[i] ** k
            return powcache[key]

        out = MultiPoly._raw(target, {})
        for e, c in self.terms.items():
            term = MultiPoly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def permute(self, perm: Sequence[int]) -> MultiPoly:
        """Rename variable ``i`` to ``perm[i]``."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return MultiPoly._raw(self.nvars, out)

    def embed(self, nvars: int, positions: Sequence[int]) -> MultiPoly:
        """Place variable ``i`` at index ``positions[i]`` of a larger ring."""
        if len(positions) != self.nvars or len(set(positions)) != len(positions):
            raise ValueError("positions must be distinct, one per variable")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] = k
            out[tuple(ne)] = c
        return MultiPoly._raw(nvars, out)

    def drop_unused(self, keep: Sequence[int]) -> MultiPoly:
        """Restrict to the variables in ``keep``; the others must not occur."""
        keep = list(keep)
        gone = set(range(self.nvars)) - set(keep)
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in gone):
                raise ValueError("dropped variable still occurs")
            out[tuple(e[i] for i in keep)] = c
        return MultiPoly._raw(len(keep), out)


def multilinearize(p: MultiPoly) -> MultiPoly:
    out: dict = defaultdict(Fraction)
    for e, c in p.terms.items():
        out[tuple(min(k, 1) for k in e)] += c
    return MultiPoly._raw(p.nvars, {e: c for e, c in out.items() if c})


def symmetrize_average(p: MultiPoly, vars: Iterable[int]) -> MultiPoly:
    """Mean of ``p`` over all permutations of the variables in ``vars``."""
    vars = sorted(set(vars))
    if not vars:
        raise ValueError("need at least one variable to symmetrize over")
    if len(vars) > 8:
        raise ValueError("permutation averaging is limited to 8 variables")
    if any(not 0 <= v < p.nvars for v in vars):
        raise IndexError("variable out of range")
    out: dict = defaultdict(Fraction)
    count = math.factorial(len(vars))
    for e, c in p.terms.items():
        sub = [e[v] for v in vars]
        share = c / count
        for perm in itertools.permutations(sub):
            ne = list(e)
            for v, k in zip(vars, perm):
                ne[v] = k
            out[tuple(ne)] += share
    return MultiPoly._raw(p.nvars, {e: c for e, c in out.items() if c})


def substitute_affine(p: MultiPoly, var: int, scale, offset) -> MultiPoly:
    """Return ``p`` with variable ``var`` replaced by ``scale*var + offset``."""
    if not 0 <= var < p.nvars:
        raise IndexError("variable out of range")
    images = [MultiPoly.var(i, p.nvars) for i in range(p.nvars)]
    images[var] = images[var] * as_rational(scale) + as_rational(offset)
    return p.compose(images)


def fix_variable(p: MultiPoly, var: int, value) -> MultiPoly:
    """Set variable ``var`` to ``value``; the result has one fewer variable."""
    if not 0 <= var < p.nvars:
        raise IndexError("variable out of range")
    value = as_rational(value)
    out: dict = defaultdict(Fraction)
    for e, c in p.terms.items():
        out[e[:var] + e[var + 1:]] += c * value ** e[var]
    return MultiPoly._raw(p.nvars - 1, {e: c for e, c in out.items() if c})


def eval_poly(p: MultiPoly, point: Sequence) -> Fraction:
    return p.eval(point)


def eval_boolean_cube(p: MultiPoly) -> list[Fraction]:
    """Values of ``p`` on all of {0,1}^n, indexed by the bitmask of the point.

    Bit ``i`` of the index is coordinate ``i``. Uses the subset-sum transform on
    the multilinear coefficients, so the cost is O(n 2^n) exact additions.
    """
    n = p.nvars
    vals = [Fraction(0)] * (1 << n)
    for e, c in multilinearize(p).terms.items():
        mask = 0
        for i, k in enumerate(e):
            if k:
                mask |= 1 << i
        vals[mask] += c
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                vals[mask] += vals[mask ^ bit]
    return vals


class LaurentPoly:
    """Univariate polynomial in ``s`` and ``1/s``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms: dict[int, Fraction] = {}
        for k, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                self.terms[int(k)] = self.terms.get(int(k), 0) + c
                if not self.terms[int(k)]:
                    del self.terms[int(k)]

    @classmethod
    def s(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    def degree(self) -> int:
        """max |exponent|; -1 for the zero polynomial."""
        return max((abs(k) for k in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_palindromic(self) -> bool:
        return all(self.terms.get(-k, 0) == c for k, c in self.terms.items())

    def inverted(self) -> LaurentPoly:
        """The polynomial ``l(1/s)``."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def _coerce(self, other):
        return other if isinstance(other, LaurentPoly) else LaurentPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = defaultdict(Fraction)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] += c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return LaurentPoly({e * k: c ** k})
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return self == LaurentPoly.const(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        body = " + ".join(f"({c})*s^{k}" for k, c in sorted(self.terms.items()))
        return f"LaurentPoly({body})"

    def eval(self, s) -> Fraction:
        s = as_rational(s)
        if not s and any(k < 0 for k in self.terms):
            raise ZeroDivisionError("negative power at s = 0")
        return sum((c * s ** k for k, c in self.terms.items()), Fraction(0))


def univariate_to_laurent(q: MultiPoly, t: LaurentPoly) -> LaurentPoly:
    """Evaluate a univariate ``q`` at the Laurent polynomial ``t`` (Horner)."""
    coeffs = q.univariate_coeffs()
    out = LaurentPoly()
    for c in reversed(coeffs):
        out = out * t + c
    return out


# text format: header "vars k", then "num/den : e1 ... ek" per term

def dumps(p: MultiPoly) -> str:
    lines = [f"vars {p.nvars}"]
    for e in sorted(p.terms):
        c = p.terms[e]
        exps = " ".join(str(k) for k in e)
        lines.append(f"{c.numerator}/{c.denominator} : {exps}".rstrip())
    return "\n".join(lines) + "\n"


def _parse_fraction(tok: str) -> Fraction:
    try:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise PolyFormatError(f"bad coefficient {tok!r}; expected num/den") from None


def loads(text: str) -> MultiPoly:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise PolyFormatError("empty polynomial file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "vars" or not head[1].isdigit():
        raise PolyFormatError(f"bad header {lines[0]!r}; expected 'vars k'")
    k = int(head[1])
    terms: dict = {}
    for ln in lines[1:]:
        if ":" not in ln:
            raise PolyFormatError(f"bad term line {ln!r}")
        ctext, etext = ln.split(":", 1)
        c = _parse_fraction(ctext.strip())
        try:
            exps = tuple(int(x) for x in etext.split())
        except ValueError:
            raise PolyFormatError(f"bad exponents in {ln!r}") from None
        if len(exps) != k or any(x < 0 for x in exps):
            raise PolyFormatError(f"term {ln!r} does not have {k} nonnegative exponents")
        if exps in terms:
            raise PolyFormatError(f"duplicate term {exps}")
        terms[exps] = c
    return MultiPoly(k, terms)


def read_poly(path) -> MultiPoly:
    with open(path) as fh:
        return loads(fh.read())


def write_poly(p: MultiPoly, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(p))
