"""Range enclosures of polynomials over boxes from tensor Bernstein coefficients."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly, as_rational


@dataclass(frozen=True)
class Box:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        ivs = tuple((as_rational(lo), as_rational(hi)) for lo, hi in self.intervals)
        for lo, hi in ivs:
            if lo > hi:
                raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def cube(cls, dim: int, lo, hi) -> Box:
        return cls(((lo, hi),) * dim)

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def widths(self) -> list[Fraction]:
        return [hi - lo for lo, hi in self.intervals]

    def contains(self, point: Sequence) -> bool:
        return len(point) == self.dim and all(
            lo <= as_rational(x) <= hi for x, (lo, hi) in zip(point, self.intervals))

    def bisect(self, axis: int | None = None) -> tuple[Box, Box]:
        if axis is None:
            w = self.widths()
            axis = max(range(self.dim), key=lambda i: (w[i], -i))
        lo, hi = self.intervals[axis]
        mid = (lo + hi) / 2
        left = list(self.intervals)
        right = list(self.intervals)
        left[axis] = (lo, mid)
        right[axis] = (mid, hi)
        return Box(tuple(left)), Box(tuple(right))

    def midpoint(self) -> tuple[Fraction, ...]:
        return tuple((lo + hi) / 2 for lo, hi in self.intervals)

    def as_strs(self) -> list[list[str]]:
        return [[str(lo), str(hi)] for lo, hi in self.intervals]


def _to_unit_box(p: MultiPoly, box: Box) -> MultiPoly:
    images = [MultiPoly.const(lo, p.nvars) + MultiPoly.var(i, p.nvars) * (hi - lo)
              for i, (lo, hi) in enumerate(box.intervals)]
    return p.compose(images)


def bernstein_coeffs(p: MultiPoly, box: Box) -> dict[tuple, Fraction]:
    """Tensor Bernstein coefficients of ``p`` over ``box``.

    The per-variable degree is the degree of ``p`` in that variable. Corner
    coefficients equal the values of ``p`` at the box corners.
    """
    if box.dim != p.nvars:
        raise ValueError(f"box has dimension {box.dim}, polynomial has {p.nvars} variables")
    q = _to_unit_box(p, box)
    degs = [max(p.degree_in(i), 0) for i in range(p.nvars)]
    coeffs: dict = {}
    for e in itertools.product(*(range(d + 1) for d in degs)):
        coeffs[e] = q.terms.get(e, Fraction(0))
    # b_k = sum_{j<=k} C(k,j)/C(d,j) a_j, one axis at a time
    for axis, d in enumerate(degs):
        if d == 0:
            continue
        new = {}
        for k in coeffs:
            kk = k[axis]
            total = Fraction(0)
            for j in range(kk + 1):
                src = k[:axis] + (j,) + k[axis + 1:]
                a = coeffs[src]
                if a:
                    total += a * Fraction(math.comb(kk, j), math.comb(d, j))
            new[k] = total
        coeffs = new
    return coeffs


def box_enclosure(p: MultiPoly, box: Box) -> tuple[Fraction, Fraction]:
    """One-shot enclosure ``[min b, max b]`` without subdivision."""
    if p.nvars == 0:
        c = p.constant_term()
        return c, c
    vals = bernstein_coeffs(p, box).values()
    return min(vals), max(vals)


def _corner_values(p: MultiPoly, box: Box, coeffs: dict) -> list[tuple[tuple, Fraction]]:
    degs = [max(p.degree_in(i), 0) for i in range(p.nvars)]
    out = []
    for choice in itertools.product((0, 1), repeat=p.nvars):
        key = tuple(d if c else 0 for c, d in zip(choice, degs))
        pt = tuple(hi if c else lo for c, (lo, hi) in zip(choice, box.intervals))
        out.append((pt, coeffs[key]))
    return out


def _refine_min(p: MultiPoly, box: Box, max_depth: int) -> Fraction:
    boxes = [box]
    for level in range(max_depth + 1):
        scored = []
        best_value = None
        for b in boxes:
            c = bernstein_coeffs(p, b)
            lo = min(c.values())
            corner = min(v for _, v in _corner_values(p, b, c))
            best_value = corner if best_value is None else min(best_value, corner)
            scored.append((lo, b))
        # boxes whose lower bound exceeds a known value cannot hold the minimum
        keep = [(lo, b) for lo, b in scored if lo <= best_value]
        bound = min(lo for lo, _ in keep)
        if level == max_depth or bound == best_value:
            return bound
        boxes = [half for _, b in keep for half in b.bisect()]
    return bound  # pragma: no cover


def bernstein_enclosure(p: MultiPoly, box: Box, max_depth: int = 0) -> tuple[Fraction, Fraction]:
    """Sound rational bounds ``lo <= p(x) <= hi`` for all ``x`` in ``box``.

    Each depth level bisects the boxes that may still hold the extremum, so the
    enclosure is nested in the one from any smaller depth.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    if p.nvars == 0:
        c = p.constant_term()
        return c, c
    return _refine_min(p, box, max_depth), -_refine_min(-p, box, max_depth)


@dataclass
class Certification:
    status: str  # proven | counterexample | undecided
    witness: tuple | None = None
    value: Fraction | None = None
    boxes: int = 0
    open_box: Box | None = None


def certify_bounds(p: MultiPoly, box: Box, lo=None, hi=None, max_depth: int = 12) -> Certification:
    """Prove ``lo <= p <= hi`` on ``box`` or find a point where it fails.

    Depth counts single bisections along the widest axis. A counterexample is
    always an exact evaluation at a box corner or midpoint.
    """
    lo = None if lo is None else as_rational(lo)
    hi = None if hi is None else as_rational(hi)

    def bad(v):
        return (lo is not None and v < lo) or (hi is not None and v > hi)

    if p.nvars == 0:
        v = p.constant_term()
        return Certification("counterexample", (), v, 1) if bad(v) else Certification("proven", boxes=1)
    stack = [(box, 0)]
    count = 0
    undecided = None
    while stack:
        b, depth = stack.pop()
        count += 1
        c = bernstein_coeffs(p, b)
        for pt, v in _corner_values(p, b, c):
            if bad(v):
                return Certification("counterexample", pt, v, count)
        vals = c.values()
        if (lo is None or min(vals) >= lo) and (hi is None or max(vals) <= hi):
            continue
        mid = b.midpoint()
        v = p.eval(mid)
        if bad(v):
            return Certification("counterexample", mid, v, count)
        if depth >= max_depth:
            undecided = undecided or b
            continue
        left, right = b.bisect()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    if undecided is not None:
        return Certification("undecided", boxes=count, open_box=undecided)
    return Certification("proven", boxes=count)
