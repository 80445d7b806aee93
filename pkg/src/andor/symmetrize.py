"""Degree non-increasing symmetrizations.

Two families live here: erasing subscripts (replace a block of Boolean
variables by the mean of a product Bernoulli distribution) and the Laurent
symmetrization of a symmetric pair of variables restricted to the hyperbola
``x*y = 1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import LaurentPoly, MultiPoly, as_rational


class SymmetryError(ValueError):
    """Input lacks the symmetry an operation needs."""


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen.intersection(b) or len(set(b)) != len(b):
                raise ValueError("blocks overlap")
            seen.update(b)
        if seen != set(range(len(seen))):
            raise ValueError("blocks must cover variables 0..N-1")

    @classmethod
    def uniform(cls, m: int, n: int) -> BlockPartition:
        """Blocks ``[i*n, (i+1)*n)``, i.e. variable x_{i,j} sits at ``i*n + j``."""
        return cls(tuple(tuple(range(i * n, (i + 1) * n)) for i in range(m)))

    @property
    def num_vars(self) -> int:
        return sum(len(b) for b in self.blocks)


@dataclass(frozen=True)
class PairScaleParams:
    scale_b: Fraction
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "scale_b", as_rational(self.scale_b))
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if self.scale_b <= 0:
            raise ValueError("scale_b must be positive")
        flat = [v for pr in pairs for v in pr]
        if len(set(flat)) != len(flat):
            raise ValueError("pairs must be disjoint")

    @classmethod
    def consecutive(cls, m: int, b) -> PairScaleParams:
        if m % 2:
            raise ValueError("pairing needs an even number of variables; fix one variable at b first")
        return cls(as_rational(b), tuple((2 * i, 2 * i + 1) for i in range(m // 2)))


# erase-all-subscripts

def erase_all_subscripts(p: MultiPoly, n: int | None = None) -> MultiPoly:
    """Univariate ``q(mu) = p(mu/n, ..., mu/n)`` for multilinear ``p``.

    By linearity this is the expectation of ``p`` under i.i.d. Bernoulli(mu/n)
    inputs.
    """
    n = p.nvars if n is None else n
    if n != p.nvars:
        raise ValueError(f"polynomial has {p.nvars} variables, expected {n}")
    if not p.is_multilinear():
        raise SymmetryError("erase_all_subscripts needs a multilinear polynomial; multilinearize first")
    if n == 0:
        return MultiPoly.const(p.constant_term(), 1)
    out: dict = defaultdict(Fraction)
    for e, c in p.terms.items():
        k = sum(e)
        out[(k,)] += c / Fraction(n) ** k
    return MultiPoly(1, out)


def erase_block(p: MultiPoly, block: Sequence[int], target: int) -> MultiPoly:
    """Collapse the variables of ``block`` into ``target`` (a member of it).

    The variable count is unchanged; the other block members stop occurring.
    """
    block = list(block)
    if target not in block:
        raise ValueError("target must belong to the block")
    if any(p.terms and max(e[v] for e in p.terms) > 1 for v in block):
        raise SymmetryError("block variables must occur multilinearly")
    size = len(block)
    out: dict = defaultdict(Fraction)
    for e, c in p.terms.items():
        k = sum(e[v] for v in block)
        ne = list(e)
        for v in block:
            ne[v] = 0
        ne[target] = k
        out[tuple(ne)] += c / Fraction(size) ** k
    return MultiPoly(p.nvars, out)


def block_erase(p: MultiPoly, partition: BlockPartition) -> MultiPoly:
    """Erase subscripts separately in each block; result has one variable per block."""
    if partition.num_vars != p.nvars:
        raise ValueError(f"partition covers {partition.num_vars} variables, polynomial has {p.nvars}")
    if not p.is_multilinear():
        raise SymmetryError("block_erase needs a multilinear polynomial")
    m = len(partition.blocks)
    sizes = [Fraction(len(b)) for b in partition.blocks]
    owner = {}
    for i, b in enumerate(partition.blocks):
        for v in b:
            owner[v] = i
    out: dict = defaultdict(Fraction)
    for e, c in p.terms.items():
        ne = [0] * m
        for v, k in enumerate(e):
            if k:
                ne[owner[v]] += k
        coef = c
        for i, k in enumerate(ne):
            if k:
                coef /= sizes[i] ** k
        out[tuple(ne)] += coef
    return MultiPoly(m, out)


# Laurent symmetrization

@lru_cache(maxsize=None)
def _pair_basis_coeffs(i: int) -> tuple[Fraction, ...]:
    if i == 0:
        return (Fraction(2),)
    if i == 1:
        return (Fraction(0), Fraction(1))
    a = _pair_basis_coeffs(i - 1)
    b = _pair_basis_coeffs(i - 2)
    # P_i = t*P_{i-1} - P_{i-2}
    out = [Fraction(0)] + list(a)
    for k, c in enumerate(b):
        out[k] -= c
    return tuple(out)


def pair_basis_poly(i: int) -> MultiPoly:
    """Univariate ``P_i`` with ``P_i(s + 1/s) = s**i + s**-i``."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return MultiPoly.univariate(_pair_basis_coeffs(i))


def laurent_to_pair_basis(ell: LaurentPoly) -> MultiPoly:
    """Rewrite a palindromic Laurent polynomial as a polynomial in ``t = s + 1/s``."""
    if not ell.is_palindromic():
        raise SymmetryError(f"Laurent coefficients are not symmetric: {ell!r}")
    coeffs: dict = defaultdict(Fraction)
    for k, c in ell.terms.items():
        if k == 0:
            coeffs[0] += c
        elif k > 0:
            for j, pc in enumerate(_pair_basis_coeffs(k)):
                coeffs[j] += c * pc
    return MultiPoly(1, {(j,): c for j, c in coeffs.items()})


def _check_pair(p: MultiPoly, i: int, j: int):
    if i == j or not (0 <= i < p.nvars and 0 <= j < p.nvars):
        raise ValueError(f"bad pair ({i}, {j}) for {p.nvars} variables")
    perm = list(range(p.nvars))
    perm[i], perm[j] = j, i
    if p.permute(perm) != p:
        raise SymmetryError(f"polynomial is not symmetric in variables {i} and {j}")


def laurent_symmetrize(p: MultiPoly, pair: tuple[int, int]) -> MultiPoly:
    """Replace a symmetric pair ``(x_i, x_j)`` by one variable ``t``.

    The result satisfies ``q(..., s + 1/s, ...) = p(..., s, ..., 1/s, ...)``
    with the other variables untouched. ``t`` takes the slot of ``x_i`` and
    ``x_j`` is removed, so the result has ``nvars - 1`` variables.
    """
    i, j = pair
    _check_pair(p, i, j)
    rest = [v for v in range(p.nvars) if v != j]
    t_slot = rest.index(i)
    # group by the exponents of the non-pair variables
    groups: dict = defaultdict(lambda: defaultdict(Fraction))
    for e, c in p.terms.items():
        key = tuple(e[v] for v in rest if v != i)
        groups[key][e[i] - e[j]] += c
    out: dict = defaultdict(Fraction)
    for key, lterms in groups.items():
        ell = LaurentPoly(lterms)
        q = laurent_to_pair_basis(ell)
        for (k,), c in q.terms.items():
            ne = list(key)
            ne.insert(t_slot, k)
            out[tuple(ne)] += c
    return MultiPoly(p.nvars - 1, out)


def rescale(p: MultiPoly, vars: Sequence[int], factor) -> MultiPoly:
    """``p`` with each variable in ``vars`` replaced by ``factor * var``."""
    factor = as_rational(factor)
    vars = list(vars)
    out = {}
    for e, c in p.terms.items():
        out[e] = c * factor ** sum(e[v] for v in vars)
    return MultiPoly(p.nvars, out)


def laurent_symmetrize_pairs(p: MultiPoly, params: PairScaleParams) -> MultiPoly:
    """Rescale every paired variable by ``b`` and Laurent-symmetrize each pair.

    Output variable ``i`` is ``t_i`` for ``params.pairs[i]``, so that
    ``q(t_1, ...) = p(b*s_1, b/s_1, ...)`` whenever ``t_i = s_i + 1/s_i``.
    """
    if p.nvars % 2:
        raise ValueError("odd number of variables; fix the last one at b first")
    flat = sorted(v for pr in params.pairs for v in pr)
    if flat != list(range(p.nvars)):
        raise ValueError("pairs must cover every variable exactly once")
    q = rescale(p, flat, params.scale_b)
    # current[v] = present index of original variable v
    current = list(range(p.nvars))
    for a, b in params.pairs:
        q = laurent_symmetrize(q, (current[a], current[b]))
        gone = current[b]
        current = [c - 1 if c > gone else c for c in current]
    order = [current[a] for a, _ in params.pairs]
    perm = [0] * len(order)
    for new, old in enumerate(order):
        perm[old] = new
    return q.permute(perm)
