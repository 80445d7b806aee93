import itertools
import random
from fractions import Fraction

from hypothesis import settings, strategies as st

from andor.poly import MultiPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])


def rand_q(rng, span=9, den=7):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_poly(rng, nvars, maxdeg, nterms=6):
    terms = {}
    for _ in range(nterms):
        e = [0] * nvars
        for _ in range(rng.randint(0, maxdeg)):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = rand_q(rng)
    return MultiPoly(nvars, terms)


def random_multilinear(rng, nvars, nterms=8):
    terms = {}
    for _ in range(nterms):
        terms[tuple(rng.randint(0, 1) for _ in range(nvars))] = rand_q(rng)
    return MultiPoly(nvars, terms)


def random_symmetric_bivariate(rng, maxdeg):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        i = rng.randint(0, maxdeg)
        j = rng.randint(0, maxdeg - i)
        c = rand_q(rng)
        terms[(i, j)] = terms.get((i, j), 0) + c
        if i != j:
            terms[(j, i)] = terms.get((j, i), 0) + c
    return MultiPoly(2, terms)


def nonzero_rational(rng):
    return Fraction(rng.randint(1, 50), rng.randint(1, 50)) * rng.choice((1, -1))


def cube(n):
    return itertools.product((0, 1), repeat=n)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def polys(draw, nvars=st.integers(1, 3), maxdeg=4):
    n = draw(nvars)
    exps = st.tuples(*[st.integers(0, maxdeg) for _ in range(n)]).filter(lambda e: sum(e) <= maxdeg)
    terms = draw(st.dictionaries(exps, rationals, max_size=6))
    return MultiPoly(n, terms)


@st.composite
def boxes_with_points(draw, nvars):
    ivs, pt = [], []
    for _ in range(nvars):
        lo = draw(st.fractions(-3, 3, max_denominator=8))
        w = draw(st.fractions(0, 3, max_denominator=8))
        u = draw(st.fractions(0, 1, max_denominator=16))
        ivs.append((lo, lo + w))
        pt.append(lo + u * w)
    return tuple(ivs), tuple(pt)


def rng_for(seed):
    return random.Random(seed)
