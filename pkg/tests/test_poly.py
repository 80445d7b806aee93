from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from andor.poly import LaurentPoly, MultiPoly, PolyFormatError, dumps, eval_boolean_cube, \
    fix_variable, loads, multilinearize, substitute_affine, symmetrize_average, univariate_to_laurent

from conftest import cube, polys, random_poly, rng_for

x = [MultiPoly.var(i, 2) for i in range(2)]
OR2 = x[0] + x[1] - x[0] * x[1]


def test_eval_examples():
    assert OR2.eval([1, 1]) == 1
    assert OR2.eval([0, 0]) == 0
    t = MultiPoly.var(0, 1)
    assert (t ** 2).eval([Fraction(2, 3)]) == Fraction(4, 9)


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        OR2.eval([1])


def test_floats_rejected():
    with pytest.raises(TypeError):
        MultiPoly.const(0.5)


def test_multilinearize_examples():
    t = MultiPoly.var(0, 1)
    assert multilinearize(t ** 3) == t
    assert multilinearize(x[0] ** 2 * x[1] + x[1] ** 2) == x[0] * x[1] + x[1]
    assert multilinearize(MultiPoly.const(5, 1)) == MultiPoly.const(5, 1)


def test_multilinearize_agrees_on_cube():
    rng = rng_for(1)
    for _ in range(40):
        n = rng.randint(1, 6)
        p = random_poly(rng, n, 6)
        m = multilinearize(p)
        assert m.is_multilinear() and m.degree() <= p.degree()
        for pt in cube(n):
            assert m.eval(pt) == p.eval(pt)


def test_symmetrize_examples():
    assert symmetrize_average(x[0], [0, 1]) == (x[0] + x[1]) / 2
    assert symmetrize_average(x[0] * x[1], [0, 1]) == x[0] * x[1]
    p = x[0] ** 2 * x[1]
    assert symmetrize_average(p, [0, 1]) == (x[0] ** 2 * x[1] + x[0] * x[1] ** 2) / 2


def test_symmetrize_limits():
    with pytest.raises(ValueError):
        symmetrize_average(x[0], [])
    with pytest.raises(ValueError):
        symmetrize_average(MultiPoly.var(0, 9), range(9))


@given(polys(nvars=st.integers(2, 4)))
def test_symmetrize_properties(p):
    s = symmetrize_average(p, range(p.nvars))
    assert s.degree() <= p.degree()
    assert symmetrize_average(s, range(p.nvars)) == s
    perm = list(range(p.nvars))[::-1]
    assert s.permute(perm) == s


def test_substitute_affine_examples():
    t = MultiPoly.var(0, 1)
    assert substitute_affine(t, 0, 1, -2) == t - 2
    assert substitute_affine(t ** 2, 0, 2, 0) == 4 * t ** 2
    a, b = Fraction(1, 3), Fraction(2, 3)
    scale = a * b / (b - a) ** 2
    assert scale == 2
    tbar = substitute_affine(t, 0, 1, -2) * scale
    assert tbar == 2 * t - 4
    assert tbar.eval([2]) == 0 and tbar.eval([b / a + a / b]) == 1


@given(polys(), st.fractions(-4, 4, max_denominator=9).filter(bool), st.fractions(-4, 4, max_denominator=9))
def test_substitute_affine_inverse(p, s, off):
    q = substitute_affine(p, 0, s, off)
    assert q.degree() == p.degree()
    assert substitute_affine(q, 0, 1 / s, -off / s) == p


def test_fix_variable_examples():
    assert fix_variable(x[0] * x[1], 1, 1) == MultiPoly.var(0, 1)
    assert fix_variable(x[0] + x[1], 1, Fraction(2, 3)) == MultiPoly.var(0, 1) + Fraction(2, 3)
    assert fix_variable((x[0] - x[1]) ** 2, 1, 0) == MultiPoly.var(0, 1) ** 2


@given(polys(), st.fractions(-3, 3, max_denominator=5))
def test_fix_variable_degree(p, v):
    q = fix_variable(p, 0, v)
    assert q.nvars == p.nvars - 1
    assert q.degree() <= p.degree()


def test_boolean_cube_matches_eval():
    rng = rng_for(2)
    p = random_poly(rng, 5, 5, 12)
    vals = eval_boolean_cube(p)
    for mask in range(32):
        assert vals[mask] == p.eval([(mask >> i) & 1 for i in range(5)])


@given(polys())
def test_text_roundtrip(p):
    assert loads(dumps(p)) == p


@pytest.mark.parametrize("text", ["", "vars x", "vars 2\n1/2 : 1", "vars 1\n0.5 : 1",
                                  "vars 1\n1/0 : 1", "vars 1\n1/2 : 1\n1/3 : 1", "vars 1\n1/2 1"])
def test_text_rejects(text):
    with pytest.raises(PolyFormatError):
        loads(text)


def test_laurent_basics():
    s = LaurentPoly.s()
    ell = s + s.inverted()
    assert ell.is_palindromic() and ell.degree() == 1
    assert (ell ** 2) == s ** 2 + 2 + s.inverted() ** 2
    t = MultiPoly.var(0, 1)
    assert univariate_to_laurent(t ** 2 - 2, ell) == s ** 2 + s.inverted() ** 2
