from fractions import Fraction

from hypothesis import given, strategies as st

from andor.bernstein import Box, bernstein_coeffs, bernstein_enclosure, box_enclosure, certify_bounds
from andor.poly import MultiPoly

from conftest import boxes_with_points, polys

t = MultiPoly.var(0, 1)


def test_examples():
    assert bernstein_enclosure(t, Box.cube(1, 0, 1)) == (0, 1)
    lo, hi = bernstein_enclosure(t * t, Box.cube(1, -1, 1), 0)
    assert lo <= 0 and hi >= 1
    lo, hi = bernstein_enclosure(t * (1 - t), Box.cube(1, 0, 1), 4)
    assert -Fraction(1, 16) <= lo <= 0 and Fraction(1, 4) <= hi <= Fraction(1, 4) + Fraction(1, 16)


def test_corner_coefficients_are_values():
    x = [MultiPoly.var(i, 2) for i in range(2)]
    p = x[0] ** 2 * x[1] - 3 * x[1] + x[0]
    box = Box(((Fraction(-1), Fraction(2)), (Fraction(1, 2), Fraction(3))))
    c = bernstein_coeffs(p, box)
    assert c[(0, 0)] == p.eval([-1, Fraction(1, 2)])
    assert c[(2, 1)] == p.eval([2, 3])


@given(st.data())
def test_enclosure_sound(data):
    p = data.draw(polys(maxdeg=5))
    ivs, pt = data.draw(boxes_with_points(p.nvars))
    depth = data.draw(st.integers(0, 3))
    lo, hi = bernstein_enclosure(p, Box(ivs), depth)
    assert lo <= p.eval(pt) <= hi


@given(polys(nvars=st.integers(1, 2), maxdeg=5), st.data())
def test_enclosure_nested_in_depth(p, data):
    ivs, _ = data.draw(boxes_with_points(p.nvars))
    prev = box_enclosure(p, Box(ivs))
    for d in range(1, 4):
        cur = bernstein_enclosure(p, Box(ivs), d)
        assert prev[0] <= cur[0] and cur[1] <= prev[1]
        prev = cur


def test_certify():
    box = Box.cube(1, 0, 1)
    assert certify_bounds(t * (1 - t), box, 0, Fraction(1, 4)).status == "proven"
    bad = certify_bounds(t * (1 - t), box, 0, Fraction(1, 5))
    assert bad.status == "counterexample" and bad.value > Fraction(1, 5)
    assert box.contains(bad.witness)
    near = certify_bounds(t * (1 - t), box, 0, Fraction(1, 4), max_depth=0)
    assert near.status in ("proven", "undecided")
