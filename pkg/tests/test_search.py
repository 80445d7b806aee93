import math
from fractions import Fraction

import pytest

from andor.adeg import GuardExceeded
from andor.poly import MultiPoly
from andor.search import fit_region_poly, problem41_search, region_constraints, total_degree_basis, \
    unit_box_spec


def test_basis_size():
    for m in range(1, 4):
        for d in range(5):
            assert len(total_degree_basis(m, d)) == math.comb(d + m, m)


def test_m1_d1_certified():
    out, rep = problem41_search(1, 1)
    assert rep["status"] == "certified"
    assert out.witness == MultiPoly.var(0, 1)


def test_m2_d1_certificate():
    out, rep = problem41_search(2, 1)
    assert rep["status"] == "infeasible"
    cert = out.certificate
    assert cert.contradiction() > 0 and Fraction(rep["contradiction"]) == cert.contradiction()


def test_grid_constraints_classified():
    spec = unit_box_spec(2)
    for pt, lo, hi in region_constraints(spec, 6):
        if any(x <= Fraction(1, 3) for x in pt):
            assert (lo, hi) == (0, Fraction(1, 3))
        else:
            assert all(x >= Fraction(2, 3) for x in pt) and (lo, hi) == (Fraction(2, 3), 1)


def test_guard():
    with pytest.raises(GuardExceeded):
        fit_region_poly(unit_box_spec(3), 6, guard=20)
