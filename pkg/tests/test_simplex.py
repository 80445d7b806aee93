from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from andor.simplex import Row, certificate_value, check_point, solve_inequalities, solve_standard

F = Fraction


def test_standard_form_optimum():
    # min -x - y  s.t. x + s1 = 4, y + s2 = 3, x + y + s3 = 5
    A = [[1, 0, 1, 0, 0], [0, 1, 0, 1, 0], [1, 1, 0, 0, 1]]
    res = solve_standard(A, [4, 3, 5], [-1, -1, 0, 0, 0])
    assert res.status == "optimal" and res.objective == -5
    # strong duality
    assert sum(y * b for y, b in zip(res.duals, [4, 3, 5])) == -5


def test_standard_form_infeasible_farkas():
    A = [[1, 1], [1, 1]]
    b = [1, 2]
    res = solve_standard(A, b, [0, 0])
    assert res.status == "infeasible"
    y = res.farkas
    assert all(sum(y[i] * A[i][j] for i in range(2)) <= 0 for j in range(2))
    assert sum(yi * bi for yi, bi in zip(y, b)) > 0


def test_unbounded():
    res = solve_standard([[1, -1]], [0], [-1, 0])
    assert res.status == "unbounded"


def test_bad_hint_is_harmless():
    A = [[1, 0, 1, 0, 0], [0, 1, 0, 1, 0], [1, 1, 0, 0, 1]]
    cold = solve_standard(A, [4, 3, 5], [-1, -1, 0, 0, 0])
    warm = solve_standard(A, [4, 3, 5], [-1, -1, 0, 0, 0], basis_hint=[2, 3, 4, 0, 1])
    assert cold.objective == warm.objective


def test_inequalities_feasible_margin():
    # 0 <= c <= 1 as two rows
    rows = [Row((F(1),), F(1)), Row((F(-1),), F(0))]
    res = solve_inequalities(rows, 1)
    assert res.feasible and res.margin == F(1, 2) and res.solution == [F(1, 2)]


def test_inequalities_infeasible_certificate():
    rows = [Row((F(1),), F(0)), Row((F(-1),), F(-1))]  # c <= 0 and c >= 1
    res = solve_inequalities(rows, 1)
    assert not res.feasible
    assert certificate_value(rows, res.certificate) > 0


def test_certificate_value_rejects_bad_multipliers():
    rows = [Row((F(1),), F(0)), Row((F(-1),), F(-1))]
    with pytest.raises(ValueError):
        certificate_value(rows, {0: F(-1)})
    with pytest.raises(ValueError):
        certificate_value(rows, {0: F(1)})


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-6, 6)), min_size=1, max_size=14),
       st.booleans())
def test_exactly_one_outcome(raw, warm):
    rows = [Row((F(a), F(b)), F(h)) for a, b, h in raw]
    res = solve_inequalities(rows, 2, warm_start=warm)
    if res.feasible:
        assert check_point(rows, res.solution) is None
        assert not res.certificate
    else:
        assert res.solution is None
        assert certificate_value(rows, res.certificate) > 0
