import itertools
import random
from fractions import Fraction

import pytest

from andor.poly import MultiPoly
from andor.symmetrize import BlockPartition, block_erase
from andor.pipeline import BlockProductPoly, ConditionViolation, RegionSpec, RobustRegionSpec, \
    ShiftParams, and_or_erased_closed_form, thm31_reduce, thm32_symmetrize, unsymmetrize, \
    verify_nor_approx, verify_region_conditions, weaker_conditions_check

F = Fraction
A, B = F(1, 3), F(2, 3)
BETA = F(2, 3)


def lagrange(nodes, values):
    t = MultiPoly.var(0, 1)
    out = MultiPoly.const(0, 1)
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        term = MultiPoly.const(yi, 1)
        for j, xj in enumerate(nodes):
            if j != i:
                term = term * (t - xj) / (xi - xj)
        out = out + term
    return out


def lift(q, i, m):
    return q.embed(m, [i])


# specs

def test_spec_invariants():
    RobustRegionSpec(2, 6, A, B)
    with pytest.raises(ValueError, match="m must be at least 2"):
        RobustRegionSpec(1, 6, A, B)
    with pytest.raises(ValueError, match="a < b"):
        RobustRegionSpec(2, 6, B, B)
    with pytest.raises(ValueError, match="b/a < n/b"):
        RobustRegionSpec(2, 1, A, B)
    with pytest.raises(ValueError, match="alpha"):
        RobustRegionSpec(2, 6, A, B, F(2, 3), F(1, 3))
    RegionSpec(1, 1, A, B)  # the unit-box problem needs the base class


def test_shift_params():
    sp = ShiftParams.from_spec(RobustRegionSpec(2, 6, A, B))
    assert sp.scale == 2 and sp.k == F(128, 9) and sp.k_floor == 14
    rng = random.Random(0)
    for _ in range(200):
        a = F(rng.randint(1, 20), rng.randint(1, 20))
        b = a * F(rng.randint(11, 40), 10)
        n = b * b / a * F(rng.randint(11, 60), 10)
        spec = RegionSpec(2, n, a, b)
        k = a * (n - b) ** 2 / (n * (b - a) ** 2)
        assert ShiftParams.k_from_endpoint(spec) == k


def test_shift_endpoints():
    sp = ShiftParams.from_spec(RobustRegionSpec(2, 6, A, B))
    for t, want in ((F(2), 0), (B / A + A / B, 1)):
        assert (t - 2) * sp.scale == want


# region checks

def test_constant_beta_fails_case1():
    spec = RobustRegionSpec(2, 6, A, B)
    rep = verify_region_conditions(MultiPoly.const(BETA, 2), spec)
    outcome = {c["name"]: c["outcome"] for c in rep["conditions"]}
    assert outcome == {"case1": "fail", "case2": "pass"}
    assert rep["status"] == "falsified"


def test_or4_product_grid_report():
    mu = MultiPoly.var(0, 1)
    q = mu - mu ** 2 / 4
    p = lift(q, 0, 2) * lift(q, 1, 2)
    spec = RobustRegionSpec(2, 4, F(1, 4), F(3, 4), F(1, 3), F(2, 3))
    rep = verify_region_conditions(p, spec, resolution=2)
    assert rep["resolution"] == 2
    assert rep["status"] in ("falsified", "grid-pass (falsification only, not a proof)")
    assert sum(c["points"] for c in rep["conditions"]) > 0


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        verify_region_conditions(MultiPoly.const(0, 3), RobustRegionSpec(2, 6, A, B))


def test_certified_mode():
    spec = RegionSpec(1, 1, A, B)
    rep = verify_region_conditions(MultiPoly.var(0, 1), spec, "certified")
    assert rep["status"] == "certified"
    bad = verify_region_conditions(MultiPoly.var(0, 1) * F(1, 2), spec, "certified")
    assert bad["status"] == "falsified"


def _strong_grid_fixture():
    """Passes the strong grid conditions on [0,2]^2 with a=1/3, b=3/2, resolution 1."""
    h = lagrange([F(0), A, F(3, 2), F(2)], [0, 0, 1, 1])
    return lift(h, 0, 2) * lift(h, 1, 2)


def test_weaker_conditions_bump():
    spec = RegionSpec(2, 2, A, F(3, 2))
    g = _strong_grid_fixture()
    assert verify_region_conditions(g, spec, resolution=1)["passed"]
    assert weaker_conditions_check(g, spec, resolution=1)["passed"]
    x1 = MultiPoly.var(0, 2)
    bump = 3 * x1 * (x1 - A) * (x1 - F(3, 2)) * (x1 - 2)
    p = g + bump
    assert p.eval([1, 0]) == 1
    strong = verify_region_conditions(p, spec, resolution=1)
    weak = weaker_conditions_check(p, spec, resolution=1)
    assert not strong["passed"] and weak["passed"]
    bad = next(c for c in strong["conditions"] if c["outcome"] == "fail")
    assert A < F(bad["witness"][0]) < F(3, 2)


def test_weaker_case2_single_point():
    spec = RegionSpec(1, 1, A, B)
    rep = weaker_conditions_check(MultiPoly.var(0, 1), spec, "certified")
    c2 = rep["conditions"][-1]
    assert c2["points"] == 1 and c2["outcome"] == "proven" and rep["status"] == "certified"


# NOR and un-symmetrization

def test_unsymmetrize_counts():
    t = [MultiPoly.var(i, 2) for i in range(2)]
    qbar = t[0] ** 3 - 2 * t[0] * t[1] ** 2 + 5
    final = unsymmetrize(qbar, 3)
    assert final.is_multilinear() and final.degree() <= qbar.degree()
    for bits in itertools.product((0, 1), repeat=6):
        assert final.eval(bits) == qbar.eval([sum(bits[:3]), sum(bits[3:])])


def test_nor_check():
    x = [MultiPoly.var(i, 3) for i in range(3)]
    good = F(2, 3) * (1 - x[0]) * (1 - x[1]) * (1 - x[2])
    assert verify_nor_approx(good, 3, A, B).passed
    proxy = BETA * (1 - (x[0] + x[1] + x[2]))
    res = verify_nor_approx(proxy, 3, A, B)
    assert not res.passed and any(res.witness) and not 0 <= res.value <= A
    assert verify_nor_approx(MultiPoly.const(BETA, 0), 0, A, B).passed
    assert not verify_nor_approx(MultiPoly.const(F(1, 2), 0), 0, A, B).passed
    with pytest.raises(ValueError):
        verify_nor_approx(MultiPoly.const(0, 21), 21, A, B)


# reduction chain

def test_reduce_constant_smoke():
    spec = RobustRegionSpec(2, 6, A, B)
    res = thm31_reduce(MultiPoly.const(BETA, 2), spec, verify_input=False)
    assert res.arity == 14
    assert res.final == MultiPoly.const(BETA, 14)
    assert res.final.eval([0] * 14) == BETA
    with pytest.raises(ConditionViolation):
        thm31_reduce(MultiPoly.const(BETA, 2), spec, verify_input=False, strict=True)
    with pytest.raises(ConditionViolation):
        thm31_reduce(MultiPoly.const(BETA, 2), spec)


def test_reduce_odd_m_stage_checks():
    spec = RobustRegionSpec(3, 6, A, B)
    x = [MultiPoly.var(i, 3) for i in range(3)]
    p = x[0] * x[1] * x[2] / 8 + x[0] ** 2 / 36 - x[2] / 12
    res = thm31_reduce(p, spec, verify_input=False, resolution=2)
    assert res.arity == 14
    assert [s for s, _ in res.trace][:2] == ["input", "fix_last_at_b"]
    assert all(c["outcome"] == "pass" for c in res.report["stage_checks"])
    assert res.final.degree() <= p.degree()


# robust symmetrization

def test_thm32_closed_form():
    for m in range(1, 4):
        for n in range(1, 5):
            part = BlockPartition.uniform(m, n)
            bp = BlockProductPoly.and_or(m, n)
            expanded = bp.expand()
            assert block_erase(expanded, part) == and_or_erased_closed_form(m, n)
            q, _ = thm32_symmetrize(bp, m, n)
            assert q.expand() == and_or_erased_closed_form(m, n)


def test_thm32_values():
    m, n = 3, 4
    q, rep = thm32_symmetrize(BlockProductPoly.and_or(m, n).expand(), m, n)
    assert q.eval([n] * m) == 1
    assert q.eval([0, 2, 3]) == 0
    assert rep["constants_apply"] is False and "note" in rep


def test_thm32_m10():
    q, rep = thm32_symmetrize(BlockProductPoly.and_or(10, 10), 10, 10)
    assert rep["constants_apply"] and rep["passed"]
    assert q.degree() == 100 and q.eval([10] * 10) == 1


def test_thm32_block_mismatch():
    with pytest.raises(ValueError):
        thm32_symmetrize(BlockProductPoly.and_or(2, 3), 3, 2)
    with pytest.raises(ValueError):
        thm32_symmetrize(MultiPoly.const(1, 5), 2, 3)


def test_thm32_bad_log_bound():
    with pytest.raises(ValueError):
        thm32_symmetrize(BlockProductPoly.and_or(2, 2), 2, 2, log_upper=F(1, 2))
