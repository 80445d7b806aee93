"""LP fits of polynomials to the two-case region conditions, and the unit-box search."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .adeg import DEFAULT_GUARD, GuardExceeded, LPOutcome, solve_pointwise
from .pipeline import GRID_POINT_LIMIT, RegionSpec, axis_grid, fstr, verify_region_conditions


def total_degree_basis(m: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(m), deg):
            e = [0] * m
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def region_constraints(spec: RegionSpec, resolution: int) -> list[tuple]:
    axis = axis_grid(0, spec.n, resolution, (spec.a, spec.b))
    if len(axis) ** spec.m > GRID_POINT_LIMIT:
        raise ValueError("grid too large; lower the resolution")
    out = []
    for pt in itertools.product(axis, repeat=spec.m):
        case = spec.classify(pt)
        if case:
            lo, hi = spec.bounds(case)
            out.append((pt, lo, hi))
    return out


def fit_region_poly(spec: RegionSpec, d: int, resolution: int = 6,
                    guard: int = DEFAULT_GUARD) -> LPOutcome:
    """Max-margin degree-d polynomial meeting the region conditions on the grid.

    Monomials are taken in ``x/n`` to keep the LP well scaled; the witness is
    returned in the original variables.
    """
    size = math.comb(d + spec.m, spec.m)
    if size > guard:
        raise GuardExceeded(f"basis size {size} exceeds guard {guard}")
    basis = total_degree_basis(spec.m, d)
    return solve_pointwise(basis, region_constraints(spec, resolution), d, scale=spec.n)


def minimal_region_fit(spec: RegionSpec, resolution: int = 6, max_degree: int = 20,
                       guard: int = DEFAULT_GUARD) -> tuple[int, LPOutcome, list[LPOutcome]]:
    """Ascend d from 0 until the grid LP is feasible."""
    outcomes = []
    for d in range(max_degree + 1):
        out = fit_region_poly(spec, d, resolution, guard)
        outcomes.append(out)
        if out.feasible:
            return d, out, outcomes
    raise GuardExceeded(f"no feasible degree up to {max_degree}")


def unit_box_spec(m: int) -> RegionSpec:
    return RegionSpec(m, Fraction(1), Fraction(1, 3), Fraction(2, 3))


def problem41_search(m: int, d: int, grid_resolution: int = 6, guard: int = DEFAULT_GUARD,
                     certify_depth: int = 10) -> tuple[LPOutcome, dict]:
    """Degree-d search on [0,1]^m with thresholds 1/3 and 2/3.

    Grid infeasibility is a proof that no degree-d polynomial works on the
    continuum, since the grid constraints are a subset. A grid-feasible
    candidate is then checked with Bernstein subdivision.
    """
    spec = unit_box_spec(m)
    out = fit_region_poly(spec, d, grid_resolution, guard)
    report = {"m": m, "d": d, "resolution": grid_resolution, "basis_size": math.comb(d + m, m)}
    if not out.feasible:
        value = out.certificate.contradiction()
        report.update(status="infeasible", certificate_rows=len(out.certificate.entries),
                      contradiction=fstr(value), certificate_verified=out.certificate.verify())
        return out, report
    cert = verify_region_conditions(out.witness, spec, "certified", max_depth=certify_depth)
    if cert["status"] == "certified":
        status = "certified"
    elif cert["status"] == "falsified":
        status = "falsified-candidate"
    else:
        status = "uncertified-candidate"
    report.update(status=status, grid_margin=fstr(out.margin), certification=cert,
                  degree=out.witness.degree())
    return out, report
