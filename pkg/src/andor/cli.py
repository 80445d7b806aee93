"""Command-line entry point: ``python -m andor <command> ...``.

Exit status 0 on success, 1 when a mathematical check fails (a witness is
reported), 2 on usage, parse or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import adeg, bounds, pipeline, search
from .poly import PolyFormatError, dumps, read_poly, write_poly
from .symmetrize import BlockPartition, PairScaleParams, SymmetryError, block_erase, \
    erase_all_subscripts, laurent_symmetrize, laurent_symmetrize_pairs

OUTPUT_ENV = "ANDOR_OUTPUT_DIR"
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse ``num/den`` or an integer; decimals are refused."""
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected num/den, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output_dir: str = "."
    m: int | None = None
    n: Fraction | None = None
    a: Fraction = Fraction(1, 3)
    b: Fraction = Fraction(2, 3)
    alpha: Fraction = Fraction(1, 3)
    beta: Fraction = Fraction(2, 3)
    resolution: int = 6
    certify_depth: int = 10
    lp_guard: int = adeg.DEFAULT_GUARD
    seed: int = 0
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def out(self, name: str) -> Path:
        d = Path(self.output_dir)
        d.mkdir(parents=True, exist_ok=True)
        return d / name


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return pipeline.fstr(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def write_report(cfg: RunConfig, name: str, report: dict) -> Path:
    path = cfg.out(name)
    path.write_text(json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n")
    return path


def _int_n(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.n.denominator != 1:
        raise UsageError("--n must be a positive integer here")
    return int(cfg.n)


def _require(cfg: RunConfig, *names):
    for nm in names:
        if getattr(cfg, nm) is None:
            raise UsageError(f"--{nm.replace('_', '-')} is required")


# commands

def cmd_symmetrize(cfg: RunConfig) -> int:
    _require(cfg, "input")
    p = read_poly(cfg.input)
    op = cfg.extra["op"]
    if op == "erase":
        q = erase_all_subscripts(p)
    elif op == "block":
        _require(cfg, "m")
        n = _int_n(cfg)
        q = block_erase(p, BlockPartition.uniform(cfg.m, n))
    elif op == "laurent":
        i, j = cfg.extra["pair"]
        q = laurent_symmetrize(p, (i, j))
    elif op == "pairs":
        q = laurent_symmetrize_pairs(p, PairScaleParams.consecutive(p.nvars, cfg.b))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown op {op}")
    path = cfg.out(cfg.extra.get("output") or f"symmetrize_{op}.poly")
    write_poly(q, path)
    report = {"command": "symmetrize", "op": op, "input_degree": p.degree(), "output_degree": q.degree(),
              "output": path.name}
    write_report(cfg, f"symmetrize_{op}.json", report)
    print(f"{op}: degree {p.degree()} -> {q.degree()}, wrote {path}")
    return 0


def cmd_adeg(cfg: RunConfig) -> int:
    _require(cfg, "n")
    fn = adeg.named(cfg.extra["fn"], _int_n(cfg), cfg.m)
    spec = adeg.ApproxSpec(cfg.alpha, cfg.beta)
    solver = adeg.symmetric_reduce_lp if cfg.extra.get("symmetric") else None
    res = adeg.approx_degree(fn, spec, guard=cfg.lp_guard, solver=solver)
    tag = f"{fn.name}"
    wpath = cfg.out(f"adeg_{tag}.txt")
    wpath.write_text(res.dumps())
    report = {"command": "adeg", "function": fn.name, "arity": fn.arity, "alpha": spec.alpha,
              "beta": spec.beta, "degree": res.degree, "witness_file": wpath.name,
              "lower_certificate": res.certificate is not None and res.certificate.verify(),
              "margins": [o.margin for o in res.outcomes]}
    write_report(cfg, f"adeg_{tag}.json", report)
    print(f"approximate degree of {fn.name} at ({spec.alpha}, {spec.beta}): {res.degree}")
    print(f"witness: {wpath}")
    return 0


def _robust_spec(cfg: RunConfig) -> pipeline.RobustRegionSpec:
    _require(cfg, "m", "n")
    return pipeline.RobustRegionSpec(cfg.m, cfg.n, cfg.a, cfg.b, cfg.alpha, cfg.beta)


def cmd_reduce(cfg: RunConfig) -> int:
    spec = _robust_spec(cfg)
    if cfg.extra.get("fit"):
        d, out, _ = search.minimal_region_fit(spec, cfg.resolution, guard=cfg.lp_guard)
        p = out.witness
        write_poly(p, cfg.out("fit.poly"))
        print(f"grid fit: degree {d}, margin {float(out.margin):.6f}, wrote {cfg.out('fit.poly')}")
    else:
        _require(cfg, "input")
        p = read_poly(cfg.input)
    try:
        res = pipeline.thm31_reduce(p, spec, cfg.resolution, seed=cfg.seed, strict=cfg.extra.get("strict", False))
    except pipeline.ConditionViolation as exc:
        write_report(cfg, "reduce.json", {"command": "reduce", "error": str(exc),
                                          "witness": exc.witness, "value": exc.value})
        print(f"reduction failed: {exc}; witness {exc.witness}", file=sys.stderr)
        return 1
    files = []
    for idx, (stage, poly) in enumerate(res.trace):
        path = cfg.out(f"trace_{idx}_{stage}.poly")
        write_poly(poly, path)
        files.append(path.name)
    report = dict(res.report)
    report["command"] = "reduce"
    report["trace_files"] = files
    if res.arity <= 20:
        chk = pipeline.verify_nor_approx(res.final, res.arity, spec.alpha, spec.beta)
        report["nor_check"] = {"passed": chk.passed, "witness": chk.witness, "value": chk.value,
                               "value_at_zero": chk.min_zero, "max_elsewhere": chk.max_rest}
    else:
        report["nor_check"] = {"skipped": f"arity {res.arity} exceeds 20"}
    write_report(cfg, "reduce.json", report)
    passed = report["nor_check"].get("passed", True)
    print(f"final arity {res.arity}, degree {res.final.degree()}, NOR check "
          f"{'pass' if passed else 'FAIL'}")
    return 0 if passed else 1


def cmd_verify(cfg: RunConfig) -> int:
    _require(cfg, "input")
    p = read_poly(cfg.input)
    check = cfg.extra["check"]
    if check == "nor":
        chk = pipeline.verify_nor_approx(p, p.nvars, cfg.alpha, cfg.beta)
        report = {"check": "nor", "arity": p.nvars, "passed": chk.passed, "witness": chk.witness,
                  "value": chk.value}
    else:
        _require(cfg, "m", "n")
        cls = pipeline.RobustRegionSpec if cfg.extra.get("robust") else pipeline.RegionSpec
        spec = cls(cfg.m, cfg.n, cfg.a, cfg.b, cfg.alpha, cfg.beta)
        fn = pipeline.verify_region_conditions if check == "region" else pipeline.weaker_conditions_check
        report = fn(p, spec, cfg.extra["mode"], cfg.resolution, cfg.certify_depth)
    write_report(cfg, f"verify_{check}.json", report)
    print(f"{check}: {'pass' if report['passed'] else 'FAIL'}"
          + (f" ({report['status']})" if "status" in report else ""))
    if not report["passed"]:
        print(f"witness: {_first_witness(report)}")
    return 0 if report["passed"] else 1


def _first_witness(report):
    if report.get("witness") is not None:
        return report["witness"]
    for c in report.get("conditions", []):
        if c.get("outcome") == "fail":
            return c.get("witness")
    return None


def cmd_bound(cfg: RunConfig) -> int:
    ms = cfg.extra["ms"]
    ns = cfg.extra["ns"]
    rows = []
    for m in ms:
        for n in ns:
            row = {"cor33": bounds.cor33_bound(m, n)}
            if m >= 10 and bounds.log_exceeds(n, m):
                row["prob_bounds"] = bounds.prob_bound_checks(m, n)
            rows.append(row)
            c = row["cor33"]
            extra = ""
            if "prob_bounds" in row:
                extra = f"  constants {'ok' if row['prob_bounds']['passed'] else 'FAIL'}"
            print(f"m={m:<6} n={n:<8} branch={c['branch']:<7} value~{c['value']['approx']:.4f}"
                  f"  [{float(Fraction(c['value']['lo'])):.6f}, {float(Fraction(c['value']['hi'])):.6f}]{extra}")
    write_report(cfg, "bound.json", {"command": "bound", "rows": rows})
    ok = all(r.get("prob_bounds", {"passed": True})["passed"] for r in rows)
    return 0 if ok else 1


def _search_one(args):
    m, d, res, guard, depth = args
    out, report = search.problem41_search(m, d, res, guard, depth)
    if out.feasible:
        report["witness"] = dumps(out.witness)
    else:
        report["certificate"] = out.certificate.dumps()
    return report


def cmd_search(cfg: RunConfig) -> int:
    _require(cfg, "m")
    tasks = [(cfg.m, d, cfg.resolution, cfg.lp_guard, cfg.certify_depth) for d in cfg.extra["degrees"]]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            reports = list(pool.map(_search_one, tasks))
    else:
        reports = [_search_one(t) for t in tasks]
    for r in reports:
        print(f"m={r['m']} d={r['d']}: {r['status']}")
    write_report(cfg, f"search_m{cfg.m}.json", {"command": "search", "results": reports})
    return 0


COMMANDS = {"symmetrize": cmd_symmetrize, "adeg": cmd_adeg, "reduce": cmd_reduce,
            "verify": cmd_verify, "bound": cmd_bound, "search": cmd_search}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="polynomial file")
    common.add_argument("--output-dir", default=None,
                        help=f"where artifacts go (default: ${OUTPUT_ENV} or .)")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=rational)
    common.add_argument("--a", type=rational, default=Fraction(1, 3))
    common.add_argument("--b", type=rational, default=Fraction(2, 3))
    common.add_argument("--alpha", type=rational, default=Fraction(1, 3))
    common.add_argument("--beta", type=rational, default=Fraction(2, 3))
    common.add_argument("--resolution", type=int, default=6, help="grid points per unit")
    common.add_argument("--certify-depth", type=int, default=10)
    common.add_argument("--lp-guard", type=int, default=adeg.DEFAULT_GUARD)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="andor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("symmetrize", parents=[common], help="erase subscripts or Laurent-symmetrize")
    s.add_argument("--op", choices=["erase", "block", "laurent", "pairs"], required=True)
    s.add_argument("--pair", type=int, nargs=2, default=(0, 1), metavar=("I", "J"))
    s.add_argument("--output", help="output polynomial file name")

    s = sub.add_parser("adeg", parents=[common], help="approximate degree of a named function")
    s.add_argument("--fn", required=True, choices=["OR", "AND", "NOR", "AND_OR"])
    s.add_argument("--symmetric", action="store_true", help="use the Hamming-weight LP")

    s = sub.add_parser("reduce", parents=[common], help="pair/shift/un-symmetrize reduction")
    s.add_argument("--strict", action="store_true", help="abort on intermediate condition failures")
    s.add_argument("--fit", action="store_true", help="build the input by a minimal-degree grid LP fit")

    s = sub.add_parser("verify", parents=[common], help="region, weaker or NOR checks")
    s.add_argument("--check", choices=["region", "weaker", "nor"], default="region")
    s.add_argument("--mode", choices=["grid", "certified"], default="grid")
    s.add_argument("--robust", action="store_true", help="enforce the pairing side conditions")

    s = sub.add_parser("bound", parents=[common], help="lower-bound expression and constant checks")
    s.add_argument("--ms", type=int, nargs="+")
    s.add_argument("--ns", type=int, nargs="+")

    s = sub.add_parser("search", parents=[common], help="unit-box degree search")
    s.add_argument("--degrees", type=int, nargs="+", default=[1, 2, 3])
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    base = {f: getattr(ns, f) for f in ("command", "input", "m", "n", "a", "b", "alpha", "beta",
                                        "resolution", "certify_depth", "lp_guard", "seed", "jobs")}
    base["output_dir"] = ns.output_dir or os.environ.get(OUTPUT_ENV) or "."
    known = set(base) | {"output_dir"}
    extra = {k: v for k, v in vars(ns).items() if k not in known}
    if ns.command == "bound":
        extra["ms"] = ns.ms or ([ns.m] if ns.m else None)
        extra["ns"] = ns.ns or ([int(ns.n)] if ns.n else None)
        if not extra["ms"] or not extra["ns"]:
            raise UsageError("bound needs --m/--ms and --n/--ns")
    if ns.jobs < 1:
        raise UsageError("--jobs must be positive")
    return RunConfig(extra=extra, **base)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, PolyFormatError, adeg.GuardExceeded, SymmetryError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def config_dict(cfg: RunConfig) -> dict:
    return _jsonable(asdict(cfg))
