"""Command-line entry point.

Subcommands:
  run <scenario>   run a scenario, emit a JSON report (exit 2 on check failure)
  validate <file>  validate operator matrices in a JSON file
  selftest         quick randomized invariant sweep

Exit codes: 0 all checks pass, 1 usage/config error, 2 check failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import config, linalg, serialize
from .errors import (
    BadParameter,
    BadSlitGeometry,
    IopsimError,
    NotHermitian,
    NotPositive,
    ParseError,
    TraceNotOne,
)
from .iop import validate
from .scenarios import SCENARIOS, cat, spin_one_example, stern_gerlach, two_slit


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the exit-code contract reserves
    # 2 for check failures, so remap usage errors to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_tols(pairs):
    tols = {}
    for item in pairs or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise BadParameter(f"--tol expects name=value, got {item!r}")
        try:
            tols[name] = float(value)
        except ValueError:
            raise BadParameter(f"tolerance {name!r} has non-numeric value {value!r}")
        if tols[name] <= 0:
            raise BadParameter(f"tolerance {name!r} must be positive")
    return tols


def _parse_slits(text):
    slits = []
    for chunk in text.split(","):
        a, sep, b = chunk.partition(":")
        if not sep:
            raise BadParameter(f"slit range must be a:b, got {chunk!r}")
        try:
            slits.append((int(a), int(b)))
        except ValueError:
            raise BadParameter(f"non-integer slit bounds in {chunk!r}")
    return tuple(slits)


def build_parser() -> _Parser:
    parser = _Parser(prog="iopsim")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    run = sub.add_parser("run", help="run a scenario")
    run.add_argument("scenario", choices=sorted(SCENARIOS))
    run.add_argument("--seed", type=int,
                     default=int(os.environ.get("IOPSIM_SEED", "0")))
    run.add_argument("--hbar", type=float, default=1.0)
    run.add_argument("--tol", action="append", metavar="NAME=VALUE",
                     help="override a named check tolerance")
    run.add_argument("--out", metavar="PATH", help="write the JSON report here")
    run.add_argument("--json", action="store_true",
                     help="print the full JSON report to stdout")
    run.add_argument("--p-up", type=float, default=0.5,
                     help="stern-gerlach: prior spin-up weight")
    run.add_argument("--mc-samples", type=int, default=10000,
                     help="stern-gerlach: Monte-Carlo sample count")
    run.add_argument("--p-plus", type=float, default=0.3,
                     help="cat: weight of the '+' subspace")
    run.add_argument("--steps", type=int, default=None,
                     help="cat / two-slit: number of evolution steps")
    run.add_argument("--grid", type=int, default=128,
                     help="two-slit: number of grid sites")
    run.add_argument("--slits", default="40:44,84:88",
                     help="two-slit: comma-separated index ranges a:b")
    run.add_argument("--p-pass", type=float, default=None,
                     help="two-slit: prior passage probability")

    val = sub.add_parser("validate", help="validate operator file")
    val.add_argument("path")

    sub.add_parser("selftest", help="run randomized invariant sweep")
    return parser


def _run_scenario(args):
    tols = _parse_tols(args.tol)
    with config.hbar(args.hbar):
        if args.scenario == "stern-gerlach":
            report = stern_gerlach(p_up_prior=args.p_up,
                                   mc_samples=args.mc_samples,
                                   seed=args.seed, tol_overrides=tols)
        elif args.scenario == "cat":
            report = cat(p_plus=args.p_plus,
                         steps=args.steps if args.steps is not None else 20,
                         tol_overrides=tols)
        elif args.scenario == "spin-one":
            report = spin_one_example(tol_overrides=tols)
        else:
            kwargs = {"grid_n": args.grid,
                      "slit_positions": _parse_slits(args.slits),
                      "p_pass": args.p_pass, "tol_overrides": tols}
            if args.steps is not None:
                kwargs["steps"] = args.steps
            report = two_slit(**kwargs)

    text = serialize.dumps(report.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json or not args.out:
        if args.json:
            sys.stdout.write(text)
        else:
            for c in report.checks:
                verdict = "pass" if c.passed else "FAIL"
                print(f"{verdict}  {c.description}  "
                      f"residual={c.residual:.3e} tol={c.tolerance:.3e}")
            print("all checks passed" if report.all_pass()
                  else "some checks FAILED")
    return 0 if report.all_pass() else 2


def _validate_file(path):
    try:
        with open(path) as fh:
            payload = serialize.loads(fh.read())
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        return 1
    operators = payload if isinstance(payload, list) else [payload]
    status = 0
    for i, obj in enumerate(operators):
        m = serialize.matrix_from_json(obj)
        herm = linalg.hermiticity_defect(m)
        trace = float(np.trace(m).real)
        try:
            validate(m)
            print(f"operator {i}: valid "
                  f"(hermiticity residual {herm:.3e}, trace {trace:.12g})")
        except (NotHermitian, TraceNotOne, NotPositive) as exc:
            min_eig = float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])
            print(f"operator {i}: invalid ({type(exc).__name__}): {exc}; "
                  f"hermiticity residual {herm:.3e}, trace residual "
                  f"{abs(trace - 1.0):.3e}, min eigenvalue {min_eig:.3e}")
            status = 2
    return status


def _selftest():
    from . import composite, dynamics, measurement
    from .iop import entropy, max_iop
    rng = np.random.default_rng(12345)
    failures = []

    def check(name, ok):
        print(f"{'pass' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append(name)

    def random_iop(d):
        a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        m = a @ a.conj().T
        return validate(m / np.trace(m).real)

    def random_unitary(d):
        a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        q, r = np.linalg.qr(a)
        return dynamics.UnitaryOp(dim=d, matrix=q * (np.diag(r) / np.abs(np.diag(r))))

    for d in (2, 3, 4, 8):
        worst_entropy = worst_trace = 0.0
        for _ in range(50):
            rho = random_iop(d)
            u = random_unitary(d)
            evolved = dynamics.evolve(rho, u)
            worst_entropy = max(worst_entropy,
                                abs(entropy(evolved) - entropy(rho)))
            worst_trace = max(worst_trace,
                              abs(float(np.trace(evolved.matrix).real) - 1.0))
        check(f"dim {d}: entropy unitary-invariant", worst_entropy <= 1e-9)
        check(f"dim {d}: evolution trace-preserving", worst_trace <= 1e-9)
        worst = 0.0
        for _ in range(20):
            rho_s, rho_t = random_iop(d), random_iop(2)
            worst = max(worst, composite.entropy_additivity_defect(rho_s, rho_t))
        check(f"dim {d}: entropy additive over products", worst <= 1e-9)
        basis = np.eye(d, dtype=complex)
        ms = measurement.MeasurementSystem.projective(
            {k: np.outer(basis[:, k], basis[:, k].conj()) for k in range(d)})
        worst = 0.0
        for _ in range(20):
            rho = random_iop(d)
            probs = measurement.outcome_probabilities(ms, rho)
            worst = max(worst, abs(sum(p for _, p in probs) - 1.0))
        check(f"dim {d}: projective probabilities normalized", worst <= 1e-9)

    print("selftest passed" if not failures else "selftest FAILED")
    return 0 if not failures else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _run_scenario(args)
        if args.command == "validate":
            return _validate_file(args.path)
        return _selftest()
    except (BadParameter, BadSlitGeometry, ParseError) as exc:
        print(f"iopsim: error: {exc}", file=sys.stderr)
        return 1
    except IopsimError as exc:
        print(f"iopsim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
