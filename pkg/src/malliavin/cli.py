"""Command-line front end.

Exit status: 0 on success, 1 when any verification fails, 2 on usage errors.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .divergence import Method, divergence, duality_check
from .exact import format_rational
from .hermite import hermite
from .isonormal import (
    DEFAULT_DIM,
    IsonormalSpace,
    TensorFunctional,
    duality_bivariate,
    duality_monte_carlo,
)
from .poly import Polynomial, PolynomialParseError, format_poly, from_json, to_json
from .verify import identity_checks

SEED_ENV = "MALLIAVIN_SEED"
COMMANDS = ("hermite", "delta", "verify-duality", "verify-identities", "isonormal-verify")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 0
    poly: Polynomial | None = None
    f: Polynomial | None = None
    method: Method = Method.BINOMIAL
    rho: Fraction = Fraction(0)
    samples: int = 100_000
    seed: int = 0
    dim: int = DEFAULT_DIM
    max_n: int = 12
    output: str = "text"

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n < 0:
            raise UsageError("--n must be >= 0")
        if self.command in ("delta", "verify-duality", "isonormal-verify") and self.poly is None:
            raise UsageError(f"{self.command} requires --g")
        if self.command in ("verify-duality", "isonormal-verify") and self.f is None:
            raise UsageError(f"{self.command} requires --f")
        if self.command == "isonormal-verify":
            if self.n < 1:
                raise UsageError("isonormal-verify requires --n >= 1")
            if abs(self.rho) > 1:
                raise UsageError("--rho must satisfy |rho| <= 1")
            if self.dim < 2 and abs(self.rho) != 1:
                raise UsageError("--dim 1 only supports rho = +-1")
            if self.samples < 1000:
                raise UsageError("--samples must be >= 1000")
        if self.seed < 0 or self.seed >= 2**64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
        if self.max_n < 0:
            raise UsageError("--max-n must be >= 0")


def _emit(config: RunConfig, payload: dict, text: str) -> None:
    if config.output == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def run(config: RunConfig) -> int:
    config.validate()
    cmd = config.command

    if cmd == "hermite":
        p = hermite(config.n)
        _emit(config, {"n": config.n, "poly": to_json(p)}, format_poly(p))
        return 0

    if cmd == "delta":
        res = divergence(config.poly, config.n, config.method)
        payload = {"g": to_json(res.input), "n": res.n, "method": res.method.value, "result": to_json(res.output)}
        _emit(config, payload, format_poly(res.output))
        return 0

    if cmd == "verify-duality":
        rep = duality_check(config.f, config.poly, config.n)
        text = f"lhs = {format_rational(rep.lhs)}  rhs = {format_rational(rep.rhs)}  {'pass' if rep.passed else 'FAIL'}"
        _emit(config, rep.to_dict(), text)
        return 0 if rep.passed else 1

    if cmd == "verify-identities":
        checks = identity_checks(config.max_n)
        ok = all(c.passed for c in checks)
        payload = {
            "max_n": config.max_n,
            "checks": [{"name": c.name, "cases": c.cases, "pass": c.passed} for c in checks],
            "pass": ok,
        }
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name} ({c.cases} cases){'  ' + c.detail if c.detail else ''}" for c in checks]
        _emit(config, payload, "\n".join(lines))
        return 0 if ok else 1

    # isonormal-verify
    space = IsonormalSpace(config.dim)
    h, v = space.correlated_pair(config.rho, seed=config.seed)
    u = TensorFunctional(config.poly, h, config.n)
    exact = duality_bivariate(config.f, u, v, config.rho)
    mc = duality_monte_carlo(config.f, u, v, config.rho, config.samples, config.seed)
    ok = exact.passed and mc.passed
    payload = mc.to_dict()
    payload["pass"] = ok
    text = (
        f"exact: lhs = {format_rational(exact.lhs)}  rhs = {format_rational(exact.rhs)}\n"
        f"monte carlo ({mc.samples} samples, seed {mc.seed}): "
        f"lhs = {mc.lhs_estimate:.6g} +- {mc.lhs_se:.2g}  rhs = {mc.rhs_estimate:.6g} +- {mc.rhs_se:.2g}\n"
        f"{'pass' if ok else 'FAIL'}"
    )
    _emit(config, payload, text)
    return 0 if ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="malliavin", description="Hermite polynomials and divergence operators, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--output", choices=("text", "json"), default="text")
        return p

    p = common(sub.add_parser("hermite", help="print H_n"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("delta", help="compute delta^n g"))
    p.add_argument("--g", required=True, help='coefficient array, e.g. "[0,1]" for x')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.BINOMIAL.value)

    p = common(sub.add_parser("verify-duality", help="check E[f^(n) g] = E[f delta^n g] exactly"))
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("verify-identities", help="run the Hermite and divergence identity sweeps"))
    p.add_argument("--max-n", type=int, default=12)

    p = common(sub.add_parser("isonormal-verify", help="check duality on an isonormal space, exactly and by Monte Carlo"))
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho", default="1/2", help="correlation <v, h> as an exact rational")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=DEFAULT_DIM)
    return parser


def _poly_arg(name: str, raw: str | None) -> Polynomial | None:
    if raw is None:
        return None
    try:
        return from_json(raw)
    except PolynomialParseError as exc:
        raise UsageError(f"--{name}: {exc} (offending token: {exc.token!r})") from None


def config_from_args(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    cfg = RunConfig(command=args.command, output=args.output)
    cfg.n = getattr(args, "n", 0)
    cfg.poly = _poly_arg("g", getattr(args, "g", None))
    cfg.f = _poly_arg("f", getattr(args, "f", None))
    if hasattr(args, "method"):
        cfg.method = Method(args.method)
    if hasattr(args, "rho"):
        try:
            cfg.rho = Fraction(args.rho)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--rho: cannot parse {args.rho!r} as a rational") from None
    cfg.samples = getattr(args, "samples", cfg.samples)
    cfg.dim = getattr(args, "dim", cfg.dim)
    cfg.max_n = getattr(args, "max_n", cfg.max_n)
    if hasattr(args, "seed"):
        cfg.seed = args.seed
        env = environ.get(SEED_ENV)
        if env is not None:
            try:
                cfg.seed = int(env)
            except ValueError:
                raise UsageError(f"{SEED_ENV}={env!r} is not an integer") from None
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        return run(config)
    except UsageError as exc:
        print(f"malliavin: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
