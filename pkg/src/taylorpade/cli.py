"""Command-line front end: matrix / dim / scan / approx / froberg / hessian.

JSON is the machine format; CSV exists for diffing dimension scans against
published tables; text is for humans.  Every output echoes the resolved
configuration, and a fixed seed makes runs byte-identical.  Exit codes:
0 success, 1 usage error, 2 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from dataclasses import dataclass

from . import monomials as mono
from .approx import pade_approximant
from .dimension import (
    DimensionReport,
    iter_scan_defective,
    taylor_dimension,
)
from .froberg import exceptional_pairs, froberg_report
from .hessian import SingularPointError, hessian_rank
from .linalg import DEFAULT_PRIME, validate_prime
from .pade import structural_index
from .series import format_poly, parse_poly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2

ENV_PRIME = "TAYLORPADE_PRIME"
ENV_SEED = "TAYLORPADE_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class Config:
    prime: int
    seed: int
    trials: int
    jobs: int
    fmt: str

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "jobs": self.jobs,
            "format": self.fmt,
        }


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def resolve_config(args) -> Config:
    prime = args.prime if args.prime is not None else _env_int(ENV_PRIME)
    prime = DEFAULT_PRIME if prime is None else prime
    prime = validate_prime(prime)
    seed = args.seed if args.seed is not None else _env_int(ENV_SEED)
    seed = 0 if seed is None else seed
    if seed == 0:
        seed = secrets.randbits(62) | 1  # 0 means: draw fresh entropy, echo it
    return Config(
        prime=prime,
        seed=int(seed),
        trials=int(getattr(args, "trials", 3) or 3),
        jobs=int(getattr(args, "jobs", 1) or 1),
        fmt=args.format,
    )


def _coeff_label(exp) -> str:
    if all(x <= 9 for x in exp):
        return "c_" + "".join(str(x) for x in exp)
    return "c_" + ",".join(str(x) for x in exp)


def _emit_json(payload: dict):
    print(json.dumps(payload))


def _report_payload(rep: DimensionReport) -> dict:
    return {
        "n": rep.n,
        "d": rep.d,
        "e": rep.e,
        "m": rep.m,
        "dim": rep.actual_dim,
        "expected": rep.expected_dim,
        "params": rep.parameter_count,
        "ambient": rep.ambient_dim,
        "defect": rep.defect,
        "fiber_dim": rep.fiber_dim,
        "method": rep.method,
        "proviso_ok": rep.proviso_ok,
    }


# -- subcommands --------------------------------------------------------------

def cmd_matrix(args) -> int:
    cfg = resolve_config(args)
    if args.d >= args.m:
        raise ValueError(f"no rows: --d {args.d} >= --m {args.m}")
    idx = structural_index(args.n, args.d, args.e, args.m)
    values = mono.monomials(args.n, 0, args.m)
    rows = mono.monomials(args.n, args.d + 1, args.m, True)
    cols = mono.monomials(args.n, 0, args.e)
    if cfg.fmt == "json":
        entries = [
            [list(values[v]) if v >= 0 else None for v in line] for line in idx.tolist()
        ]
        _emit_json(
            {
                "command": "matrix",
                "config": cfg.as_dict(),
                "n": args.n,
                "d": args.d,
                "e": args.e,
                "m": args.m,
                "row_labels": [list(g) for g in rows],
                "col_labels": [list(g) for g in cols],
                "entries": entries,
            }
        )
    else:
        grid = [
            [(_coeff_label(values[v]) if v >= 0 else "0") for v in line]
            for line in idx.tolist()
        ]
        width = max(len(s) for line in grid for s in line)
        print(f"# pade matrix n={args.n} d={args.d} e={args.e} m={args.m} "
              f"({len(rows)}x{len(cols)})")
        for line in grid:
            print(" ".join(s.rjust(width) for s in line))
    return EXIT_OK


def cmd_dim(args) -> int:
    cfg = resolve_config(args)
    rep = taylor_dimension(
        args.n, args.d, args.e, args.m, seed=cfg.seed, trials=cfg.trials, prime=cfg.prime
    )
    payload = _report_payload(rep)
    if cfg.fmt == "json":
        _emit_json({"command": "dim", "config": cfg.as_dict(), **payload})
    elif cfg.fmt == "csv":
        print("n,d,e,m,dim,params,ambient")
        print(f"{rep.n},{rep.d},{rep.e},{rep.m},{rep.actual_dim},"
              f"{rep.parameter_count},{rep.ambient_dim}")
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return EXIT_OK


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise ValueError("expected a d,e,m triple")
    return parts[0], parts[1], parts[2]


def cmd_scan(args) -> int:
    cfg = resolve_config(args)
    resume = _parse_triple(args.resume_from) if args.resume_from else None
    reports = iter_scan_defective(
        args.n,
        args.m_max,
        seed=cfg.seed,
        trials=cfg.trials,
        prime=cfg.prime,
        jobs=cfg.jobs,
        resume_from=resume,
    )
    if cfg.fmt == "json":
        rows = [_report_payload(r) for r in reports]
        _emit_json({"command": "scan", "config": cfg.as_dict(), "rows": rows})
    elif cfg.fmt == "csv":
        print("n,d,e,m,dim,params,ambient", flush=True)
        for r in reports:
            print(f"{r.n},{r.d},{r.e},{r.m},{r.actual_dim},"
                  f"{r.parameter_count},{r.ambient_dim}", flush=True)
    else:
        print(f"# defective triples for n={args.n}, m <= {args.m_max}", flush=True)
        for r in reports:
            print(f"d={r.d} e={r.e} m={r.m}: dim {r.actual_dim} "
                  f"(params {r.parameter_count}, ambient {r.ambient_dim}, "
                  f"defect {r.defect})", flush=True)
    return EXIT_OK


def cmd_approx(args) -> int:
    cfg = resolve_config(args)
    series = parse_poly(args.series, args.n, args.m, cfg.prime)
    res = pade_approximant(series, args.d, args.e)
    payload = {
        "found": res.found,
        "P": format_poly(res.numerator) if res.found else None,
        "Q": format_poly(res.denominator) if res.found else None,
        "fiber_dim": res.fiber_dim,
        "exact": res.exact,
    }
    if cfg.fmt == "json":
        _emit_json({"command": "approx", "config": cfg.as_dict(), **payload})
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_froberg(args) -> int:
    cfg = resolve_config(args)
    if args.census:
        census = exceptional_pairs(args.n)
        payload = {
            "n": census.n,
            "d0": census.d0,
            "count": len(census.pairs),
            "pairs": [list(p) for p in census.pairs],
        }
    else:
        if args.d is None or args.e is None:
            raise ValueError("need --d and --e (or --census)")
        rep = froberg_report(args.n, args.d, args.e)
        payload = {
            "n": rep.n,
            "d": rep.d,
            "e": rep.e,
            "alpha": rep.alpha,
            "beta": rep.beta,
            "w": rep.w,
            "defective_predicted": rep.defective_predicted,
        }
    if cfg.fmt == "json":
        _emit_json({"command": "froberg", "config": cfg.as_dict(), **payload})
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_hessian(args) -> int:
    cfg = resolve_config(args)
    rep = hessian_rank(
        args.n, args.d, args.e, args.m, seed=cfg.seed, trials=cfg.trials, prime=cfg.prime
    )
    payload = {
        "n": rep.n,
        "d": rep.d,
        "e": rep.e,
        "m": rep.m,
        "vars": len(rep.variables),
        "rank": rep.rank,
        "corank": rep.corank,
        "predicted_corank": rep.predicted_corank,
    }
    if cfg.fmt == "json":
        _emit_json({"command": "hessian", "config": cfg.as_dict(), **payload})
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_common(sub, formats=("json", "text")):
    sub.add_argument("--prime", type=int, default=None,
                     help=f"field characteristic (default {DEFAULT_PRIME}; env {ENV_PRIME})")
    sub.add_argument("--seed", type=int, default=None,
                     help=f"random seed, 0 draws entropy (env {ENV_SEED})")
    sub.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taylorpade",
                     description="Exact Pade-matrix computations over a prime field")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("matrix", help="print the symbolic Pade matrix")
    for flag in ("--n", "--d", "--e", "--m"):
        sp.add_argument(flag, type=int, required=True)
    _add_common(sp, formats=("text", "json"))
    sp.set_defaults(func=cmd_matrix)

    sp = subs.add_parser("dim", help="dimension/defect of one truncation variety")
    for flag in ("--n", "--d", "--e", "--m"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--trials", type=int, default=3)
    _add_common(sp, formats=("json", "csv", "text"))
    sp.set_defaults(func=cmd_dim)

    sp = subs.add_parser("scan", help="list defective triples up to m-max")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m-max", dest="m_max", type=int, required=True)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--resume-from", dest="resume_from", default=None,
                    help="skip triples before this d,e,m in scan order")
    _add_common(sp, formats=("csv", "json", "text"))
    sp.set_defaults(func=cmd_scan)

    sp = subs.add_parser("approx", help="solve the approximation problem for a series")
    for flag in ("--n", "--d", "--e", "--m"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--series", required=True,
                    help="polynomial text, e.g. '1 + 3*x1 + 2*x1*x2^2'")
    _add_common(sp)
    sp.set_defaults(func=cmd_approx)

    sp = subs.add_parser("froberg", help="predicted codimensions and the census")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--e", type=int, default=None)
    sp.add_argument("--census", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=cmd_froberg)

    sp = subs.add_parser("hessian", help="generic rank of the Hessian of det")
    for flag in ("--n", "--d", "--e", "--m"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--trials", type=int, default=3)
    _add_common(sp)
    sp.set_defaults(func=cmd_hessian)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"taylorpade: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularPointError, OverflowError) as exc:
        print(f"taylorpade: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    raise SystemExit(main())
