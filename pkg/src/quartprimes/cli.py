"""Command-line entry point.

Exit codes: 0 success, 1 unknown subcommand or failed verify suite,
2 precondition violation. Relative ``--out`` paths resolve against
``QUARTPRIMES_OUT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from pathlib import Path
from typing import Any, Callable

import numpy as np
import scipy

from . import __version__, config
from .arith import MAX_FACTOR_INPUT, build_tables
from .audit import SieveParams, hypothesis_audit
from .config import RunConfig
from .congruence import (
    CurveQ,
    chen_search,
    degree_lower_bound,
    frey_invariants,
    ogg_numerator,
    qcurve_construct,
    quartic_solution_search,
    trace_of_frobenius,
)
from .errors import PreconditionError
from .reports import dumps, table
from .sequence import sequence_primes, tally, tally_segments
from .singular import big_G, big_H, big_H_rational, main_term_coefficient
from .verify import SUITES, run_suite

OUT_DIR_ENV = "QUARTPRIMES_OUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _versions() -> dict[str, str]:
    return {"quartprimes": __version__, "numpy": np.__version__, "scipy": scipy.__version__}


def _envelope(cfg: RunConfig, result: Any) -> dict:
    return {
        "command": cfg.command,
        "params": cfg.params,
        "versions": _versions(),
        "calibration": config.CALIBRATION,
        "result": result,
    }


def _emit(cfg: RunConfig, result: dict) -> str:
    if cfg.fmt == "table":
        return table(sorted(result.items()))
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in sorted(result.items()):
            w.writerow([k, v if isinstance(v, str) else dumps(v).replace("\n", "")])
        return buf.getvalue().rstrip("\n")
    return dumps(_envelope(cfg, result))


def _need_pos(**kw: int) -> None:
    for name, v in kw.items():
        if v < 1:
            raise PreconditionError(f"--{name} must be >= 1, got {v}", bound=f"{name} >= 1")
        if v >= MAX_FACTOR_INPUT:
            raise PreconditionError(f"--{name} = {v} overflows 63 bits", bound=f"{name} < 2^63")


def _out_path(raw: str) -> Path:
    p = Path(raw)
    base = os.environ.get(OUT_DIR_ENV)
    return Path(base) / p if base and not p.is_absolute() else p


def _cmd_constant(cfg: RunConfig) -> tuple[int, str]:
    c = cfg.params["c"]
    _need_pos(c=c)
    if c > 10**8:
        raise PreconditionError(f"c = {c} exceeds 10^8", bound="c <= 10^8")
    model = main_term_coefficient(c)
    result = {
        "c": c,
        "G": big_G(c),
        "H": big_H(c),
        "H_squared_over_c": big_H_rational(c),
        "kappa": model.kappa,
        "coefficient": model.coefficient,
        "local_factor": model.local_factor,
        "corrected_coefficient": model.corrected_coefficient,
    }
    return 0, _emit(cfg, result)


def _cmd_tally(cfg: RunConfig) -> tuple[int, str]:
    c, x = cfg.params["c"], cfg.params["x"]
    _need_pos(c=c, x=x)
    buf = io.StringIO()
    buf.write("n,a_n\n")
    total = nonzero = 0
    for lo, window in tally_segments(c, x, budget=cfg.budget):
        n = np.arange(lo, lo + len(window))
        total += int(window.sum(dtype=np.int64))
        nonzero += int(np.count_nonzero(window))
        buf.write("".join(f"{i},{v}\n" for i, v in zip(n.tolist(), window.tolist())))
    text = buf.getvalue()
    out = cfg.params.get("out")
    if out is None:
        return 0, text.rstrip("\n")
    path = _out_path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return 0, _emit(cfg, {"path": str(path), "A": total, "nonzero": nonzero, "rows": x})


def _cmd_audit(cfg: RunConfig) -> tuple[int, str]:
    c, x = cfg.params["c"], cfg.params["x"]
    _need_pos(c=c, x=x)
    if c * x > cfg.budget:
        raise PreconditionError(f"c*x = {c * x} exceeds the budget {cfg.budget}", bound=f"c*x <= {cfg.budget}")
    params = SieveParams.default(x)
    for key in ("D", "K", "N", "P"):
        if cfg.params.get(key) is not None:
            setattr(params, key, cfg.params[key])
    if not 1 <= params.D <= x:
        raise PreconditionError(f"D = {params.D} outside [1, x]", bound="1 <= D <= x")
    tables = build_tables(x)
    report = hypothesis_audit(x, c, tables, params, with_remainder=True, with_bilinear=True)
    return 0, _emit(cfg, report.to_dict())


def _cmd_primes(cfg: RunConfig) -> tuple[int, str]:
    c, x = cfg.params["c"], cfg.params["x"]
    _need_pos(c=c, x=x)
    t = tally(c, x, budget=cfg.budget, threads=cfg.threads)
    return 0, "\n".join(str(p) for p in sequence_primes(t))


def _cmd_congruence(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    kind = p["kind"]
    if kind == "chen":
        res: Any = chen_search(p["ell"], p["semiprime"])
    elif kind == "frey":
        res = frey_invariants(p["p"], p["q"], p["ell"])
    elif kind == "trace":
        try:
            curve = CurveQ(p["a2"], p["a4"], p["a6"])
        except ValueError as e:
            raise PreconditionError(str(e), bound="nonzero discriminant") from None
        res = {"p": p["p"], "a_p": trace_of_frobenius(curve, p["p"]), "hasse_bound": math.isqrt(4 * p["p"])}
    elif kind == "degree":
        res = {"ell": p["ell"], "q": p["q"], "degree_lower_bound": degree_lower_bound(p["ell"], p["q"])}
    elif kind == "ogg":
        res = {"p": p["p"], "q": p["q"], "numerator": ogg_numerator(p["p"], p["q"])}
    elif kind == "quartic":
        sols = quartic_solution_search(p["ell"], p["bound"])
        res = {"ell": p["ell"], "bound": p["bound"], "solutions": [{"A": a, "B": b, "p": q} for a, b, q in sols]}
    else:
        res = qcurve_construct(p["A"], p["B"], p["ell"], p["p"])
    cfg_json = RunConfig(cfg.command, cfg.params, "json", cfg.threads, cfg.budget)
    return 0, _emit(cfg_json, {"record": res})


def _cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    rows = run_suite(cfg.params["suite"])
    status = 0 if all(r.passed for r in rows) else 1
    if cfg.fmt == "json":
        return status, _emit(cfg, {"checks": [r._asdict() for r in rows], "passed": status == 0})
    width = max(len(r.name) for r in rows)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.detail}" for r in rows]
    return status, "\n".join(lines)


COMMANDS: dict[str, Callable[[RunConfig], tuple[int, str]]] = {
    "constant": _cmd_constant,
    "tally": _cmd_tally,
    "audit": _cmd_audit,
    "primes": _cmd_primes,
    "congruence": _cmd_congruence,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Dispatch a validated config; returns (exit status, text for stdout or stderr)."""
    handler = COMMANDS.get(cfg.command)
    if handler is None:
        return 1, f"error: unknown subcommand {cfg.command!r}"
    if cfg.threads < 1 or cfg.budget < 1:
        return 2, "error: --threads and --budget must be >= 1 (bound: threads, budget >= 1)"
    try:
        return handler(cfg)
    except PreconditionError as e:
        return 2, f"error: {e} (bound: {e.bound})"


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("csv", "json", "table"), default=argparse.SUPPRESS)

    parser = _Parser(prog="quartprimes", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("constant", parents=[common])
    s.add_argument("--c", type=int, required=True)
    s = sub.add_parser("tally", parents=[common])
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--out")
    s = sub.add_parser("audit", parents=[common])
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--x", type=int, required=True)
    for flag in ("--D", "--K", "--N", "--P"):
        s.add_argument(flag, type=int)
    s = sub.add_parser("primes", parents=[common])
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--x", type=int, required=True)

    cong = sub.add_parser("congruence", parents=[common])
    csub = cong.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    k = csub.add_parser("chen", parents=[common])
    k.add_argument("--ell", type=int, required=True)
    k.add_argument("--semiprime", action="store_true")
    k = csub.add_parser("frey", parents=[common])
    for flag in ("--p", "--q", "--ell"):
        k.add_argument(flag, type=int, required=True)
    k = csub.add_parser("trace", parents=[common])
    for flag in ("--a2", "--a4", "--a6", "--p"):
        k.add_argument(flag, type=int, required=True)
    k = csub.add_parser("degree", parents=[common])
    for flag in ("--ell", "--q"):
        k.add_argument(flag, type=int, required=True)
    k = csub.add_parser("ogg", parents=[common])
    for flag in ("--p", "--q"):
        k.add_argument(flag, type=int, required=True)
    k = csub.add_parser("quartic", parents=[common])
    for flag in ("--ell", "--bound"):
        k.add_argument(flag, type=int, required=True)
    k = csub.add_parser("qcurve", parents=[common])
    for flag in ("--A", "--B", "--ell", "--p"):
        k.add_argument(flag, type=int, required=True)

    s = sub.add_parser("verify", parents=[common])
    s.add_argument("suite", choices=(*SUITES, "all"))
    return parser


def parse_config(argv: list[str]) -> RunConfig:
    ns = vars(_build_parser().parse_args(argv))
    command = ns.pop("command")
    fmt = ns.pop("format", "json" if command != "verify" else "table")
    threads = ns.pop("threads", 1)
    budget = ns.pop("budget", config.DEFAULT_ENUM_BOUND)
    return RunConfig(command, ns, fmt, threads, budget)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as e:
        msg = str(e)
        print(f"error: {msg}", file=sys.stderr)
        unknown = any(f"argument {a}: invalid choice" in msg for a in ("command", "kind", "suite"))
        return 1 if unknown else 2
    status, text = run(cfg)
    stream = sys.stdout if status != 2 else sys.stderr
    if text:
        print(text, file=stream)
    return status
