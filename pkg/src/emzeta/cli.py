"""Command-line front end: ``emzeta <subcommand> [flags]``.

Exit codes: 0 success, 1 usage error, 2 numerical failure (a JSON object
with ``error`` and ``message`` goes to stderr). Data go to stdout or
``--output``; a leading ``#`` metadata line (CSV) or ``meta`` key (JSON) is
suppressed with ``--no-header``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from . import __version__
from .coefficients import build_alpha_table, ratio_sequence
from .errors import ConditioningError, ZetaError
from .oracle import dirichlet_partial, zeta_oracle
from .symmetry_audit import audit
from .zero_finder import DEFAULT_STEP, enumerate_zeros
from .zeta_em import MAX_IMAG, ExtensionParams, choose_params, evaluate, zero_residual

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    """Parse ``RE+IMi`` (e.g. ``0.5+14.134725i``, ``2``, ``-3i``)."""
    t = text.strip()
    if not t or any(c in t for c in " jJ()"):
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    try:
        z = complex(t[:-1] + "j" if t.endswith("i") else t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise argparse.ArgumentTypeError(f"non-finite value: {text!r}")
    return z


def fmt(x) -> str:
    """Shortest round-trip text for numbers; ``inf``/``nan`` sentinels."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def fmt_complex(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def _json_value(x):
    if isinstance(x, float) and not math.isfinite(x):
        return fmt(x)
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


@dataclass
class RunConfig:
    subcommand: str
    options: dict
    output_format: str = "csv"
    output_path: str | None = None
    header: bool = True
    meta: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="emzeta", description="Euler-Maclaurin zeta continuation toolkit")
    parser.add_argument("--version", action="version", version=f"emzeta {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, default_format="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--output", default=None, help="output file (default stdout)")
        p.add_argument("--no-header", action="store_true", help="omit the metadata line")

    p = sub.add_parser("coeffs", help="exact correction coefficients")
    p.add_argument("--order", type=int, required=True)
    common(p)

    p = sub.add_parser("eval", help="evaluate the continuation at one point")
    p.add_argument("--s", type=parse_complex, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    p = sub.add_parser("compare", help="continuation vs the eta-series oracle")
    p.add_argument("--s", type=parse_complex, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    p = sub.add_parser("zeros", help="critical-line zeros in an ordinate range")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    common(p)

    p = sub.add_parser("scan", help="|Z| and zero residual on a rectangular grid")
    for name in ("--re-min", "--re-max", "--im-min", "--im-max"):
        p.add_argument(name, type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    common(p)

    p = sub.add_parser("audit", help="symmetry residual report for a quadruplet candidate")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    common(p, default_format="json")
    return parser


def _params_from(ns) -> ExtensionParams | None:
    if ns.n is None and ns.k is None:
        return None
    if ns.n is None or ns.k is None:
        raise UsageError("--n and --k must be given together")
    if ns.n < 1 or ns.k < 0:
        raise UsageError("--n must be >= 1 and --k >= 0")
    return ExtensionParams(ns.n, ns.k)


def validate(ns) -> RunConfig:
    cmd = ns.subcommand
    opts = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "format", "output", "no_header")}
    if cmd == "coeffs" and ns.order < 0:
        raise UsageError("--order must be >= 0")
    if cmd in ("eval", "compare"):
        if not 0 < ns.tol < 1:
            raise UsageError("--tol must lie in (0, 1)")
        if cmd == "eval":
            _params_from(ns)
    if cmd == "zeros":
        if ns.t_min < 0 or ns.t_max <= ns.t_min:
            raise UsageError("need 0 <= --t-min < --t-max")
        if not 0 < ns.step <= 0.1:
            raise UsageError("--step must lie in (0, 0.1]")
        if ns.t_max > MAX_IMAG:
            raise UsageError(f"--t-max is capped at {MAX_IMAG:g}")
    if cmd == "scan":
        if ns.steps < 2:
            raise UsageError("--steps must be >= 2")
        if not (-1 < ns.re_min < ns.re_max < 4):
            raise UsageError("need -1 < --re-min < --re-max < 4")
        if not ns.im_min < ns.im_max or max(abs(ns.im_min), abs(ns.im_max)) > MAX_IMAG:
            raise UsageError(f"need --im-min < --im-max within |Im| <= {MAX_IMAG:g}")
    if cmd == "audit":
        if not -0.5 < ns.xi < 0.5:
            raise UsageError("--xi must lie in (-1/2, 1/2)")
        if not 0 < ns.t <= MAX_IMAG:
            raise UsageError(f"--t must lie in (0, {MAX_IMAG:g}]")
        _params_from(ns)
        if ns.format != "json":
            raise UsageError("audit emits JSON only")
    meta = {"program": "emzeta", "version": __version__, "subcommand": cmd}
    meta.update({k: fmt_complex(v) if isinstance(v, complex) else fmt(v) for k, v in opts.items()})
    return RunConfig(cmd, opts, ns.format, ns.output, not ns.no_header, meta)


def _linspace(a: float, b: float, n: int) -> list[float]:
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def cmd_coeffs(ns):
    table = build_alpha_table(ns.order)
    ratios = [None] + (ratio_sequence(table) if table.order >= 1 else [])
    cols = ["k", "numerator", "denominator", "float", "ratio"]
    rows = [[k, a.numerator, a.denominator, table.alpha_float[k], ratios[k]] for k, a in enumerate(table.alpha)]
    return cols, rows


def cmd_eval(ns):
    params = _params_from(ns)
    if params is None:
        params = choose_params(ns.s, ns.tol)
    res = evaluate(ns.s, params)
    cols = ["re", "im", "value_re", "value_im", "abs", "N", "K", "truncation_estimate"]
    v = res.value
    return cols, [[ns.s.real, ns.s.imag, v.real, v.imag, abs(v), params.N, params.K, res.truncation_estimate]]


def cmd_compare(ns):
    s = ns.s
    params = choose_params(s, ns.tol)
    em = evaluate(s, params).value
    try:
        ref = zeta_oracle(s, max(ns.tol / 10, 1e-12))
        oracle_value, bound = ref.value, ref.abs_error_bound
    except ConditioningError:
        if s.real <= 1:
            raise
        M = 10**6
        oracle_value = dirichlet_partial(s, M)
        # sum_{n>M} n^-sigma <= M^(1-sigma)/(sigma-1)
        bound = M ** (1 - s.real) / (s.real - 1)
    cols = ["re", "im", "em_re", "em_im", "oracle_re", "oracle_im", "abs_diff", "oracle_bound", "N", "K"]
    return cols, [[s.real, s.imag, em.real, em.imag, oracle_value.real, oracle_value.imag,
                   abs(em - oracle_value), bound, params.N, params.K]]


def cmd_zeros(ns):
    recs = enumerate_zeros(ns.t_min, ns.t_max, step=ns.step)
    cols = ["ordinate", "residual_abs", "a18_mismatch", "N", "K", "iterations"]
    return cols, [[r.ordinate, r.residual_abs, r.a18_residual, r.params.N, r.params.K, r.iterations] for r in recs]


def cmd_scan(ns):
    cols = ["re", "im", "abs_Z", "arg_Z", "abs_zero_residual"]
    rows = []
    for x in _linspace(ns.re_min, ns.re_max, ns.steps):
        for y in _linspace(ns.im_min, ns.im_max, ns.steps):
            s = complex(x, y)
            if abs(s - 1.0) <= 1e-12:
                rows.append([x, y, math.inf, math.nan, math.inf])
                continue
            params = choose_params(s, 1e-10)
            z = evaluate(s, params).value
            try:
                r = abs(zero_residual(s, params))
            except ZetaError:
                r = math.nan
            rows.append([x, y, abs(z), math.atan2(z.imag, z.real), r])
    return cols, rows


def cmd_audit(ns):
    report = audit(ns.xi, ns.t, _params_from(ns))
    return report.to_dict()


COMMANDS = {
    "coeffs": cmd_coeffs,
    "eval": cmd_eval,
    "compare": cmd_compare,
    "zeros": cmd_zeros,
    "scan": cmd_scan,
    "audit": cmd_audit,
}


def render(cfg: RunConfig, payload) -> str:
    if isinstance(payload, dict):
        doc = {"meta": cfg.meta, **payload} if cfg.header else payload
        return json.dumps(_json_value(doc), indent=2) + "\n"
    cols, rows = payload
    if cfg.output_format == "json":
        records = [dict(zip(cols, row)) for row in rows]
        doc = {"meta": cfg.meta, "records": records} if cfg.header else records
        return json.dumps(_json_value(doc), indent=2) + "\n"
    buf = io.StringIO()
    if cfg.header:
        buf.write("# " + " ".join(f"{k}={v}" for k, v in cfg.meta.items()) + "\n")
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writerow(cols)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = validate(ns)
    except UsageError as exc:
        stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        payload = COMMANDS[cfg.subcommand](ns)
    except ZetaError as exc:
        stderr.write(json.dumps({"error": exc.kind, "message": str(exc)}) + "\n")
        return EXIT_NUMERIC
    text = render(cfg, payload)
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())
