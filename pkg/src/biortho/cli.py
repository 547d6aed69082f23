"""Command-line front end.

Subcommands: ``coeffs``, ``poly``, ``moments``, ``weights sample``,
``verify`` and ``report``.  Exact quantities are written as ``p/q`` strings;
floats use the shortest round-trip representation, so every emitted CSV or
JSON file re-emits byte-identically after parsing (see :func:`reemit`).

Exit codes: 0 success, 1 a verification check failed, 2 usage or parameter
error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BiorthoError, DomainError
from .functional import classify, moment_table
from .polyseq import ModelParams, coeffs, genP, genQ, to_fraction
from .weights import CASES, CaseId, buildMeasure
from . import verify as V

__all__ = ["RunConfig", "run", "main", "reemit", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1
MAX_N = 20
MAX_K = 12
CASE_KEYS = ("alpha", "p", "q", "r", "s", "beta0", "alpha1", "mu", "nu")
RAW_KEYS = ("r", "s", "beta0", "alpha1", "gamma")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    case: str | None = None
    case_params: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)
    variant: str = "corrected"
    convention: str = "minus"
    N: int = 5
    K: int = 8
    tol: float | None = None
    fmt: str = "text"
    output: str | None = None
    quad: bool = False
    x_from: float = -5.0
    x_to: float = 5.0
    points: int = 101


def _q(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fl(v) -> str:
    return repr(float(v))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _json(kind: str, payload: dict) -> str:
    doc = {"schema": f"biortho.{kind}/{SCHEMA_VERSION}"}
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def reemit(text: str, fmt: str) -> str:
    """Parse an emitted CSV or JSON document and write it back out."""
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        return _csv(rows[0], rows[1:])
    if fmt == "json":
        return json.dumps(json.loads(text), indent=2) + "\n"
    raise UsageError(f"no round-trip for format {fmt!r}")


# ---------------------------------------------------------------- resolution


def _validate(cfg: RunConfig):
    if cfg.case is not None and cfg.raw:
        raise UsageError("give either --case or raw parameters --r --s --beta0 --alpha1 --gamma, not both")
    if not 0 <= cfg.N <= MAX_N:
        raise UsageError(f"-N must be between 0 and {MAX_N}")
    if not 0 <= cfg.K <= MAX_K:
        raise UsageError(f"-K must be between 0 and {MAX_K}")
    if cfg.tol is not None and not cfg.tol > 0:
        raise UsageError("--tol must be positive")


def _case_id(cfg: RunConfig) -> CaseId:
    if cfg.case is None:
        raise UsageError(f"{cfg.subcommand} needs --case")
    return CaseId.of(cfg.case, cfg.variant, cfg.convention, **cfg.case_params)


def _params(cfg: RunConfig) -> tuple[ModelParams, str]:
    if cfg.case is not None:
        cid = _case_id(cfg)
        return buildMeasure(cid).params, cid.label
    missing = [k for k in RAW_KEYS if k not in cfg.raw]
    if missing:
        raise UsageError("raw parameters need all of --r --s --beta0 --alpha1 --gamma "
                         f"(missing {', '.join('--' + m for m in missing)}), or use --case")
    p = ModelParams(*(cfg.raw[k] for k in RAW_KEYS))
    return p, "raw"


# ---------------------------------------------------------------- commands


def _cmd_coeffs(cfg):
    p, label = _params(cfg)
    header = ["n", "beta_n", "alpha_n+1", "gamma_n+1", "beta~_n", "alpha~_n", "gamma~_n"]
    rows = []
    for n in range(cfg.N + 1):
        c = coeffs(p, n)
        rows.append([str(n), _q(c.beta), _q(c.alpha_next), _q(c.gamma_next), _q(c.beta_t),
                     "" if c.alpha_t is None else _q(c.alpha_t), "" if c.gamma_t is None else _q(c.gamma_t)])
    if cfg.fmt == "json":
        return 0, _json("coeffs", {"source": label, "columns": header, "rows": rows})
    if cfg.fmt == "csv":
        return 0, _csv(header, rows)
    width = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(width[i]) for i, h in enumerate(header))]
    lines += ["  ".join(v.rjust(width[i]) for i, v in enumerate(r)) for r in rows]
    return 0, "\n".join(lines) + "\n"


def _cmd_poly(cfg):
    p, label = _params(cfg)
    P = genP(p, cfg.N)
    Q = genQ(p, cfg.N)
    if cfg.fmt == "text":
        lines = [f"P{n} = {P[n]}" for n in range(cfg.N + 1)]
        lines += [f"Q{n} = {Q[n]}" for n in range(cfg.N + 1)]
        return 0, "\n".join(lines) + "\n"
    rows = []
    for name, seq in (("P", P), ("Q", Q)):
        for n, poly in enumerate(seq):
            for j, c in enumerate(poly.coefficients):
                rows.append([name, str(n), str(j), _q(c)])
    header = ["sequence", "n", "power", "coefficient"]
    if cfg.fmt == "json":
        return 0, _json("poly", {"source": label, "columns": header, "rows": rows})
    return 0, _csv(header, rows)


def _cmd_moments(cfg):
    p, label = _params(cfg)
    sys_ = classify(p)
    mt = moment_table(sys_, cfg.K)
    seqs = {"m0": mt.m0, "m1": mt.m1, "m2": mt.m2, "v0": mt.v0, "v1": mt.v1}
    quad = {}
    if cfg.quad:
        if cfg.case is None:
            raise UsageError("--quad needs --case")
        from .quad import moments
        b = buildMeasure(_case_id(cfg))
        k = min(cfg.K, 10)
        quad = {"m0": moments(b.mu0, k, cfg.tol).value, "m1": moments(b.mu1, k, cfg.tol).value}
    if cfg.fmt == "text":
        lines = [f"{name}: " + ",".join(_q(v) for v in seq) for name, seq in seqs.items()]
        for name, vals in quad.items():
            lines.append(f"{name} (quadrature): " + ",".join(_fl(v) for v in vals))
        return 0, "\n".join(lines) + "\n"
    header = ["functional", "k", "exact", "float", "quadrature"]
    rows = []
    for name, seq in seqs.items():
        for k, v in enumerate(seq):
            qv = quad.get(name)
            rows.append([name, str(k), _q(v), _fl(v), _fl(qv[k]) if qv is not None and k < len(qv) else ""])
    if cfg.fmt == "json":
        return 0, _json("moments", {"source": label, "columns": header, "rows": rows})
    return 0, _csv(header, rows)


def _cmd_weights(cfg):
    cid = _case_id(cfg)
    b = buildMeasure(cid)
    if cfg.points < 1:
        raise UsageError("--points must be >= 1")
    if not cfg.x_from <= cfg.x_to:
        raise UsageError("--from must not exceed --to")
    x = np.linspace(cfg.x_from, cfg.x_to, cfg.points)
    w0, w1 = b.mu0.w(x), b.mu1.w(x)
    header = ["x", "w0", "w1"]
    rows = [[_fl(a), _fl(c), _fl(d)] for a, c, d in zip(x, w0, w1)]
    if cfg.fmt == "json":
        atoms = {"mu0": [[_fl(l), _fl(m)] for l, m in b.mu0.atoms],
                 "mu1": [[_fl(l), _fl(m)] for l, m in b.mu1.atoms]}
        return 0, _json("weights", {"case": cid.label, "columns": header, "rows": rows, "atoms": atoms})
    return 0, _csv(header, rows)


def _case_list(cfg) -> list[CaseId]:
    if cfg.case in (None, "all"):
        if cfg.case is None and cfg.subcommand == "verify":
            raise UsageError("verify needs --case <id|all>")
        return [CaseId.of(n, cfg.variant, cfg.convention) for n in CASES]
    return [_case_id(cfg)]


def _cmd_verify(cfg):
    reports = [V.verifyCase(c) for c in _case_list(cfg)]
    status = 0 if all(r.passed for r in reports) else 1
    if cfg.fmt == "json":
        return status, _json("verify", {"reports": [r.to_dict() for r in reports]})
    return status, "".join(r.to_text() for r in reports)


REPORT_COLUMNS = ["case", "system", "passed", "pass", "fail", "skipped",
                  "moments", "mass", "ode", "linkage", "boundary", "continuity", "exact", "structure"]


def _cmd_report(cfg):
    rows = []
    ok = True
    for cid in _case_list(cfg):
        rep = V.verifyCase(cid)
        ok &= rep.passed
        try:
            tag = classify(buildMeasure(cid).params).tag
        except BiorthoError:
            tag = ""
        cnt = rep.counts()
        worst = rep.worstRelativeError
        rows.append([rep.caseId, tag, "true" if rep.passed else "false", str(cnt["pass"]), str(cnt["fail"]),
                     str(cnt["skipped"])] + [("%.3e" % worst[k]) if k in worst else "" for k in REPORT_COLUMNS[6:]])
    status = 0 if ok else 1
    if cfg.fmt == "json":
        return status, _json("report", {"columns": REPORT_COLUMNS, "rows": rows})
    return status, _csv(REPORT_COLUMNS, rows)


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "poly": _cmd_poly,
    "moments": _cmd_moments,
    "weights": _cmd_weights,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a configuration; returns (exit status, emitted text)."""
    _validate(cfg)
    if cfg.tol is None:
        return COMMANDS[cfg.subcommand](cfg)
    # --tol goes through the same env override as BIORTHO_TOL, for this run only
    saved = os.environ.get("BIORTHO_TOL")
    os.environ["BIORTHO_TOL"] = repr(cfg.tol)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    finally:
        if saved is None:
            os.environ.pop("BIORTHO_TOL", None)
        else:
            os.environ["BIORTHO_TOL"] = saved


# ---------------------------------------------------------------- argparse


def _add_common(sp, fmts=("text", "csv", "json")):
    sp.add_argument("--case", help="case id (" + ", ".join(CASES) + ") or 'all' where allowed")
    for k in CASE_KEYS + ("gamma",):
        sp.add_argument(f"--{k}", dest=f"par_{k}", default=None,
                        help="case parameter, or raw recurrence parameter without --case")
    sp.add_argument("--variant", default="corrected", choices=["corrected", "printed"])
    sp.add_argument("--convention", default="minus", choices=["minus", "plus"],
                    help="sign of delta0*delta1 for the VI.1 family")
    sp.add_argument("--tol", type=float, default=None, help="quadrature tolerance (overrides BIORTHO_TOL)")
    sp.add_argument("--format", dest="fmt", default=fmts[0], choices=list(fmts))
    sp.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="biortho", description="2-orthogonal polynomials and their weights")
    sub = ap.add_subparsers(dest="cmd", required=True)
    sp = sub.add_parser("coeffs", help="recurrence coefficient table")
    _add_common(sp)
    sp.add_argument("-N", type=int, default=5)
    sp = sub.add_parser("poly", help="exact polynomials P_n and Q_n")
    _add_common(sp)
    sp.add_argument("-N", type=int, default=5)
    sp = sub.add_parser("moments", help="exact moment tables")
    _add_common(sp)
    sp.add_argument("-K", type=int, default=8)
    sp.add_argument("--quad", action="store_true", help="add quadrature moments of the case weights")
    sp = sub.add_parser("weights", help="weight sampling")
    wsub = sp.add_subparsers(dest="wcmd", required=True)
    ws = wsub.add_parser("sample", help="sample w0 and w1 on a grid")
    _add_common(ws, fmts=("csv", "json"))
    ws.add_argument("--from", dest="x_from", type=float, default=-5.0)
    ws.add_argument("--to", dest="x_to", type=float, default=5.0)
    ws.add_argument("--points", type=int, default=101)
    sp = sub.add_parser("verify", help="verification report")
    _add_common(sp)
    sp.add_argument("--json", action="store_true", help="same as --format json")
    sp = sub.add_parser("report", help="one summary row per case")
    _add_common(sp, fmts=("csv", "json"))
    return ap


def _config(ns) -> RunConfig:
    vals = {k: getattr(ns, f"par_{k}") for k in CASE_KEYS + ("gamma",)}
    vals = {k: v for k, v in vals.items() if v is not None}
    try:
        vals = {k: to_fraction(v) for k, v in vals.items()}
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad numeric parameter: {e}")
    cfg = RunConfig(subcommand=ns.cmd, case=ns.case, variant=ns.variant, convention=ns.convention,
                    tol=ns.tol, fmt=ns.fmt, output=ns.output)
    if ns.case is None:
        extra = set(vals) - set(RAW_KEYS)
        if extra:
            raise UsageError(f"--{sorted(extra)[0]} is a case parameter and needs --case")
        cfg.raw = vals
    else:
        if "gamma" in vals:
            raise UsageError("--gamma is fixed by the case; drop --case to give raw parameters")
        cfg.case_params = vals
    if hasattr(ns, "N"):
        cfg.N = ns.N
    if hasattr(ns, "K"):
        cfg.K = ns.K
    if getattr(ns, "quad", False):
        cfg.quad = True
    if getattr(ns, "json", False):
        cfg.fmt = "json"
    if ns.cmd == "weights":
        cfg.x_from, cfg.x_to, cfg.points = ns.x_from, ns.x_to, ns.points
    return cfg


_NEG_VALUE = re.compile(r"^-(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?(/\d+)?$")


def _glue_negative_values(argv):
    """Turn ``--p -3/5`` into ``--p=-3/5``; argparse reads -3/5 as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok.startswith("--") and "=" not in tok:
            nxt = next(it, None)
            if nxt is not None and _NEG_VALUE.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = _config(ns)
        status, text = run(cfg)
    except (UsageError, DomainError) as e:
        print(f"biortho {ns.cmd}: error: {e}", file=sys.stderr)
        return 2
    except BiorthoError as e:
        print(f"biortho {ns.cmd}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
