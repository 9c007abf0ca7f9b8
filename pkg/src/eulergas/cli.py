"""Command-line entry point.

Every check subcommand produces a :class:`Report`; text output is
deterministic (no timings, no timestamp) while JSON carries both.
Exit codes: 0 all checks match, 1 some mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Optional, Sequence

from . import __version__
from . import analytic as A
from . import dirichlet as D
from . import identities as I
from . import partitions as P
from . import schur as S
from .qseries import expand_product, family
from .verdict import MATCH, MISMATCH, Verdict

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


@dataclass
class ReportEntry:
    module: str
    check: str
    params: dict
    status: str
    first_diff: Optional[list] = None
    residual: Optional[float] = None
    elapsed_ms: float = 0.0
    claim: bool = False
    note: str = ""

    def text(self) -> str:
        params = " ".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        line = f"{self.status:<8} {self.module}:{self.check}"
        if params:
            line += f" [{params}]"
        if self.first_diff is not None:
            n, left, right = self.first_diff
            line += f" first_diff n={n} left={left} right={right}"
        if self.residual is not None:
            line += f" residual={self.residual:.3e}"
        if self.claim:
            line += " (claim)"
        if self.note:
            line += f" -- {self.note}"
        return line


@dataclass
class Report:
    version: str = __version__
    timestamp: str = ""
    entries: list = field(default_factory=list)

    def add(self, entry: ReportEntry) -> None:
        self.entries.append(entry)

    @property
    def mismatches(self) -> list:
        return [e for e in self.entries if e.status != MATCH]

    def exit_code(self, lenient: bool = False) -> int:
        bad = [e for e in self.mismatches if not (lenient and e.claim)]
        return EXIT_MISMATCH if bad else EXIT_OK

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        raw = json.loads(text)
        return cls(raw["version"], raw["timestamp"],
                   [ReportEntry(**e) for e in raw["entries"]])

    def to_text(self) -> str:
        lines = [e.text() for e in self.entries]
        n_bad = len(self.mismatches)
        lines.append(f"{len(self.entries)} checks, {len(self.entries) - n_bad} match, {n_bad} mismatch")
        return "\n".join(lines)


def _from_verdict(module, check, params, v: Verdict, ms, claim=False) -> ReportEntry:
    return ReportEntry(module, check, params, v.status,
                       list(v.first_diff) if v.first_diff is not None else None,
                       None, round(ms, 3), claim, v.note)


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, (time.perf_counter() - t0) * 1000.0


def _tolerance_entry(module, check, params, residual, tol, ms, note="") -> ReportEntry:
    status = MATCH if residual < tol else MISMATCH
    return ReportEntry(module, check, params, status, None, residual, round(ms, 3), False,
                       note or f"tolerance {tol:g}")


# ---------------------------------------------------------------------------
# subcommands producing plain values

def _emit_value(args, payload: dict, text: str) -> int:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


def cmd_expand(args) -> int:
    N = args.order
    if N < 0:
        raise ValueError("order must be non-negative")
    specs = args.product
    if len(specs) == 1 and specs[0] in I.SEQUENCES:
        coeffs = I.sequence(specs[0], N + 1)
    elif len(specs) == 1 and _is_identity(specs[0]):
        name, fn = I.get_record(specs[0]).builders[0]
        coeffs = list(fn(N).coeffs)
    else:
        coeffs = list(expand_product([family(s) for s in specs], N).coeffs)
    return _emit_value(args, {"product": specs, "order": N, "coeffs": coeffs},
                       ",".join(map(str, coeffs)))


def _is_identity(name: str) -> bool:
    try:
        I.get_record(name)
    except KeyError:
        return False
    return True


def cmd_count(args) -> int:
    c = P.named_constraint(args.constraint)
    value = P.count_restricted(args.n, c)
    return _emit_value(args, {"constraint": args.constraint, "n": args.n, "count": value}, str(value))


def cmd_sequence(args) -> int:
    values = I.sequence(args.id, args.len)
    return _emit_value(args, {"id": args.id, "len": args.len, "values": values},
                       ",".join(map(str, values)))


def cmd_arith(args) -> int:
    value = D.arith_value(args.fn, args.n, args.s)
    return _emit_value(args, {"fn": args.fn, "n": args.n, "s": args.s, "value": value}, str(value))


# ---------------------------------------------------------------------------
# subcommands producing reports

def _identity_record(id: str, reading: str) -> I.IdentityRecord:
    if id == "two_modular":
        return I.two_modular_record(reading)
    return I.get_record(id)


def cmd_verify(args, report: Report) -> None:
    rec = _identity_record(args.id, args.reading)
    N = rec.default_order if args.order is None else args.order
    v, ms = _timed(I.verify_record, rec, N)
    report.add(_from_verdict("identities", rec.id, {"order": N}, v, ms, rec.claim))


def cmd_verify_all(args, report: Report) -> None:
    recs = I.catalog()
    if args.reading != "all":
        recs = [I.two_modular_record(args.reading) if r.id == "two_modular" else r for r in recs]
    for rec, N, v, ms in I.verify_all(recs, scale=args.order_scale, threads=args.threads):
        report.add(_from_verdict("identities", rec.id, {"order": N}, v, ms, rec.claim))


def cmd_dirichlet(args, report: Report) -> None:
    v, ms = _timed(D.verify_dirichlet, args.id, args.limit, args.s)
    params = {"limit": args.limit}
    if args.s is not None:
        params["s"] = args.s
    report.add(_from_verdict("dirichlet", args.id, params, v, ms))


def cmd_analytic(args, report: Report) -> None:
    check = args.check
    if check == "mellin":
        for s in ([args.s] if args.s is not None else [1.0, 2.0, 3.0]):
            r, ms = _timed(A.mellin_theta4, float(s))
            report.add(_tolerance_entry("analytic", "mellin", {"s": float(s)}, r.abs_err, 1e-6, ms,
                                        f"quadrature {r.lhs:.12f} closed form {r.rhs:.12f}"))
    elif check == "theta":
        (r1, r2), ms = _timed(A.theta_residuals)
        grid = f"{A.THETA_GRID[0]}..{A.THETA_GRID[-1]}"
        report.add(_tolerance_entry("analytic", "theta4-rearrangement", {"grid": grid}, r1, 1e-12, ms))
        report.add(_tolerance_entry("analytic", "theta-inversion", {"grid": grid}, r2, 1e-10, ms))
    elif check == "hagis":
        s = int(args.s) if args.s is not None else 2
        n = args.n if args.n is not None else 4000
        r, ms = _timed(A.hagis_check, s, n)
        closer = ("standard" if abs(r.empirical - r.standard_candidate)
                  < abs(r.empirical - r.alternative_candidate) else "alternative")
        note = (f"empirical {r.empirical:.6f}; pi*sqrt(2(s-1)/(3s)) {r.standard_candidate:.6f}; "
                f"pi*sqrt(2s/(3(1+s))) {r.alternative_candidate:.6f}; closer to {closer}")
        report.add(ReportEntry("analytic", "hagis", {"s": s, "n": n}, MATCH, None, None,
                               round(ms, 3), False, note))
    elif check == "hyperbolic":
        t = args.t if args.t is not None else 1.0
        K = args.n if args.n is not None else 1000
        r, ms = _timed(A.hyperbolic_product_check, t, K)
        coarse = A.hyperbolic_product_check(t, max(1, K // 10)).product
        ok = r.identity < 1e-12 and (K < 10 or r.product <= coarse)
        report.add(ReportEntry("analytic", "hyperbolic", {"t": t, "K": K}, MATCH if ok else MISMATCH,
                               None, r.max, round(ms, 3), False,
                               f"identity {r.identity:.3e}; product {r.product:.3e} (K/10: {coarse:.3e})"))
    elif check == "parastat":
        for t in ([args.t] if args.t is not None else [0.1, 1.0]):
            r, ms = _timed(A.parastat_half_check, t)
            report.add(_tolerance_entry("analytic", "parastat", {"t": t}, r, 1e-10, ms))


def cmd_schur(args, report: Report) -> None:
    if args.check == "det-vs-ssyt":
        ss = [args.s] if args.s is not None else [1, 2, 3]
        ms_ = [args.m] if args.m is not None else [2, 3]
        for M in ms_:
            D_ = args.d if args.d is not None else 6
            v, ms = _timed(S.bialternant_check, D_, M, args.points, args.seed)
            report.add(_from_verdict("schur", "ssyt-vs-bialternant",
                                     {"M": M, "max_weight": D_, "points": args.points}, v, ms))
            for s in ss:
                v, ms = _timed(S.parafermi_det_check, s, M, args.points, args.seed)
                report.add(_from_verdict("schur", "parafermi-sum-vs-det",
                                         {"s": s, "M": M, "points": args.points}, v, ms))
    else:
        ms_ = [args.m] if args.m is not None else [2, 3]
        D_ = args.d if args.d is not None else 6
        for M in ms_:
            s = args.s if args.s is not None else M
            v, ms = _timed(S.littlewood_check, M, D_, s)
            report.add(_from_verdict("schur", "littlewood", {"M": M, "D": D_, "s": s}, v, ms))


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    strict = argparse.ArgumentParser(add_help=False)
    g = strict.add_mutually_exclusive_group()
    g.add_argument("--strict", dest="lenient", action="store_false",
                   help="claim mismatches fail the run (default)")
    g.add_argument("--lenient", dest="lenient", action="store_true",
                   help="claim mismatches are reported but do not fail the run")
    strict.set_defaults(lenient=False)

    p = argparse.ArgumentParser(prog="eulergas", description="Exact checks of partition, "
                                "q-series, Dirichlet-series and Schur-function identities.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="print coefficients of a product")
    e.add_argument("--product", action="append", required=True,
                   help="sequence id, identity id, or factor family such as '1/(1-x^k)' (repeatable)")
    e.add_argument("--order", type=int, required=True)

    c = sub.add_parser("count", parents=[common], help="count restricted partitions of n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--constraint", required=True)

    q = sub.add_parser("sequence", parents=[common], help="print a named sequence prefix")
    q.add_argument("--id", required=True, choices=sorted(I.SEQUENCES))
    q.add_argument("--len", type=int, required=True)

    v = sub.add_parser("verify", parents=[common, strict], help="verify one identity")
    v.add_argument("--id", required=True)
    v.add_argument("--order", type=int)
    v.add_argument("--reading", choices=I.TWO_MODULAR_READINGS, default="all")

    va = sub.add_parser("verify-all", parents=[common, strict], help="verify the whole catalog")
    va.add_argument("--order-scale", type=float, default=1.0)
    va.add_argument("--threads", type=int, default=1)
    va.add_argument("--reading", choices=I.TWO_MODULAR_READINGS, default="all")

    d = sub.add_parser("dirichlet", parents=[common], help="verify a Dirichlet-series claim")
    d.add_argument("--id", required=True)
    d.add_argument("--limit", type=int, required=True)
    d.add_argument("--s", type=int)

    a = sub.add_parser("arith", parents=[common], help="evaluate an arithmetic function")
    a.add_argument("--fn", required=True, choices=sorted(D.ARITH_FUNCTIONS))
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--s", type=int)

    an = sub.add_parser("analytic", parents=[common], help="floating-point checks")
    an.add_argument("--check", required=True,
                    choices=("mellin", "theta", "hagis", "hyperbolic", "parastat"))
    an.add_argument("--s", type=float)
    an.add_argument("--n", type=int)
    an.add_argument("--t", type=float)

    sc = sub.add_parser("schur", parents=[common], help="Schur-function checks")
    sc.add_argument("--check", required=True, choices=("det-vs-ssyt", "littlewood"))
    sc.add_argument("--s", type=int)
    sc.add_argument("--m", type=int)
    sc.add_argument("--d", type=int)
    sc.add_argument("--points", type=int, default=20)
    sc.add_argument("--seed", type=int, default=0)
    return p


_VALUE_COMMANDS = {"expand": cmd_expand, "count": cmd_count, "sequence": cmd_sequence,
                   "arith": cmd_arith}
_REPORT_COMMANDS = {"verify": cmd_verify, "verify-all": cmd_verify_all, "dirichlet": cmd_dirichlet,
                    "analytic": cmd_analytic, "schur": cmd_schur}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command in _VALUE_COMMANDS:
            return _VALUE_COMMANDS[args.command](args)
        report = Report(timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))
        _REPORT_COMMANDS[args.command](args, report)
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"eulergas {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code(getattr(args, "lenient", False))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
