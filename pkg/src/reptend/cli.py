"""Command-line front end.

Exit status: 0 success, 1 domain or usage error, 2 verification failure
(an implementation disagreed with its oracle), 3 finding (a published claim
was empirically violated).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from . import __version__
from .census import CENSUS_CAP, WIEFERICH_CAP, census, totient_sums, wieferich_scan
from .density import DEFAULT_TRUNCATION, delta
from .errors import DomainError, VerificationError
from .expsums import SCAN_CAP, bound_scan, max_over_s, bound_ratios, mobius_character_sums
from .indicator import CENSUS_CAP as LEMMA1_CAP, psi_census_check
from .numtheory import find_primitive_root, next_prime, sieve_primes
from .periods import full_reptend_scan, period_digits

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_FINDING = 0, 1, 2, 3

COMMANDS = ("period", "reptend", "census", "density", "totient-sums", "expsum",
            "verify-lemma1", "verify-lemma33", "wieferich")

THREADS_ENV = "REPTEND_THREADS"

# per-command default and maximum for --limit
_LIMITS = {
    "reptend": (100, CENSUS_CAP),
    "census": (10**6, CENSUS_CAP),
    "totient-sums": (10**6, CENSUS_CAP),
    "expsum": (SCAN_CAP, SCAN_CAP),
    "verify-lemma1": (200, LEMMA1_CAP),
    "verify-lemma33": (300, 2000),
    "wieferich": (10**6, WIEFERICH_CAP),
}


@dataclass
class RunConfig:
    command: str
    base: int = 10
    limit: Optional[int] = None
    trunc: int = DEFAULT_TRUNCATION
    format: str = "table"
    seed: int = 0
    threads: int = 1
    p: Optional[int] = None
    pmin: int = 10
    variant: str = "printed"
    short_interval: bool = False
    output: Optional[str] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json", "table"):
            raise DomainError(f"unknown format {self.format!r}")
        for name in ("base", "trunc", "threads"):
            if getattr(self, name) < 1:
                raise DomainError(f"--{name} must be positive")
        if self.seed < 0:
            raise DomainError("--seed must be nonnegative")
        if self.base < 2:
            raise DomainError("--base must be >= 2")
        if self.trunc < 100:
            raise DomainError("--trunc must be >= 100")
        if self.command in _LIMITS:
            default, cap = _LIMITS[self.command]
            if self.limit is None:
                self.limit = default
            if not 2 <= self.limit <= cap:
                raise DomainError(f"--limit for {self.command} must lie in [2, {cap}]")
        if self.command == "period" and (self.p is None or self.p < 2):
            raise DomainError("period needs --p >= 2")
        if self.p is not None and self.command == "expsum" and not 3 <= self.p <= SCAN_CAP:
            raise DomainError(f"--p for expsum must lie in [3, {SCAN_CAP}]")
        return self


@dataclass
class Report:
    """What a command produced: headline fields, an optional table, findings."""

    summary: dict
    columns: tuple = ()
    rows: list = None
    findings: list = None
    notes: tuple = ()

    def exit_code(self):
        return EXIT_FINDING if self.findings else EXIT_OK


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _period(cfg):
    rec = period_digits(cfg.p, cfg.base)
    digits = rec.text if rec.text is not None else (
        " ".join(map(str, rec.digits)) if rec.digits is not None else None)
    return Report({"p": rec.p, "d": rec.d, "digits": digits, "maximal": rec.maximal,
                   "base": rec.base})


def _reptend(cfg):
    hits = full_reptend_scan(cfg.limit, cfg.base, seed=cfg.seed)
    return Report({"base": cfg.base, "limit": cfg.limit, "count": len(hits)},
                  ("p",), [(p,) for p in hits])


def _census(cfg):
    r = census(cfg.base, cfg.limit, P=cfg.trunc, short_interval=cfg.short_interval,
               threads=cfg.threads, variant=cfg.variant)
    cols = ("u", "x", "pi_x", "pi_u_x", "li_x", "delta_u", "predicted", "ratio",
            "P", "tail_bound", "short_interval", "skipped")
    row = (r.u, r.x, r.pi_x, r.pi_u_x, r.li_x, r.delta_u, r.predicted, r.ratio,
           r.P, r.tail_bound, r.short_interval, " ".join(map(str, r.skipped)))
    return Report(dict(zip(cols, row)), cols, [row], notes=(r.scope,))


def _density(cfg):
    r = delta(cfg.base, cfg.trunc, cfg.variant)
    d = r.decomposition
    cols = ("u", "k", "root", "s", "t", "mu_s", "s_mod4", "case_branch", "variant",
            "a_k", "delta", "P", "tail_bound")
    row = (r.u, d.k, d.root, d.s, d.t, d.mu_s, d.s_mod4, r.case_branch, r.variant,
           r.a_k, r.delta, r.P, r.tail_bound)
    return Report(dict(zip(cols, row)), cols, [row])


def _totient(cfg):
    r = totient_sums(cfg.limit, cfg.trunc)
    cols = ("x", "sum_ratio_pm1", "sum_ratio_p", "difference", "li_x", "artin",
            "predicted", "residual_pm1", "residual_p", "relative_residual_pm1", "P")
    row = (r.x, r.sum_ratio_pm1, r.sum_ratio_p, r.difference, r.li_x, r.artin,
           r.predicted, r.residual_pm1, r.residual_p, r.relative_residual_pm1, r.P)
    return Report(dict(zip(cols, row)), cols, [row], notes=(r.scope,))


def _expsum(cfg):
    cols = ("p", "tau", "s_max", "max_modulus", "ratio_78", "ratio_sqrt")
    if cfg.p is not None:
        tau = find_primitive_root(cfg.p)
        s, mod = max_over_s(cfg.p, tau)
        rows = [(cfg.p, tau, s, mod) + bound_ratios(cfg.p, mod)]
        bad = [(cfg.p, s, mod)] if mod > cfg.p ** (15 / 16) else []
    else:
        rep = bound_scan(cfg.pmin, cfg.limit)
        rows, bad = rep.rows, rep.violations
    findings = [f"max |V_p(s)| = {m:.17g} exceeds p^(15/16) at p={p}, s={s}" for p, s, m in bad]
    worst = max((r[4] for r in rows), default=0.0)
    return Report({"primes": len(rows), "worst_ratio_78": worst, "violations": len(bad)},
                  cols, rows, findings,
                  notes=("bound tested with implied constant 1",))


def _lemma1(cfg):
    rep = psi_census_check(cfg.limit)
    cols = ("p", "primitive_roots", "phi_p_minus_1")
    rows = [(p, rep.root_counts[p], rep.phi_values[p]) for p in sorted(rep.root_counts)]
    return Report({"pmax": rep.pmax, "primes": rep.primes_checked,
                   "elements": rep.elements_checked, "mismatches": len(rep.mismatches)},
                  cols, rows)


def _lemma33(cfg):
    cols = ("p", "q", "max_identity_error", "max_printed_gap", "max_bound_ratio",
            "bound_violations")
    rows, findings = [], []
    worst_err = 0.0
    for p in sieve_primes(cfg.limit).primes.tolist():
        q = next_prime(p)
        sums = mobius_character_sums(q, p)
        err = float(np.abs(sums["direct"] - sums["closed_form"]).max())
        gap = float(sums["printed_gap"].max())
        t = sums["t"]
        ratio = np.abs(sums["direct"]) / (2 * q * math.log(p) / (math.pi * t))
        nviol = int((ratio > 1).sum())
        rows.append((p, q, err, gap, float(ratio.max()), nviol))
        worst_err = max(worst_err, err)
        if gap > 1e-8:
            findings.append(f"printed numerator omega^(dtp) differs from the geometric sum "
                            f"at p={p}, q={q} by up to {gap:.17g}")
        if nviol:
            findings.append(f"|sum omega^(tn)| <= 2q log p/(pi t) fails for {nviol} values "
                            f"of t at p={p}, q={q}")
    if worst_err > 1e-8:
        raise VerificationError(f"inclusion-exclusion identity off by {worst_err:.3g}")
    return Report({"pmax": cfg.limit, "max_identity_error": worst_err,
                   "findings": len(findings)}, cols, rows, findings)


def _wieferich(cfg):
    hits = wieferich_scan(cfg.base, cfg.limit)
    return Report({"base": cfg.base, "limit": cfg.limit, "count": len(hits), "revalidated": True},
                  ("p",), [(h.p,) for h in hits])


_DISPATCH = {"period": _period, "reptend": _reptend, "census": _census, "density": _density,
             "totient-sums": _totient, "expsum": _expsum, "verify-lemma1": _lemma1,
             "verify-lemma33": _lemma33, "wieferich": _wieferich}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    if v is None:
        return ""
    return str(v)


def _plain(v):
    if isinstance(v, np.generic):
        return v.item()
    return v


def _meta(cfg):
    conf = {k: v for k, v in asdict(cfg).items() if k != "output"}
    return {"command": cfg.command, "version": __version__, "config": conf}


def render(cfg: RunConfig, rep: Report) -> str:
    meta = _meta(cfg)
    if cfg.format == "json":
        obj = {k: _plain(v) for k, v in rep.summary.items()}
        if rep.rows is not None and len(rep.rows) != 1:
            obj["rows"] = [dict(zip(rep.columns, map(_plain, r))) for r in rep.rows]
        obj["findings"] = list(rep.findings or [])
        obj["notes"] = list(rep.notes)
        obj.update(meta)
        return json.dumps(obj, separators=(",", ":")) + "\n"

    conf = " ".join(f"{k}={_fmt(v)}" for k, v in meta["config"].items())
    header = [f"# reptend {meta['version']} {cfg.command}", f"# config {conf}"]
    header += [f"# note {n}" for n in rep.notes]
    header += [f"# finding {f}" for f in rep.findings or []]
    columns = rep.columns or tuple(rep.summary)
    rows = rep.rows if rep.rows is not None else [tuple(rep.summary.values())]

    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(v) for v in r])
        return "\n".join(header) + "\n" + buf.getvalue()

    cells = [list(columns)] + [[_fmt(v) for v in r] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(columns))]
    lines = ["  ".join(c[i].rjust(widths[i]) for i in range(len(columns))) for c in cells]
    summary = [f"{k}: {_fmt(v)}" for k, v in rep.summary.items()]
    if len(rows) == 1 and dict(zip(columns, rows[0])) == rep.summary:
        summary = []
    return "\n".join(header + lines + summary) + "\n"


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    parser = _Parser(prog="reptend", description="Primes with a fixed primitive root.")
    parser.add_argument("--version", action="version", version=f"reptend {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--base", "-u", type=int, default=10)
        sp.add_argument("--limit", "-x", type=int, default=None)
        sp.add_argument("--trunc", "-P", type=int, default=DEFAULT_TRUNCATION)
        sp.add_argument("--format", choices=("csv", "json", "table"), default="table")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--threads", type=int, default=threads)
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--pmin", type=int, default=10)
        sp.add_argument("--variant", choices=("printed", "classical"), default="printed")
        sp.add_argument("--short-interval", action="store_true")
        sp.add_argument("--output", "-o", default=None)
    return parser


def run(cfg: RunConfig, stdout=None) -> int:
    """Validate, dispatch and emit one report; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        cfg.validate()
        rep = _DISPATCH[cfg.command](cfg)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = render(cfg, rep)
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return rep.exit_code()


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    cfg = RunConfig(**{k.replace("-", "_"): v for k, v in vars(ns).items()})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
