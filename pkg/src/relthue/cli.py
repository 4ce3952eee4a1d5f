"""Command-line interface: ``relthue {solve,verify,bounds,roots,oracle,presets}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from relthue.absolute import brute_box, known_abs_solutions
from relthue.bounds import (
    SCENARIOS,
    case_rules,
    check_printed_constants,
    derive_bounds,
    presets,
    scenario_for,
)
from relthue.errors import RelThueError
from relthue.forms import FAMILIES, is_valid_t, make_form
from relthue.roots import cached_root_data
from relthue.solver import (
    DEFAULT_SEARCH_RHS_CAP,
    DEFAULT_V_MAX,
    MODES,
    SEARCH,
    solve_relative,
    verify_theorem,
)

FORMATS = ("json", "csv", "table")


def parse_t(text: str) -> list[int]:
    """``5``, ``-20..20`` (inclusive) or a comma list of either."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty t specification")
    return out


def parse_m(text: str) -> list[int]:
    vals = [int(p) for p in text.split(",") if p.strip()]
    if not vals:
        raise argparse.ArgumentTypeError("empty m list")
    return vals


def positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


@dataclass
class RunConfig:
    subcommand: str
    family: str | None = None
    t: list[int] | None = None
    m: list[int] | None = None
    mode: str = SEARCH
    v_max: int = DEFAULT_V_MAX
    search_rhs_cap: int = DEFAULT_SEARCH_RHS_CAP
    scenario: str | None = None
    d_max: int = 1
    fmt: str = "json"
    jobs: int = 1
    out: str | None = None
    check: bool = False


# -- rendering --

def render_rows(rows: list[dict], fmt: str, doc: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps(doc if doc is not None else rows, indent=2, sort_keys=False) + "\n"
    if not rows:
        return ""
    keys = list(rows[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r.get(k)) for k in keys})
        return buf.getvalue()
    widths = {k: max(len(k), *(len(_cell(r.get(k))) for r in rows)) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
    lines.append("  ".join("-" * widths[k] for k in keys))
    for r in rows:
        lines.append("  ".join(_cell(r.get(k)).ljust(widths[k]) for k in keys))
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


# -- subcommands --

def _notice_skipped(family: str, ts: list[int]) -> list[int]:
    keep = [t for t in ts if is_valid_t(family, t)]
    for t in ts:
        if t not in keep:
            print(f"notice: skipping excluded parameter t = {t}", file=sys.stderr)
    return keep


def cmd_solve(cfg: RunConfig) -> tuple[int, str]:
    ts = _notice_skipped(cfg.family, cfg.t) if len(cfg.t) > 1 else cfg.t
    kw = dict(v_max=cfg.v_max, search_rhs_cap=cfg.search_rhs_cap, scenario=cfg.scenario)
    reports = []
    for m in cfg.m:
        for t in ts:
            reports.append(solve_relative(cfg.family, t, m, cfg.mode, **kw))
    reports.sort(key=lambda r: (r.m, r.t))
    rows = [{
        "t": r.t, "m": r.m, "solutions": len(r.solutions), "completeness": r.completeness,
        "regime": r.regime,
        "pairs": "; ".join(str(p) for p in r.solutions),
        "mismatches": 0 if r.ok else len(r.comparison.missing) + len(r.comparison.extra),
    } for r in reports]
    doc = [r.to_json() for r in reports]
    doc = doc[0] if len(doc) == 1 else {"schema": 1, "reports": doc}
    return 0, render_rows(rows, cfg.fmt, doc)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    kw = dict(v_max=cfg.v_max, search_rhs_cap=cfg.search_rhs_cap)
    for t in cfg.t:
        if not is_valid_t(cfg.family, t):
            print(f"notice: skipping excluded parameter t = {t}", file=sys.stderr)
    rep = verify_theorem(cfg.family, cfg.m, cfg.t, cfg.mode, jobs=cfg.jobs, **kw)
    bad = len(rep.mismatches)
    rows = [c.summary() for c in rep.cells]
    text = render_rows(rows, cfg.fmt, rep.to_json())
    print(f"{len(rep.cells)} cells, {bad} mismatches", file=sys.stderr)
    if cfg.fmt != "json":
        text += f"{bad} mismatches\n"
    return (1 if bad else 0), text


def cmd_bounds(cfg: RunConfig) -> tuple[int, str]:
    if cfg.check:
        checks = check_printed_constants()
        rows = [{
            "family": c.family, "scenario": c.scenario, "m": c.m, "quantity": c.quantity,
            "printed": str(float(c.printed)), "computed": f"{float(c.computed.hi):.6f}",
            "deviation": f"{float(c.deviation):.6f}", "ok": c.ok("0.002"),
        } for c in checks]
        return (0 if all(r["ok"] for r in rows) else 1), render_rows(rows, cfg.fmt)
    rows, docs = [], []
    for m in cfg.m:
        scen = cfg.scenario or scenario_for(cfg.family, m, 1)
        p = presets(cfg.family, scen)
        b = derive_bounds(p)
        rules = case_rules(m, p, b)
        thr = b.threshold(m)
        rows.append({"m": m, "scenario": scen, "case": "threshold", "trigger": "|y| >",
                     "threshold": f"{float(thr.hi):.6f}", "rhs": "", "d_max": ""})
        for r in rules:
            rows.append({"m": m, "scenario": scen, "case": r.case_id, "trigger": r.trigger,
                         "threshold": "" if r.threshold is None else f"{float(r.threshold.hi):.6f}",
                         "rhs": f"{float(r.rhs_bound.hi):.6f}", "d_max": r.d_max})
        docs.append({"m": m, "scenario": scen, "preset": p.to_json(), "bounds": b.to_json(),
                     "threshold": thr.to_json(), "rules": [r.to_json() for r in rules]})
    return 0, render_rows(rows, cfg.fmt, {"schema": 1, "family": cfg.family, "results": docs})


def cmd_roots(cfg: RunConfig) -> tuple[int, str]:
    ts = _notice_skipped(cfg.family, cfg.t)
    rows, docs = [], []
    for t in ts:
        rd = cached_root_data(cfg.family, t)
        rows.append({"t": t, "A_lower": f"{float(rd.A_lower):.9f}", "B_lower": f"{float(rd.B_lower):.9f}",
                     "roots": [f"{float((a + b) / 2):.9f}" for a, b in rd.root_intervals]})
        docs.append(rd.to_json())
    return 0, render_rows(rows, cfg.fmt, {"schema": 1, "results": docs})


def cmd_oracle(cfg: RunConfig) -> tuple[int, str]:
    ts = _notice_skipped(cfg.family, cfg.t)
    rows, docs = [], []
    for t in ts:
        if cfg.mode == "cited":
            lst = known_abs_solutions(cfg.family, t, cfg.d_max)
            if lst is None:
                print(f"notice: t = {t}, d_max = {cfg.d_max} not covered by a cited table",
                      file=sys.stderr)
                continue
        else:
            lst = brute_box(make_form(cfg.family, t), cfg.d_max, cfg.v_max)
        rows.append({"t": t, "d_max": cfg.d_max, "v_max": lst.box, "completeness": lst.completeness,
                     "count": len(lst.pairs), "pairs": [f"({u},{v})" for u, v in lst.pairs]})
        docs.append(lst.to_json())
    return 0, render_rows(rows, cfg.fmt, {"schema": 1, "results": docs})


def cmd_presets(cfg: RunConfig) -> tuple[int, str]:
    rows = []
    for fam in ([cfg.family] if cfg.family else list(FAMILIES)):
        for scen in SCENARIOS:
            p = presets(fam, scen)
            rows.append({"family": fam, "scenario": scen, "epsilon": str(float(p.epsilon)),
                         "eta": str(float(p.eta)), "A": str(float(p.A)), "B": str(float(p.B))})
    return 0, render_rows(rows, cfg.fmt, {"schema": 1, "presets": rows})


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "roots": cmd_roots,
    "oracle": cmd_oracle,
    "presets": cmd_presets,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relthue", description=(
        "Relative Thue inequalities |F_t(x,y)| <= 1 for the simplest quartic and sextic "
        "families over imaginary quadratic fields."))
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, family=True, t=None, m=None):
        if family:
            p.add_argument("--family", choices=FAMILIES, required=family is True)
        if t is not None:
            p.add_argument("--t", type=parse_t, required=t is True, default=None if t is True else parse_t(t),
                           help="integer, inclusive range a..b, or comma list")
        if m is not None:
            p.add_argument("--m", type=parse_m, required=m is True, default=None if m is True else parse_m(m),
                           help="comma-separated square-free m values")
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
        p.add_argument("--out", default=None, help="write the report to FILE instead of stdout")

    def solving(p):
        p.add_argument("--mode", choices=MODES, default=SEARCH)
        p.add_argument("--v-max", type=positive, default=DEFAULT_V_MAX)
        p.add_argument("--search-rhs-cap", type=int, default=DEFAULT_SEARCH_RHS_CAP)

    p = sub.add_parser("solve", help="solve one or more (t, m) cells")
    common(p, t=True, m=True)
    solving(p)
    p.add_argument("--scenario", choices=SCENARIOS, default=None)

    p = sub.add_parser("verify", help="compare solver output with the expected tables")
    common(p, t="-20..20", m=True)
    solving(p)
    p.add_argument("--jobs", type=positive, default=1)

    p = sub.add_parser("bounds", help="bound constants and case rules for a scenario")
    common(p, family="optional", m="7")
    p.add_argument("--scenario", choices=SCENARIOS, default=None)
    p.add_argument("--check", action="store_true", help="regress every tabulated constant")

    p = sub.add_parser("roots", help="certified root enclosures and gap bounds")
    common(p, t=True)

    p = sub.add_parser("oracle", help="absolute Thue inequality |F(u,v)| <= d_max")
    common(p, t=True)
    p.add_argument("--d-max", type=int, default=1)
    p.add_argument("--v-max", type=positive, default=DEFAULT_V_MAX)
    p.add_argument("--mode", choices=MODES, default=SEARCH,
                   help="cited: expand cited tables; search: box search")

    p = sub.add_parser("presets", help="list the shipped (epsilon, eta) presets")
    common(p, family="optional")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=ns.subcommand)
    for name in ("family", "t", "m", "mode", "v_max", "search_rhs_cap", "scenario", "d_max",
                 "fmt", "jobs", "out", "check"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    return cfg


def run(cfg: RunConfig) -> int:
    if cfg.subcommand == "bounds" and not cfg.check and cfg.family is None:
        print("error: bounds needs --family (or --check)", file=sys.stderr)
        return 2
    try:
        status, text = COMMANDS[cfg.subcommand](cfg)
    except RelThueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
