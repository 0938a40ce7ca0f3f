"""``vknot`` command line.

Positional codes may also be catalog names such as ``virtual_trefoil``.
Exit status 64 signals a usage error.  ``search`` exits 0, 1 or 2 for
Proven, Distinguished and Unknown.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .catalog import load_catalog
from .certificate import CertificateError, replay, write_certificate
from .errors import VKnotError
from .gauss import canonical_form, connected_sum, mirror, parse
from .invariants import f_polynomial, odd_writhe, writhe
from .moves import MoveSet
from .render import render_svg
from .search import Distinguished, Proven, SearchBudget, Unknown, equivalent_within, orbit
from .surface import genus

EX_USAGE = 64
INVARIANT_COLUMNS = ("code", "components", "writhe", "J", "genus", "f_polynomial", "error")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _diagram(text, catalog):
    try:
        return parse(catalog.resolve(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(
            max_arrows=args.max_arrows,
            max_nodes=args.budget_nodes,
            max_depth=args.budget_depth,
            seed=args.seed,
            threads=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def invariant_row(text: str, catalog=None) -> dict:
    """One invariants table row; parse or budget failures land in ``error``."""
    row = dict.fromkeys(INVARIANT_COLUMNS, "")
    row["code"] = text
    try:
        d = parse(catalog.resolve(text) if catalog else text)
        row["components"] = len(d.circles)
        row["writhe"] = writhe(d)
        row["J"] = odd_writhe(d) if len(d.circles) == 1 else "n/a"
        row["genus"] = genus(d).genus
        row["f_polynomial"] = str(f_polynomial(d))
    except VKnotError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def format_rows(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=INVARIANT_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _read_codes(args):
    codes = list(args.codes)
    if args.file:
        stream = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
        with stream:
            for line in stream:
                line = line.split("#", 1)[0].strip()
                if line:
                    codes.append(line)
    return codes


# -- verbs --------------------------------------------------------------------

def cmd_validate(args, catalog, out):
    status = 0
    for text in args.codes:
        try:
            d = parse(catalog.resolve(text))
            out.write(f"ok {d}\n")
        except ValueError as exc:
            sys.stderr.write(f"invalid {text}: {type(exc).__name__}: {exc}\n")
            status = 1
    return status


def cmd_canon(args, catalog, out):
    for text in args.codes:
        out.write(canonical_form(_diagram(text, catalog)) + "\n")
    return 0


def cmd_invariants(args, catalog, out):
    codes = _read_codes(args)
    if not codes:
        raise UsageError("no codes given")
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(lambda t: invariant_row(t, catalog), codes))
    else:
        rows = [invariant_row(t, catalog) for t in codes]
    out.write(format_rows(rows, args.format))
    return 0


def cmd_genus(args, catalog, out):
    reports = [genus(_diagram(t, catalog)).to_json() for t in args.codes]
    out.write(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2) + "\n")
    return 0


def cmd_mirror(args, catalog, out):
    out.write(str(mirror(_diagram(args.code, catalog))) + "\n")
    return 0


def cmd_sum(args, catalog, out):
    d1, d2 = _diagram(args.code1, catalog), _diagram(args.code2, catalog)
    try:
        s = connected_sum(d1, args.break1, d2, args.break2)
    except (VKnotError, IndexError) as exc:
        raise UsageError(str(exc)) from exc
    out.write(str(s) + "\n")
    return 0


def search_verdict(d1, d2, regime, budget):
    """Run a search and return (exit code, stdout text)."""
    v = equivalent_within(d1, d2, regime, budget)
    if isinstance(v, Proven):
        return 0, write_certificate(d1, d2, regime, budget, v.path)
    if isinstance(v, Distinguished):
        a, b = v.values
        return 1, f"distinguished {v.invariant} {a} | {b}\n"
    assert isinstance(v, Unknown)
    stages = " ".join(f"{cap}:{status}:{n}" for cap, status, n in v.stages)
    return 2, f"unknown {v.reason}; nodes={v.nodes} stages={stages}\n"


def cmd_search(args, catalog, out):
    d1, d2 = _diagram(args.code1, catalog), _diagram(args.code2, catalog)
    regime = MoveSet.from_name(args.regime)
    code, text = search_verdict(d1, d2, regime, _budget(args))
    if code == 0 and args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"proven {len(text.splitlines()) - 8} moves; certificate {args.certificate}\n")
    else:
        out.write(text)
    return code


def cmd_replay(args, catalog, out):
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        final = replay(text)
    except CertificateError as exc:
        sys.stderr.write(f"certificate rejected: {exc}\n")
        return 1
    out.write(f"ok {canonical_form(final)}\n")
    return 0


def cmd_orbit(args, catalog, out):
    d = _diagram(args.code, catalog)
    for code in sorted(orbit(d, MoveSet.from_name(args.regime), _budget(args))):
        out.write(code + "\n")
    return 0


def cmd_render(args, catalog, out):
    svg = render_svg(_diagram(args.code, catalog))
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        out.write(svg)
    return 0


def cmd_catalog(args, catalog, out):
    if args.action == "show":
        if not args.name or args.name not in catalog:
            raise UsageError(f"unknown catalog entry {args.name!r}")
        out.write(catalog.code(args.name) + "\n")
        return 0
    for e in catalog:
        out.write(f"{e.name} {e.code} {e.status}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vknot", description="Virtual knots on Gauss diagrams.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    search_opts = _Parser(add_help=False)
    search_opts.add_argument("--regime", choices=[m.value for m in MoveSet], default="virtual")
    search_opts.add_argument("--budget-nodes", type=int, default=10**6)
    search_opts.add_argument("--budget-depth", type=int, default=24)
    search_opts.add_argument("--max-arrows", type=int, default=None)
    search_opts.add_argument("--seed", type=int, default=0)
    search_opts.add_argument("--threads", type=int, default=1)

    s = sub.add_parser("validate", help="check that codes parse")
    s.add_argument("codes", nargs="+")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("canon", help="print canonical forms")
    s.add_argument("codes", nargs="+")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("invariants", help="table of invariants")
    s.add_argument("codes", nargs="*")
    s.add_argument("--file", help="file with one code per line, '-' for stdin")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("genus", help="carrier surface report as JSON")
    s.add_argument("codes", nargs="+")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("mirror", help="switch every crossing")
    s.add_argument("code")
    s.set_defaults(func=cmd_mirror)

    s = sub.add_parser("sum", help="connected sum at the given break points")
    s.add_argument("code1")
    s.add_argument("break1", type=int)
    s.add_argument("code2")
    s.add_argument("break2", type=int)
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("search", parents=[search_opts], help="bounded equivalence search")
    s.add_argument("code1")
    s.add_argument("code2")
    s.add_argument("--certificate", help="write the certificate here instead of stdout")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("replay", help="re-check a certificate")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("orbit", parents=[search_opts], help="list reachable canonical forms")
    s.add_argument("code")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("render", help="SVG chord diagram")
    s.add_argument("code")
    s.add_argument("output", nargs="?", help="output path, stdout when omitted")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("catalog", help="list or show catalog entries")
    s.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        catalog = load_catalog()
        return args.func(args, catalog, out)
    except UsageError as exc:
        sys.stderr.write(f"vknot: error: {exc}\n")
        return EX_USAGE
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"vknot: error: {exc}\n")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
