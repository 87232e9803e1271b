"""Command line for computing, tabulating and verifying the bounds.

Verbs: compute, table, verify, oracle, fixtures.  Exit codes: 0 success,
2 usage error, 3 refusal (invalid column/family combination, non-monotone
graph, no quotient), 4 resource cap exceeded.  All configuration flows
through flags; --seed is accepted but reserved (nothing is randomized).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, exactlp, magnitude, oracle, projective, refdata, seqchannels, zchannel
from .channels import (ChannelSpec, EnumerationCapExceeded, FIXTURES,
                       GspbError, NotMonotoneError, OracleCapExceeded,
                       QuotientUnavailable, DEFAULT_ENUM_CAP)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_CAP = 4

FAMILY_NAMES = {
    "z": "z", "mag-asym": "mag_asym", "mag-sym": "mag_sym",
    "deletion": "deletion", "grain": "grain", "projective": "projective",
}

VALID_COLUMNS = {
    "z": ("MB", "ASPV", "GSPB", "REF"),
    "mag_asym": ("MB", "ASPV", "CLOSED", "GSPB"),
    "mag_sym": ("ASPV", "CLOSED", "GSPB"),
    "deletion": ("MB", "ASPV", "CLOSED", "GSPB", "REF"),
    "grain": ("MB", "ASPV", "CLOSED", "GSPB", "REF"),
    "projective": ("ASPV", "GSPB", "REF"),
}

_COLUMN_TO_ENTRY = {"MB": "mb", "ASPV": "aspv", "CLOSED": "closed", "GSPB": "gspb"}


class Refusal(Exception):
    pass


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _spec_from_args(args) -> ChannelSpec:
    family = FAMILY_NAMES[args.family]
    q = args.q
    if family in ("mag_asym", "mag_sym"):
        if q is None:
            raise Refusal(f"--q is required for {args.family}")
    elif q is not None:
        raise Refusal(f"--q does not apply to {args.family}")
    return ChannelSpec(family, n=args.n, r=args.r, q=q)


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    spec = _spec_from_args(args)
    report = bounds.assemble_report(spec, args.r, lp_cap=args.lp_cap,
                                    enum_cap=args.enum_cap)
    name = _COLUMN_TO_ENTRY.get(args.bound.upper())
    if name is None or name not in report.entries:
        raise Refusal(f"bound {args.bound!r} is not available for {args.family}")
    entry = report.entry(name)
    if entry.value is None:
        if "cap" in entry.note:
            raise _CapError(entry.note)
        raise Refusal(entry.note or f"{args.bound} unavailable")
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        line = f"{entry.floor}"
        if args.exact:
            line += f"  exact {_fmt_frac(entry.value)}"
        if entry.note:
            line += f"  [{entry.note}]"
        print(line)
    return EXIT_OK


class _CapError(Exception):
    pass


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_reports(args, family: str):
    ns = range(args.n_from, args.n_to + 1)

    def one(n: int):
        spec = ChannelSpec(family, n=n, r=args.r, q=args.q)
        include_gspb = "GSPB" in args.columns_list
        return bounds.assemble_report(spec, args.r, lp_cap=args.lp_cap,
                                      enum_cap=args.enum_cap,
                                      include_gspb=include_gspb)

    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_table_worker,
                                 [(family, n, args.r, args.q, args.lp_cap,
                                   args.enum_cap, tuple(args.columns_list))
                                  for n in ns]))
    return [one(n) for n in ns]


def _table_worker(packed):
    family, n, r, q, lp_cap, enum_cap, columns = packed
    spec = ChannelSpec(family, n=n, r=r, q=q)
    return bounds.assemble_report(spec, r, lp_cap=lp_cap, enum_cap=enum_cap,
                                  include_gspb="GSPB" in columns)


def _cell(report, column: str, exact: bool) -> str:
    if column == "REF":
        ref = refdata.primary_reference(report.spec.family, report.spec.n,
                                        report.r, report.spec.q)
        return "?" if ref is None else str(ref[1])
    entry = report.entries.get(_COLUMN_TO_ENTRY[column])
    if entry is None or entry.value is None:
        return "?"
    return _fmt_frac(entry.value) if exact else str(entry.floor)


def cmd_table(args) -> int:
    family = FAMILY_NAMES[args.family]
    if family in ("mag_asym", "mag_sym") and args.q is None:
        raise Refusal(f"--q is required for {args.family}")
    valid = VALID_COLUMNS[family]
    args.columns_list = ([c.strip().upper() for c in args.columns.split(",")]
                         if args.columns else list(valid))
    for c in args.columns_list:
        if c not in valid:
            raise Refusal(f"column {c} is not valid for {args.family}")
    reports = _table_reports(args, family)

    header = ["n"] + args.columns_list
    lines = []
    if args.format == "json":
        payload = [r.to_json_dict() for r in reports]
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        lines.append(",".join(header))
        for rep in reports:
            lines.append(",".join(
                [str(rep.spec.n)] +
                [_cell(rep, c, args.exact) for c in args.columns_list]))
        text = "\n".join(lines) + "\n"
    else:
        rows = [[str(rep.spec.n)] + [_cell(rep, c, args.exact)
                                     for c in args.columns_list]
                for rep in reports]
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _family_lp(spec: ChannelSpec) -> exactlp.CoveringLP:
    fam = spec.family
    if fam == "z":
        return zchannel.z_quotient_lp(spec.n, spec.r)
    if fam == "mag_asym":
        return magnitude.asym_quotient(spec.n, spec.q).to_covering_lp()
    if fam == "mag_sym":
        return magnitude.sym_quotient(spec.n, spec.q).to_covering_lp()
    if fam == "deletion":
        return seqchannels.deletion_full_lp(spec.n)
    if fam == "grain":
        return seqchannels.grain_full_lp(spec.n)
    return projective.projective_lp(spec.n)


def _default_weights(spec: ChannelSpec):
    fam = spec.family
    if fam == "z":
        return zchannel.z_weights_recursive(spec.n, spec.r).w, "closed-form weights"
    if fam == "mag_asym":
        return (magnitude.asym_improved_transversal(spec.n, spec.q).weights,
                "improved class transversal")
    if fam == "mag_sym":
        return (magnitude.sym_transversal(spec.n, spec.q).weights,
                "class transversal")
    if fam == "deletion":
        return (seqchannels.theorem_weight_vector(spec.n - 1),
                "run-profile transversal")
    if fam == "grain":
        return (seqchannels.theorem_weight_vector(spec.n),
                "run-profile transversal")
    return projective.greedy_weights(spec.n).w, "greedy weights"


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    lp = _family_lp(spec)
    if args.weights_file:
        with open(args.weights_file) as fh:
            tokens = fh.read().split()
        try:
            weights = [Fraction(t) for t in tokens]
        except ValueError as exc:
            raise Refusal(f"malformed weights file: {exc}") from exc
        label = args.weights_file
    else:
        weights, label = _default_weights(spec)
    report = exactlp.verify_transversal(lp, weights)
    status = "feasible" if report.feasible else "infeasible"
    print(f"{args.family} n={args.n} r={args.r}: {label} {status} "
          f"over {lp.num_rows} constraints")
    if report.feasible:
        value = report.bound
        floor = value.numerator // value.denominator
        line = f"  bound {_fmt_frac(value)} (~{float(value):.4f}, floor {floor})"
        tight = sum(1 for s in report.slacks if s == 0)
        line += f"; tight rows {tight}, min slack {_fmt_frac(report.min_slack)}"
        print(line)
        if not args.weights_file:
            cert = _certificate_line(spec)
            if cert:
                print(f"  {cert}")
    else:
        print(f"  violated rows {report.num_violated} "
              f"(first: {report.violated_rows[:8]}), min slack "
              f"{_fmt_frac(report.min_slack)}")
    return EXIT_OK if report.feasible or args.weights_file else EXIT_REFUSED


def _certificate_line(spec: ChannelSpec) -> str:
    if spec.family == "z":
        res = zchannel.z_gspb(spec.n, spec.r)
        tag = "certified optimal" if res.certified else "not certified"
        return f"{tag}, value {_fmt_frac(res.value)} " \
               f"(floor {res.value.numerator // res.value.denominator})"
    if spec.family == "projective":
        cert = projective.projective_certificate(spec.n)
        return f"certificate: {cert.status}"
    return ""


# ---------------------------------------------------------------------------
# oracle + fixtures
# ---------------------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise Refusal(f"unknown fixture {args.fixture!r}; "
                          f"known: {', '.join(sorted(FIXTURES))}")
        facts = {f.name: f for f in oracle.counterexample_suite()}[args.fixture]
        print(f"{facts.name}: {facts.summary}")
        print(f"  covering optimum {_fmt_frac(facts.tau_star)}; "
              f"ASPV {_fmt_frac(facts.aspv)}; max code {facts.max_code}")
        return EXIT_OK
    if not args.family or args.n is None:
        raise Refusal("oracle needs --fixture or --family with --n")
    spec = _spec_from_args(args)
    res = oracle.oracle_result(spec, args.r, cap=args.enum_cap)
    floor = res.tau_star_full.numerator // res.tau_star_full.denominator
    print(f"{args.family} n={args.n} r={args.r}: "
          f"tau* = {_fmt_frac(res.tau_star_full)} (~{float(res.tau_star_full):.4f}), "
          f"nu = {res.nu_integral}, nu <= {floor}")
    print(f"  witness centers: {res.witness}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for facts in oracle.counterexample_suite():
        print(f"{facts.name}: {facts.summary}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, family_required: bool = True,
                n_required: bool = True) -> None:
    p.add_argument("--family", choices=sorted(FAMILY_NAMES),
                   required=family_required)
    if n_required is not None:
        p.add_argument("--n", type=int, required=n_required)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--lp-cap", type=int, default=seqchannels.DEFAULT_LP_CAP,
                   help="largest n for which the full deletion/grain LP runs")
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--seed", type=int, default=None,
                   help="reserved; nothing is randomized")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gspb",
        description="Exact covering-LP upper bounds for non-regular error channels",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one bound for one instance")
    _add_common(p)
    p.add_argument("--bound", required=True,
                   choices=["mb", "aspv", "closed", "gspb"])
    p.add_argument("--exact", action="store_true")
    p.add_argument("--format", choices=["pretty", "json"], default="pretty")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="sweep n and emit a bounds table")
    _add_common(p, n_required=None)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--columns", default=None,
                   help="comma-separated subset of MB,ASPV,CLOSED,GSPB,REF")
    p.add_argument("--format", choices=["pretty", "csv", "json"],
                   default="pretty")
    p.add_argument("--out", default=None)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a transversal and certificates")
    _add_common(p)
    p.add_argument("--weights-file", default=None,
                   help="whitespace-separated rationals p/q, one per variable")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ground truth at small n")
    _add_common(p, family_required=False, n_required=False)
    p.add_argument("--fixture", default=None,
                   help="example2 | example3 | example4")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fixtures", help="list built-in counterexample fixtures")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (EnumerationCapExceeded, OracleCapExceeded, _CapError) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (Refusal, NotMonotoneError, QuotientUnavailable) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except GspbError as exc:
        if "cap" in str(exc):
            print(f"resource cap: {exc}", file=sys.stderr)
            return EXIT_CAP
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
