"""Command-line interface: ``packetmult {field,group,extensions,analyze,cases}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import groups as G
from .characters import CentralCharacterQuery, character_table, irr_with_central_character
from .engine import (InconsistencyError, PreconditionError, analyze_parameter, sl2_case,
                     sl4_enumerate, sl_prime_case)
from .extensions import (enumerate_central_extensions, extension_label, second_cohomology,
                         sl2_finite_subgroup_check)
from .padic import (PAdicFieldData, coset_card, field_valuation, is_wild, mu_card,
                    square_divisor_bound)
from .scenarios import (ScenarioFile, parse_field, render_columns, render_reports,
                        render_triples, scenario_from_dict)


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_field(args) -> int:
    if args.field:
        field = PAdicFieldData.parse(args.field)
    else:
        if args.p is None:
            raise PreconditionError("give --p (and optionally --e, --f, --a) or --field")
        field = PAdicFieldData(args.p, args.e, args.f, args.a)
    n = args.n
    coset = coset_card(field, n)
    out = {
        "field": field.to_dict(), "n": n, "q": field.q,
        "valuation": field_valuation(field, n), "mu": mu_card(field, n),
        "coset": coset, "bound": square_divisor_bound(coset), "wild": is_wild(field, n),
    }
    text = "\n".join(f"{k:<10}{v}" for k, v in [
        ("field", str(field)), ("n", n), ("q", field.q), ("v_F(n)", out["valuation"]),
        ("|mu_n|", out["mu"]), ("coset", coset), ("A(G,F)", out["bound"])])
    if out["wild"]:
        text += "\nnote      wild case, formula not checked against a worked example"
    _emit(args, out, text)
    return 0


def _zeta_arg(value: str, size: int) -> int:
    v = value.strip().lower()
    if v in ("trivial", "1"):
        return 0
    if v == "sign":
        if size % 2:
            raise PreconditionError("sign character needs a central subgroup of even order")
        return size // 2
    return int(v)


def cmd_group(args) -> int:
    g = G.parse_group(args.spec)
    if args.central_char is None:
        table = character_table(g)
        _emit(args, table.to_dict(),
              f"{g.label or args.spec}: order {g.order}, {len(table)} classes\n"
              f"degrees {list(table.degrees)}\n{table.format()}")
        return 0
    if args.subgroup in (None, "center"):
        sub = g.center
    else:
        sub = [int(x) for x in args.subgroup.split(",")]
    k = _zeta_arg(args.central_char, len(set(sub)))
    degrees = irr_with_central_character(g, CentralCharacterQuery(tuple(sub), k))
    _emit(args, {"group": g.label, "subgroup": list(sub), "zeta": k, "degrees": degrees},
          f"{g.label or args.spec}: Irr with central character {k} on {list(sub)} -> {degrees}")
    return 0


def cmd_extensions(args) -> int:
    s = G.parse_group(args.spec)
    h2 = second_cohomology(s, args.n)
    exts = enumerate_central_extensions(s, args.n)
    rows = []
    for e in exts:
        rows.append({"label": extension_label(e), "order": e.total.order,
                     "abelian": e.total.is_abelian(), "sl2": sl2_finite_subgroup_check(e.total)})
    payload = {"quotient": s.label, "n": args.n, "h2_order": h2.order,
               "h2_invariants": list(h2.invariants), "extensions": rows}
    if args.full:
        payload["groups"] = [e.to_dict() for e in exts]
    lines = [f"H^2({s.label}, Z/{args.n}) = {h2} (order {h2.order})",
             f"{len(exts)} extension types:"]
    lines += [f"  {r['label']:<40} abelian={r['abelian']!s:<5} in SL(2,C)={r['sl2']}" for r in rows]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_analyze(args) -> int:
    sf = ScenarioFile.load(args.file)
    shared = args.audit_field if args.audit_field else sf.field
    reports, errors = [], []
    for rec in sf.records:
        try:
            scen = scenario_from_dict(rec, shared_field=shared)
            reports.append(analyze_parameter(scen))
        except (PreconditionError, InconsistencyError, G.GroupError) as exc:
            err = {"label": rec.get("label"), "error": type(exc).__name__, "message": str(exc)}
            if isinstance(exc, InconsistencyError):
                err["details"] = exc.details
            errors.append(err)
            if not args.keep_going:
                break
    if args.json:
        print(json.dumps({"reports": [r.to_dict() for r in reports], "errors": errors},
                         indent=2, sort_keys=True))
    else:
        if reports:
            print(render_reports(reports))
        for e in errors:
            print(f"error [{e['label']}] {e['error']}: {e['message']}", file=sys.stderr)
    return 1 if errors else 0


def cmd_cases(args) -> int:
    if args.which == "sl4":
        triples = sl4_enumerate(args.coset)
        _emit(args, {"coset": args.coset, "triples": [list(t) for t in triples]},
              f"inner form of SL(4), |F^x/(F^x)^4| = {args.coset}\n" + render_triples(triples))
        return 0
    if args.which == "sl2":
        field = parse_field(args.field) if args.field else PAdicFieldData.qp(args.p)
        rep = sl2_case(args.r, field)
        _emit(args, rep.to_dict(), render_reports([rep]))
        return 0
    # slprime: list both branches, marking the one excluded by the bound
    reps, notes = [], []
    for nonab in (False, True):
        try:
            reps.append(sl_prime_case(args.l, args.q, nonab))
        except InconsistencyError as exc:
            notes.append(f"non-abelian A_phi excluded: {exc}")
    if (args.q - 1) % args.l == 0:
        notes.append(f"l | q-1: multiplicity is 1 or {args.l}, "
                     f"{args.l} exactly when A_phi is non-abelian")
    else:
        notes.append("l does not divide q-1: multiplicity is 1")
    payload = {"l": args.l, "q": args.q, "reports": [r.to_dict() for r in reps], "notes": notes}
    _emit(args, payload, render_reports(reps) + "\n" + "\n".join(notes))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="packetmult", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="p-adic cardinalities for F^x/(F^x)^n")
    p.add_argument("--field", help='descriptor like "p=5,e=1,f=1,a=0"')
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("group", help="character table or Irr with a central character")
    p.add_argument("spec", help='group spec, e.g. "Q8", "heisenberg(3)", "C4xC2"')
    p.add_argument("--central-char", help="trivial, sign, or an exponent k")
    p.add_argument("--subgroup", help='"center" (default) or comma-separated element indices')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("extensions", help="H^2(S, Z/n) and central extension types")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full", action="store_true", help="include group tables in --json output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("analyze", help="packet reports for a scenario file")
    p.add_argument("file")
    p.add_argument("--audit-field", help="field descriptor applied to every scenario")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--table", action="store_true", help="aligned text table (default)")
    p.add_argument("--keep-going", action="store_true",
                   help="process every record even after a failure")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cases", help="the worked SL(2), SL(l) and SL(4) cases")
    p.add_argument("which", choices=["sl2", "slprime", "sl4"])
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--p", type=int, default=3, help="residue prime for sl2 (Q_p)")
    p.add_argument("--field", help="field descriptor for sl2")
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--q", type=int, default=7)
    p.add_argument("--coset", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cases)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, InconsistencyError, G.GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
