"""Command-line interface.

Subcommands: chartable, lambda, preceq, preceq-search, gl2, satake, reproduce,
selftest.  Exit codes: 0 success, 1 mismatch or computation error, 2 resource
refusal, 64 usage error.  Outputs are deterministic for a fixed configuration
and seed; the seed is recorded in every JSON artifact.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .chartab import CharacterTable, character_table_generic, \
    character_table_gl2_closed_form
from .claims import ClaimContext, claim_ids, run_claim
from .exact import CycNum, FqField, Fq
from .gl2ring import ExpansionLimitError, parse_expr, sym6_isobaric_types, verify_identity
from .groups import ResourceLimitError, parse_group_descriptor
from .lambdaops import adams, exterior_power, symmetric_power
from .preceq import preceq_check, preceq_search, resolve_expression
from .satake import apply_sym, check_containment, load_satake

DEFAULT_SEED = 20240601


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 64
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _emit(obj, out_path, seed):
    obj = dict(obj)
    obj.setdefault("seed", seed)
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_for(args) -> CharacterTable:
    group = parse_group_descriptor(args.group, max_order=args.max_group_order)
    if group.descriptor.startswith("gl2:"):
        return character_table_gl2_closed_form(group=group)
    return character_table_generic(group, max_classes=args.max_classes)


def _add_common(p: _Parser):
    p.add_argument("--out", help="write the JSON artifact here (default stdout)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-group-order", type=int, default=10**6)
    p.add_argument("--max-classes", type=int, default=64)
    p.add_argument("--csv", help="also write a delimited report here")
    p.add_argument("--plot", help="also render a figure here (png)")


def build_parser() -> _Parser:
    parser = _Parser(prog="charprec",
                     description="exact character tables, lambda-ring calculus, "
                                 "eigenvalue containment, and Satake tuple checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chartable", help="compute an irreducible character table")
    p.add_argument("--group", required=True)
    p.add_argument("--method", choices=["generic", "closed-form"], default="generic")
    _add_common(p)

    p = sub.add_parser("lambda", help="apply a lambda-ring operation to a character")
    p.add_argument("--group", required=True)
    p.add_argument("--char", required=True, help="row label, e.g. irr:2 or cusp:1")
    p.add_argument("--op", required=True, help="sym:K | ext:K | adams:K")
    _add_common(p)

    p = sub.add_parser("preceq", help="decide eigenvalue containment of two characters")
    p.add_argument("--group", required=True)
    p.add_argument("--rep1", required=True, help="label or sym:K(...)/ext:K(...)/tensor(a,b)")
    p.add_argument("--rep2", required=True)
    _add_common(p)

    p = sub.add_parser("preceq-search",
                       help="search irreducible pairs related by containment")
    p.add_argument("--group", required=True)
    p.add_argument("--gap", required=True, help="nonnegative integer or 'any'")
    _add_common(p)

    p = sub.add_parser("gl2", help="formal GL2 character-ring operations")
    gsub = p.add_subparsers(dest="gl2_command", required=True, parser_class=_Parser)
    pv = gsub.add_parser("verify", help="check an identity of ring expressions")
    pv.add_argument("--lhs", required=True)
    pv.add_argument("--rhs", required=True)
    _add_common(pv)
    ps = gsub.add_parser("sym6-type", help="admissible isobaric types of the sixth power")
    ps.add_argument("--case", required=True,
                    choices=["tetrahedral", "octahedral", "icosahedral"])
    _add_common(ps)

    p = sub.add_parser("satake", help="numeric Hecke/Satake tuple checks")
    ssub = p.add_subparsers(dest="satake_command", required=True, parser_class=_Parser)
    pc = ssub.add_parser("check", help="containment of small tuples in big tuples")
    pc.add_argument("--small", required=True)
    pc.add_argument("--big", required=True)
    pc.add_argument("--sym-small", type=int, default=None)
    pc.add_argument("--sym-big", type=int, default=None)
    pc.add_argument("--tol", type=float, default=1e-9)
    pc.add_argument("--min-overlap", type=int, default=10)
    _add_common(pc)

    p = sub.add_parser("reproduce", help="run a pinned verification claim")
    p.add_argument("claim", nargs="?", help="claim id (see --list)")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--list", action="store_true", help="list claim ids")
    _add_common(p)

    p = sub.add_parser("selftest", help="quick randomized property suite")
    _add_common(p)

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def cmd_chartable(args) -> int:
    group = parse_group_descriptor(args.group, max_order=args.max_group_order)
    if args.method == "closed-form":
        if not group.descriptor.startswith("gl2:"):
            raise ValueError("closed-form tables exist only for gl2:Q groups")
        table = character_table_gl2_closed_form(group=group)
    else:
        table = character_table_generic(group, max_classes=args.max_classes)
    _emit(table.to_json(), args.out, args.seed)
    if args.csv:
        from . import report
        report.write_table_csv(table, args.csv)
    if args.plot:
        from . import report
        report.plot_table(table, args.plot)
    print(f"{group.descriptor}: {len(table)} irreducibles, "
          f"dims {table.dims}", file=sys.stderr)
    return 0


def cmd_lambda(args) -> int:
    table = _table_for(args)
    row = table.row_by_label(args.char)
    op, _, karg = args.op.partition(":")
    k = int(karg)
    fn = {"sym": symmetric_power, "ext": exterior_power, "adams": adams}.get(op)
    if fn is None:
        raise ValueError(f"unknown operation {args.op!r}")
    out = fn(row, k)
    _emit({"group": table.group.descriptor, "char": args.char, "op": args.op,
           "dim": str(out.dim()), "values": out.to_json()}, args.out, args.seed)
    return 0


def cmd_preceq(args) -> int:
    table = _table_for(args)
    chi1 = resolve_expression(args.rep1, table)
    chi2 = resolve_expression(args.rep2, table)
    rep = preceq_check(chi1, chi2, table=table)
    result = rep.to_json()
    result.update({"group": table.group.descriptor,
                   "rep1": args.rep1, "rep2": args.rep2})
    _emit(result, args.out, args.seed)
    print(f"{args.rep1} {'precedes' if rep.holds else 'does not precede'} {args.rep2}",
          file=sys.stderr)
    return 0


def cmd_preceq_search(args) -> int:
    gap = args.gap if args.gap == "any" else int(args.gap)
    table = _table_for(args)
    pairs = preceq_search(table.group, table, gap)
    dims = table.dims
    _emit({"group": table.group.descriptor, "gap": args.gap,
           "pairs": [{"small": i, "small_label": str(table.labels[i]),
                      "big": j, "big_label": str(table.labels[j]),
                      "dims": [dims[i], dims[j]]} for i, j in pairs]},
          args.out, args.seed)
    if args.csv:
        from . import report
        report.write_search_csv(table, pairs, args.csv)
    if args.plot:
        from . import report
        report.plot_search(table, pairs, args.plot)
    print(f"{len(pairs)} pair(s) found", file=sys.stderr)
    return 0


def cmd_gl2(args) -> int:
    if args.gl2_command == "verify":
        ok, diff = verify_identity(args.lhs, args.rhs)
        _emit({"lhs": args.lhs, "rhs": args.rhs, "equal": ok,
               "difference": repr(diff)}, args.out, args.seed)
        print("identity holds" if ok else f"identity FAILS, difference {diff!r}",
              file=sys.stderr)
        return 0 if ok else 1
    result = sym6_isobaric_types(args.case)
    _emit({"case": args.case,
           "types": [list(t) for t in result["types"]],
           "certificate": result["certificate"]}, args.out, args.seed)
    return 0


def cmd_satake(args) -> int:
    small = load_satake(args.small)
    big = load_satake(args.big)
    if args.sym_small is not None:
        small = apply_sym(small, args.sym_small)
    if args.sym_big is not None:
        big = apply_sym(big, args.sym_big)
    result = check_containment(small, big, tol=args.tol,
                               min_overlap=args.min_overlap, threads=args.threads)
    _emit(result.to_json(), args.out, args.seed)
    if args.csv:
        from . import report
        report.write_satake_csv(result, args.csv)
    if args.plot:
        from . import report
        report.plot_satake(result, args.tol, args.plot)
    print(f"verdict={result.verdict} over {result.primes_checked} primes",
          file=sys.stderr)
    return 0 if result.verdict else 1


def cmd_reproduce(args) -> int:
    if args.list:
        _emit({"claims": claim_ids()}, args.out, args.seed)
        return 0
    ctx = ClaimContext(seed=args.seed, max_order=args.max_group_order,
                       max_classes=args.max_classes)
    ids = claim_ids() if args.all else [args.claim]
    if not args.all and args.claim is None:
        raise UsageError("a claim id (or --all / --list) is required")
    if not args.all and args.claim not in claim_ids():
        raise UsageError(f"unknown claim id {args.claim!r}")
    reports = []
    ok = True
    for cid in ids:
        rep = run_claim(cid, ctx)
        elapsed = rep.pop("elapsed_seconds")
        print(f"{cid}: {'PASS' if rep['ok'] else 'FAIL'} ({elapsed}s)", file=sys.stderr)
        reports.append(rep)
        ok = ok and rep["ok"]
    payload = reports[0] if len(reports) == 1 else {"claims": reports, "ok": ok}
    _emit(payload, args.out, args.seed)
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    checks = {}

    # cyclotomic field axioms on random triples
    def rand_cyc():
        n = rng.choice([1, 2, 3, 4, 5, 6, 8, 12, 24])
        return CycNum(n, [rng.randint(-4, 4) for _ in range(len(CycNum.zero(n).nums))],
                      rng.randint(1, 3))

    ok = True
    for _ in range(1000):
        x, y, z = rand_cyc(), rand_cyc(), rand_cyc()
        ok &= (x + y) + z == x + (y + z)
        ok &= x * (y + z) == x * y + x * z
        ok &= (x * y) * z == x * (y * z)
    checks["cyclotomic_axioms"] = ok

    F9 = FqField(3, 2)
    ok = True
    for _ in range(1000):
        a, b, c = (Fq(F9, F9.decode(rng.randrange(9))) for _ in range(3))
        ok &= (a + b) + c == a + (b + c)
        ok &= a * (b + c) == a * b + a * c
    checks["finite_field_axioms"] = ok

    from .groups import make_sym
    G = make_sym(4)
    ok = True
    for _ in range(200):
        g = G.elements[rng.randrange(G.order)]
        k = rng.randint(-6, 6)
        ok &= G.class_of_element(G.element_pow(g, k)) == \
            G.power_map(G.class_of_element(g), k)
    checks["power_map_consistency"] = ok

    ok, _ = verify_identity("pi*Sym[2](pi)", "Sym[3](pi) + w*pi")
    checks["ring_identity"] = ok

    from .satake import injection_exists, injection_exists_bruteforce
    import cmath
    ok = True
    for _ in range(200):
        small = [cmath.exp(2j * cmath.pi * rng.random()) for _ in range(rng.randint(1, 4))]
        big = [cmath.exp(2j * cmath.pi * rng.random()) for _ in range(rng.randint(4, 6))]
        t = 10.0 ** rng.uniform(-6, -1)
        ok &= injection_exists(small, big, t) == injection_exists_bruteforce(small, big, t)
    checks["matching_oracle"] = ok

    passed = all(checks.values())
    _emit({"ok": passed, "checks": checks}, args.out, args.seed)
    return 0 if passed else 1


class UsageError(Exception):
    pass


_DISPATCH = {
    "chartable": cmd_chartable,
    "lambda": cmd_lambda,
    "preceq": cmd_preceq,
    "preceq-search": cmd_preceq_search,
    "gl2": cmd_gl2,
    "satake": cmd_satake,
    "reproduce": cmd_reproduce,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"charprec: error: {exc}", file=sys.stderr)
        return 64
    except (ResourceLimitError, ExpansionLimitError) as exc:
        print(f"charprec: resource refusal: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, AssertionError, ZeroDivisionError) as exc:
        print(f"charprec: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
