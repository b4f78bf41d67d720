"""Command-line front end: ``lierep <command> ...`` or ``python -m lierep``.

Exit status is 0 on success, 1 for domain errors (message on stderr) and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from lierep import __version__
from lierep import enumeration, euler, monodromy, search as tsearch
from lierep._backend import BudgetExceeded
from lierep.reps import BUDGET_ENV, Irrep, dual, freudenthal_multiplicities
from lierep.rootsys import SimpleType, build, format_weight, parse_weight
from lierep.tensor import decompose


def render_table1(result: enumeration.EnumerationResult | None = None) -> str:
    """Aligned grid of highest weights, rows by dimension and columns by type."""
    if result is None:
        result = enumeration.irreps_up_to(30, "table1", exclude_defining=True)
    grid = result.grid()
    types = list(next(iter(grid.values())).keys()) if grid else []
    header = ["d"] + [str(t) for t in types]
    rows = []
    for d, cells in grid.items():
        row = [str(d)]
        for t in types:
            ws = cells[t]
            row.append(", ".join(format_weight(w) for w in ws) if ws else "-")
        rows.append(row)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: " | ".join(c.rjust(widths[0]) if i == 0 else c.ljust(widths[i]) for i, c in enumerate(r)).rstrip()
    lines = [fmt(header), "-+-".join("-" * w for w in widths)]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)


def render_entries(result: enumeration.EnumerationResult) -> str:
    if not result.entries:
        return "(none)"
    rows = []
    for e in result.entries:
        flags = []
        if e.is_defining:
            flags.append("defining")
        if e.simple_type is not None and e.is_self_dual:
            flags.append("self-dual")
        t = str(e.simple_type) if e.simple_type else "trivial"
        w = format_weight(e.weight) if e.simple_type else "0"
        rows.append((str(e.dimension), t, w, ",".join(flags)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    return "\n".join(
        f"{r[0].rjust(widths[0])}  {r[1].ljust(widths[1])}  {r[2].ljust(widths[2])}  {r[3]}".rstrip()
        for r in rows
    )


def _irrep(type_text: str, weight_text: str) -> Irrep:
    rs = build(type_text)
    return Irrep(rs, parse_weight(weight_text, rs.rank))


def cmd_dim(args):
    irrep = _irrep(args.type, args.weight)
    return {"dim": irrep.dimension}, str(irrep.dimension)


def cmd_char(args):
    irrep = _irrep(args.type, args.weight)
    char = freudenthal_multiplicities(irrep, args.budget)
    sizes = char.orbit_sizes()
    payload = {
        "dim": irrep.dimension,
        "weights": [
            {"weight": format_weight(mu), "mult": m, "orbit": sizes[mu]} for mu, m in char.items()
        ],
    }
    lines = [f"{irrep.label()}  dim {irrep.dimension}"]
    for mu, m in char.items():
        lines.append(f"  {format_weight(mu)}: mult {m}, orbit {sizes[mu]}")
    return payload, "\n".join(lines)


def cmd_tensor(args):
    v = _irrep(args.type, args.weight)
    if args.dual:
        if args.other is not None:
            raise ValueError("give either a second weight or --dual, not both")
        w = dual(v)
    elif args.other is None:
        w = v
    else:
        w = _irrep(args.type, args.other)
    d = decompose(v, w, args.budget)
    payload = {
        "left": {"weight": format_weight(v.highest_weight), "dim": v.dimension},
        "right": {"weight": format_weight(w.highest_weight), "dim": w.dimension},
        "summands": d.to_json(),
    }
    return payload, d.render()


def cmd_enumerate(args):
    if (args.dim is None) == (args.max is None):
        raise _Usage("enumerate needs exactly one of --dim or --max")
    if args.dim is not None:
        if args.preset or args.types or args.no_defining:
            raise _Usage("--preset, --types and --no-defining apply to --max only")
        res = enumeration.irreps_of_dim(args.dim)
    else:
        window = args.preset
        if args.types:
            if window:
                raise _Usage("give --preset or --types, not both")
            window = [SimpleType.parse(t) for t in args.types.split(",")]
        res = enumeration.irreps_up_to(args.max, window, exclude_defining=args.no_defining)
    if res.types is not None and not args.list:
        text = render_table1(res)
    else:
        text = render_entries(res)
    return res.to_dict(), text


def cmd_search(args):
    trace = tsearch.run_search(args.dimv, args.dimw, args.budget)
    return trace.to_dict(), tsearch.report(trace, verbose=args.trace)


def cmd_euler(args):
    if args.euler_cmd == "blowup":
        data = euler.DivisorData(args.g, args.deg, tuple(args.mult or ()))
        value = euler.blowup_chi(data)
    elif args.euler_cmd == "theta-cubic":
        value = euler.theta_chi_cubic()
    elif args.euler_cmd == "theta":
        value = euler.theta_chi(args.blowup, args.correction)
    elif args.euler_cmd == "cc":
        strata = []
        for k, spec in enumerate(args.stratum or ()):
            try:
                m, deg = (int(x) for x in spec.split(":"))
            except ValueError:
                raise _Usage(f"--stratum expects MULT:DEGREE, got {spec!r}") from None
            strata.append(euler.Stratum(f"Z{k + 1}", m, deg))
        value = euler.cc_chi(euler.CharacteristicCycle(tuple(strata)))
    elif args.euler_cmd == "point-mult":
        value = euler.solve_point_multiplicity(args.chi, args.main)
    elif args.euler_cmd == "gauss-degree":
        value = euler.gauss_degree_from_counts(args.pairs, args.fiber)
    elif args.euler_cmd == "coeff":
        num = [int(x) for x in args.num.split(",")]
        den = [int(x) for x in args.den.split(",")]
        value = euler.series_coeff(euler.RationalSeries(tuple(num), tuple(den)), args.k)
    else:
        raise _Usage("euler needs a subcommand")
    return {"value": value if isinstance(value, int) else str(value)}, str(value)


def cmd_monodromy(args):
    if args.weyl:
        t = SimpleType.parse(args.weyl)
        payload = {"type": str(t), "order": monodromy.weyl_group_order(t)}
        if args.bruteforce:
            payload["bruteforce"] = monodromy.reflection_group_order_bruteforce(t)
        text = f"|W({t})| = {payload['order']}"
        if args.bruteforce:
            text += f" (closure: {payload['bruteforce']})"
        return payload, text
    if args.case is None:
        raise _Usage("monodromy needs --case or --weyl")
    res = monodromy.theorem_groups(args.case, args.g, args.hyperelliptic)
    lines = [
        f"M = {res.monodromy.name()}, order {res.monodromy.order}",
        f"W = {res.weyl.name()}, order {res.weyl.order}",
        f"index [W : M] = {res.index}",
    ]
    if res.r is not None:
        lines.insert(0, f"r = {res.r}")
    return res.to_dict(), "\n".join(lines)


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lierep", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = p.add_subparsers(dest="command", required=True)

    def with_budget(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help=f"dominant-weight budget (default: ${BUDGET_ENV} or 100000)")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("dim", help="Weyl dimension of an irrep")
    sp.add_argument("type")
    sp.add_argument("weight")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("char", help="dominant weight multiplicities")
    sp.add_argument("type")
    sp.add_argument("weight")
    with_budget(sp)
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("tensor", help="decompose a tensor product")
    sp.add_argument("type")
    sp.add_argument("weight")
    sp.add_argument("other", nargs="?")
    sp.add_argument("--dual", action="store_true", help="tensor with the dual of the first factor")
    with_budget(sp)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("enumerate", help="list irreps by dimension")
    sp.add_argument("--dim", type=int)
    sp.add_argument("--max", type=int)
    sp.add_argument("--preset", choices=sorted(enumeration.PRESETS))
    sp.add_argument("--types", help="comma-separated simple types, e.g. A2,B3,G2")
    sp.add_argument("--no-defining", action="store_true")
    sp.add_argument("--list", action="store_true", help="one entry per line instead of a grid")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("search", help="semisimple candidates with V (x) V* containing a dim-W summand")
    sp.add_argument("--dimv", type=int, required=True)
    sp.add_argument("--dimw", type=int, required=True)
    sp.add_argument("--trace", action="store_true", help="show every candidate examined")
    with_budget(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("euler", help="Euler characteristic arithmetic")
    esub = sp.add_subparsers(dest="euler_cmd", required=True)
    e = esub.add_parser("blowup")
    e.add_argument("--g", type=int, required=True)
    e.add_argument("--deg", type=int, required=True)
    e.add_argument("--mult", type=int, action="append")
    esub.add_parser("theta-cubic")
    e = esub.add_parser("theta")
    e.add_argument("--blowup", type=int, required=True)
    e.add_argument("--correction", type=int, default=euler.CUBIC_THREEFOLD_SKYSCRAPER)
    e = esub.add_parser("cc")
    e.add_argument("--stratum", action="append", help="MULT:GAUSS_DEGREE, repeatable")
    e = esub.add_parser("point-mult")
    e.add_argument("--chi", type=int, required=True)
    e.add_argument("--main", type=int, required=True)
    e = esub.add_parser("gauss-degree")
    e.add_argument("--pairs", type=int, required=True)
    e.add_argument("--fiber", type=int, required=True)
    e = esub.add_parser("coeff", help="coefficient of t^k in num/den")
    e.add_argument("--num", required=True, help="coefficients, constant first: 1,-2,1")
    e.add_argument("--den", default="1")
    e.add_argument("--k", type=int, required=True)
    for e in esub.choices.values():
        e.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("monodromy", help="monodromy and Weyl groups")
    sp.add_argument("--case", choices=monodromy.CASES)
    sp.add_argument("--g", type=int)
    sp.add_argument("--hyperelliptic", action="store_true")
    sp.add_argument("--weyl", metavar="TYPE", help="Weyl group order of a simple type")
    sp.add_argument("--bruteforce", action="store_true", help="also count by reflection closure")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_monodromy)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "json", "command")}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text = args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"lierep: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, BudgetExceeded) as exc:
        print(f"lierep: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": _inputs(args),
            "result": payload,
            "version": __version__,
        }
        print(json.dumps(envelope, indent=2, ensure_ascii=False))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
