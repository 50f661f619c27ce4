"""``rowvac`` command line front end."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijection as bj
from . import export as ex
from . import roots as rs
from . import verify as vf
from .poset import orbit
from .weyl import WeylGroup, format_cycles

DEFAULT_MATRIX = {
    "panyushev": [f"A{k}" for k in range(1, 8)] + [f"B{k}" for k in range(2, 8)]
    + [f"C{k}" for k in range(2, 8)] + [f"D{k}" for k in range(4, 8)] + ["G2", "F4", "E6"],
    "rowmotion": [f"A{k}" for k in range(1, 8)] + [f"B{k}" for k in range(2, 8)]
    + [f"C{k}" for k in range(2, 8)] + [f"D{k}" for k in range(4, 8)] + ["G2", "F4", "E6"],
    "ast": [f"A{k}" for k in range(1, 6)] + ["D4", "D5"],
    "hat": ["D4", "D5", "D6"],
    "section6": ["D4", "D5", "D6", "D7"],
    "structure": ["A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4"],
}
LARGE_EXCEPTIONAL = ["E7", "E8"]
APPLY_OPS = ("row", "row_inv", "rvac", "row_inv_rvac", "toggle")


def _poset(args) -> rs.RootPoset:
    if not args.type:
        raise ValueError("--type is required")
    return rs.build(args.type, args.rank)


def _run_suite(suite: str, label: str, args) -> vf.VerificationReport:
    P = rs.build(label)
    if suite == "panyushev":
        return vf.verify_panyushev(P, jobs=args.jobs)
    if suite == "rowmotion":
        return vf.verify_rowmotion(P)
    if suite == "ast":
        return vf.verify_ast(P)
    if suite == "hat":
        return vf.verify_hat(P)
    if suite == "section6":
        if P.family != "D":
            raise ValueError("section6 runs on type D only")
        return vf.verify_type_d_cases(P.rank_r)
    return vf.verify_structure(P.base, P.type_label, seed=args.seed)


def _emit_table(rows, header, fmt, out) -> None:
    if fmt == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows]) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for r in rows:
            out.write("  ".join(str(x) for x in r) + "\n")


def cmd_verify(args, out, err) -> int:
    if args.type:
        labels = [rs.build(args.type, args.rank).type_label]
    else:
        labels = list(DEFAULT_MATRIX[args.suite])
        if args.large_exceptional and args.suite in ("panyushev", "rowmotion"):
            labels += LARGE_EXCEPTIONAL
    reports = [_run_suite(args.suite, lab, args) for lab in labels]
    if args.format == "json":
        out.write("[" + ", ".join(r.to_json() for r in reports) + "]\n")
    elif args.format == "csv":
        rows = [(r.suite_name, r.type_label, r.checked_count, len(r.failures), f"{r.elapsed:.3f}") for r in reports]
        _emit_table(rows, ("suite", "type", "checked", "failures", "elapsed"), "csv", out)
    else:
        for r in reports:
            out.write(r.summary() + "\n")
    bad = [r for r in reports if not r.passed]
    if bad:
        inp, want, got = bad[0].failures[0]
        err.write(f"{bad[0].type_label}: input {inp}; expected {want}; got {got}\n")
        return 1
    return 0


def cmd_narayana(args, out, err) -> int:
    P = _poset(args)
    nar = rs.narayana(P)
    if nar != nar[::-1]:
        raise ArithmeticError(f"Narayana vector {nar} is not symmetric")
    if sum(nar) != rs.catalan(P):
        raise ArithmeticError("antichain count disagrees with the Catalan product")
    rows = list(enumerate(nar))
    if args.format == "text":
        _emit_table(rows, ("k", "Nar"), "text", out)
        out.write(f"total  {sum(nar)}\n")
    else:
        _emit_table(rows, ("k", "Nar"), args.format, out)
    return 0


def cmd_catalan(args, out, err) -> int:
    P = _poset(args)
    value = rs.catalan(P)
    count = len(P.base.antichain_masks())
    row = (P.type_label, " ".join(map(str, rs.degrees(P))), P.coxeter_h, value, count)
    _emit_table([row], ("type", "degrees", "h", "catalan", "antichains"), args.format, out)
    return 0 if value == count else 1


def _step(P, op, m, element):
    B = P.base
    if op == "toggle":
        return B.toggle_mask(element, m)
    if op == "row_inv":
        return B.row_inv_mask(m)
    return B.apply_mask(op, m)


def cmd_apply(args, out, err) -> int:
    P = _poset(args)
    A = ex.parse_antichain(P, args.antichain)
    element = None
    if args.op == "toggle":
        if args.element is None:
            raise ValueError("--element is required for toggle")
        element = ex.parse_root(P, args.element)
    m = P.base.mask_of(A)
    traj = [A]
    for _ in range(args.count):
        m = _step(P, args.op, m, element)
        traj.append(tuple(e for e in range(P.size) if m >> e & 1))
    if args.format == "json":
        out.write(json.dumps([ex.antichain_to_json(P, X) for X in traj]) + "\n")
    else:
        for X in traj:
            out.write(ex.format_antichain(P, X) + "\n")
    return 0


def cmd_orbit(args, out, err) -> int:
    P = _poset(args)
    rep = orbit(P.base, ex.parse_antichain(P, args.antichain), args.op)
    avg = rep.average_cardinality
    if args.format == "json":
        out.write(json.dumps({"orbit": [ex.antichain_to_json(P, X) for X in rep.orbit], "size": len(rep),
                              "average": f"{avg.numerator}/{avg.denominator}"}) + "\n")
    else:
        for X in rep.orbit:
            out.write(ex.format_antichain(P, X) + "\n")
        out.write(f"size {len(rep)}, average cardinality {avg.numerator}/{avg.denominator}\n")
    return 0


def cmd_theta(args, out, err) -> int:
    P = _poset(args)
    A = ex.parse_antichain(P, args.antichain)
    if args.format == "dot":
        if P.family != "A":
            raise ValueError("matching diagrams are drawn for type A; use hat for type D")
        out.write(ex.diagram_dot(bj.phi_diagram_A(P, A), f"phi {P.type_label}"))
        return 0
    w = bj.theta_uniform(P, A)
    result = {"theta": format_cycles(w, fixed_points=True)}
    if P.family == "A":
        result["diagram"] = bj.phi_diagram_A(P, A).to_text().splitlines()
    if P.family == "D" and rs.delta_set(P, A) != A:
        part = bj.theta_D_partial(P, A)
        result["partial"] = {str(k): v for k, v in sorted(part.values.items())}
        result["x"], result["y"] = part.x, part.y
    if args.format == "json":
        out.write(json.dumps(result) + "\n")
    else:
        out.write(result["theta"] + "\n")
        for line in result.get("diagram", []):
            out.write(line + "\n")
        if "x" in result:
            out.write(f"x_A = {result['x']}, y_A = {result['y']}\n")
    return 0


def cmd_hat(args, out, err) -> int:
    P = _poset(args)
    h = bj.hat(P, ex.parse_antichain(P, args.antichain))
    PA = h.poset
    data = {
        "unfolded": ex.format_antichain(PA, h.unfolded),
        "q_intersection": ",".join(f"[{i},{j}]" for i, j in h.q_intersection),
        "hat": ex.format_antichain(PA, h.result),
    }
    if args.format == "dot":
        out.write(ex.diagram_dot(bj.xi_and_phi_D(P, h.source), f"phi {P.type_label}"))
    elif args.format == "json":
        out.write(json.dumps(data) + "\n")
    else:
        for k, v in data.items():
            out.write(f"{k}: {v}\n")
    return 0


def cmd_export(args, out, err) -> int:
    P = _poset(args)
    if args.what == "hasse":
        flags = [x for x in args.highlight if x in ("L", "S")]
        texts = [x for x in args.highlight if x not in ("L", "S")]
        A = ex.parse_antichain(P, args.antichain or (texts[0] if texts else ""))
        out.write(ex.hasse_dot(P, A, flags))
    elif args.what == "nc-lattice":
        out.write(ex.nc_dot(WeylGroup(P.family, P.rank_r).nc_lattice()))
    else:
        A = ex.parse_antichain(P, args.antichain)
        if P.family == "A":
            D = bj.phi_diagram_A(P, A)
        elif P.family == "D":
            D = bj.xi_and_phi_D(P, A)
        else:
            raise ValueError("matching diagrams exist for types A and D")
        out.write(ex.diagram_dot(D, f"phi {P.type_label}"))
    return 0


def cmd_counterexample(args, out, err) -> int:
    if args.type:
        labels = [rs.build(args.type, args.rank).type_label]
    else:
        labels = ["G2", "F4", "E6"] + (LARGE_EXCEPTIONAL if args.large_exceptional else [])
    rows = []
    for lab in labels:
        P = rs.build(lab)
        w = vf.counterexample(P)
        if w is None:
            rows.append((lab, "none", ""))
        else:
            rows.append((lab, ex.format_antichain(P, w[0]), ex.format_antichain(P, w[1])))
    _emit_table(rows, ("type", "antichain", "rvac"), args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="root system, e.g. D, D6 or F4")
    common.add_argument("--rank", type=int, help="rank when --type is a bare letter")
    common.add_argument("--format", choices=("text", "json", "csv", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the heavier suites")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--large-exceptional", action="store_true", help="also run E7 and E8")

    parser = argparse.ArgumentParser(prog="rowvac", description="Rowmotion and rowvacuation on root posets.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a theorem-checking suite")
    p.add_argument("suite", choices=vf.SUITES)
    p.set_defaults(func=cmd_verify)

    for name, func, hlp in (("narayana", cmd_narayana, "antichain counts by size"),
                            ("catalan", cmd_catalan, "product formula against enumeration"),
                            ("counterexample", cmd_counterexample, "first antichain with #A + #Rvac(A) != r")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.set_defaults(func=func)

    p = sub.add_parser("apply", parents=[common], help="trajectory of an antichain")
    p.add_argument("--op", choices=APPLY_OPS, default="row")
    p.add_argument("--element", help="root toggled by --op toggle")
    p.add_argument("--antichain", default="")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("orbit", parents=[common], help="full orbit and its average cardinality")
    p.add_argument("--op", choices=("row", "rvac", "row_inv_rvac"), default="row")
    p.add_argument("--antichain", default="")
    p.set_defaults(func=cmd_orbit)

    for name, func, text in (("theta", cmd_theta, "noncrossing partition of an antichain"),
                             ("hat", cmd_hat, "lift a type D antichain into type A")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--antichain", default="")
        p.set_defaults(func=func)

    p = sub.add_parser("export", parents=[common], help="DOT output")
    p.add_argument("what", choices=("hasse", "nc-lattice", "matching-diagram"))
    p.add_argument("--antichain", default=None)
    p.add_argument("--highlight", action="append", default=[], help="L, S, or an antichain")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out, err)
    except (ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def run(argv) -> tuple[int, str, str]:
    """Run the CLI in-process and capture its output."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
