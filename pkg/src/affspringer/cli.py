"""Command line: info, solve, verify, census, components.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import laurent
from .cells import cell_census, component_orbits, acts_freely, labels_in_box
from .chevalley import algebra
from .domain import esequence_to_json, leading_term, solve_direct, verify_omega
from .rootsys import (
    DEFAULT_CAP,
    CartanElt,
    CartanType,
    GroupTooLarge,
    NotRegular,
    build,
    weyl_enumerate,
    weyl_order_formula,
)
from .verify import VerifyConfig, corrupt_table, run


class InputError(Exception):
    pass


def _type(text: str) -> str:
    try:
        return str(CartanType.parse(text))
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj, indent=2))


def cmd_info(args) -> int:
    ct = _type(args.type)
    rs = build(ct)
    out = {"type": ct, "rank": rs.rank, "nu": rs.nu, "max_height": rs.max_height}
    try:
        out["weyl_order"] = len(weyl_enumerate(rs, args.cap))
    except GroupTooLarge:
        pass
    out["weyl_order_formula"] = weyl_order_formula(rs)
    _emit(out, args.format, "\n".join(f"{k}: {v}" for k, v in out.items()))
    return 0


def solve_payload(payload: dict, type_arg: str | None = None) -> dict:
    """The body of ``solve``: input and output are the documented JSON objects."""
    if not isinstance(payload, dict):
        raise InputError("input must be a JSON object")
    ct = payload.get("type", type_arg)
    if ct is None:
        raise InputError("no Cartan type given")
    ct = _type(ct)
    if type_arg is not None and _type(type_arg) != ct:
        raise InputError(f"type mismatch: argument {type_arg}, input {payload['type']}")
    alg = algebra(ct)
    try:
        values = payload["h"]
        if any(isinstance(v, float) for v in values):
            raise InputError("h entries must be exact rationals (integers or 'p/q' strings)")
        h = CartanElt(tuple(Fraction(v) for v in values))
        E = alg.from_json(payload.get("E", {}))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad input: {e}") from None
    if len(h.simple_values) != alg.rank:
        raise InputError(f"h needs {alg.rank} entries")
    try:
        seq = solve_direct(alg, h, E)
    except NotRegular as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(str(e)) from None
    x = seq.to_laurent()
    return {
        "E_seq": esequence_to_json(alg, seq)["E_seq"],
        "phi_inverse": laurent.to_json(alg, x),
        "leading_term": alg.to_json(leading_term(alg, h, E)),
        "omega_check": verify_omega(alg, h, x),
    }


def cmd_solve(args) -> int:
    src = open(args.infile) if args.infile not in (None, "-") else sys.stdin
    try:
        payload = json.load(src)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from None
    finally:
        if src is not sys.stdin:
            src.close()
    out = solve_payload(payload, args.type)
    _emit(out, "json")
    return 0


def cmd_verify(args) -> int:
    try:
        cfg = VerifyConfig(_type(args.type), args.trials, args.seed, args.h_range, args.coeff_den_bound)
    except ValueError as e:
        raise InputError(str(e)) from None
    report = run(cfg, corrupt_table if args.corrupt_table else None)
    text = "\n".join(
        [f"{report['type']}: {'ok' if report['ok'] else 'FAILED'}"]
        + [f"  {k}: {v}" for k, v in report["checks"].items()]
        + ([f"  failure: {json.dumps(report['failure'])}"] if not report["ok"] else [])
    )
    _emit(report, args.format, text)
    return 0 if report["ok"] else 1


def cmd_census(args) -> int:
    rs = build(_type(args.type))
    try:
        rows = cell_census(rs, args.cap)
    except GroupTooLarge as e:
        raise InputError(str(e)) from None
    out = [{"w": [i + 1 for i in r.w.word], "length": r.length, "fibre_dim": r.fibre_dim} for r in rows]
    lines = [f"{'w':<24}{'length':>8}{'fibre_dim':>11}"]
    lines += [f"{r.w.word_str():<24}{r.length:>8}{r.fibre_dim:>11}" for r in rows]
    lines.append(f"total cells: {len(rows)}, nu = {rs.nu}")
    _emit(out, args.format, "\n".join(lines))
    return 0


def cmd_components(args) -> int:
    rs = build(_type(args.type))
    if args.box < 0:
        raise InputError("--box must be nonnegative")
    try:
        elems = weyl_enumerate(rs, args.cap)
    except GroupTooLarge as e:
        raise InputError(str(e)) from None
    labels = labels_in_box(elems, rs.rank, args.box)
    shifts = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    out = {
        "type": str(rs.cartan_type),
        "box": args.box,
        "labels": len(labels),
        "orbits": component_orbits(labels),
        "weyl_order": len(elems),
        "free": acts_freely(labels, shifts),
    }
    _emit(out, args.format, "\n".join(f"{k}: {v}" for k, v in out.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="json")

    p = argparse.ArgumentParser(prog="affspringer", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common], help="root system summary")
    s.add_argument("type")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("solve", parents=[common], help="solve the recursion for (h, E)")
    s.add_argument("type", nargs="?")
    s.add_argument("--in", dest="infile", help="input JSON file (default stdin)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="seeded randomized invariant suite")
    s.add_argument("type")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--h-range", type=int, default=10)
    s.add_argument("--coeff-den-bound", type=int, default=5)
    s.add_argument("--corrupt-table", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", parents=[common], help="one row per Bruhat cell")
    s.add_argument("type")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("components", parents=[common], help="component labels over a box")
    s.add_argument("type")
    s.add_argument("--box", type=int, required=True)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_components)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (InputError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
