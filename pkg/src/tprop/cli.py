"""Command-line interface: ``tprop <command> ...``.

Exit codes: 0 the checked property holds, 1 it was checked and fails,
2 usage or input error.  Reports are deterministic for fixed inputs and seed.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import aleph, bialgebras, free, strata
from .axioms import check_axioms
from .bialgebras import Bialgebra
from .endv import Column, Row, iterated_coproduct, iterated_product
from .tensor import TensorMap, compose, format_scalar

log = logging.getLogger("tprop")


class InputError(Exception):
    """Malformed command-line input (exit code 2)."""


# --- bialgebra files ----------------------------------------------------------------


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{where}: expected an integer or a \"p/q\" string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: cannot parse {x!r} as a rational ({exc})") from None


def _cube(data, d: int, name: str) -> list:
    if not (isinstance(data, list) and len(data) == d and all(
            isinstance(r, list) and len(r) == d and all(isinstance(c, list) and len(c) == d for c in r) for r in data)):
        raise InputError(f"{name}: expected a {d}x{d}x{d} nested array")
    return [[[_rational(data[i][j][k], f"{name}[{i}][{j}][{k}]") for k in range(d)] for j in range(d)]
            for i in range(d)]


def bialgebra_from_dict(obj) -> Bialgebra:
    """Parse the JSON bialgebra format: ``dim``, ``basis``, ``product`` c[i][j][k], ``coproduct`` g[i][j][k]."""
    if not isinstance(obj, dict):
        raise InputError("top level must be a JSON object")
    missing = [k for k in ("dim", "product", "coproduct") if k not in obj]
    if missing:
        raise InputError(f"missing field(s): {', '.join(missing)}")
    d = obj["dim"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InputError(f"dim must be a positive integer, got {d!r}")
    basis = obj.get("basis", [f"e{i}" for i in range(d)])
    if not (isinstance(basis, list) and len(basis) == d and all(isinstance(b, str) for b in basis)):
        raise InputError(f"basis must be a list of {d} strings")
    c = _cube(obj["product"], d, "product")
    g = _cube(obj["coproduct"], d, "coproduct")
    # tensor layout is (outputs..., inputs...)
    star = TensorMap.from_function(2, 1, d, lambda ij: {(k,): c[ij[0]][ij[1]][k] for k in range(d)})
    delta = TensorMap.from_function(1, 2, d, lambda i: {(j, k): g[i[0]][j][k] for j in range(d) for k in range(d)})
    return Bialgebra(star, delta, tuple(basis))


def bialgebra_to_dict(bi: Bialgebra) -> dict:
    d = bi.d
    return {
        "dim": d,
        "basis": list(bi.basis),
        "product": [[[format_scalar(bi.star.coeffs[k, i, j]) for k in range(d)] for j in range(d)] for i in range(d)],
        "coproduct": [[[format_scalar(bi.delta.coeffs[j, k, i]) for k in range(d)] for j in range(d)]
                      for i in range(d)],
    }


def load_bialgebra(path: str) -> Bialgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return bialgebra_from_dict(obj)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


# --- commands -----------------------------------------------------------------------------


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_check(args) -> int:
    bi = load_bialgebra(args.file)
    assoc = bialgebras.associator(bi.star)
    coassoc = bialgebras.coassociator(bi.delta)
    compat = bialgebras.compatibility_defect(bi.star, bi.delta)
    mc = aleph.mc_defect(bi.star, bi.delta)
    ok = assoc.is_zero() and coassoc.is_zero() and compat.is_zero()
    log.info("check %s: bialgebra=%s", args.file, ok)
    _emit({
        "bialgebra": ok,
        "associator": {"zero": assoc.is_zero(), "table": assoc.to_nested()},
        "coassociator": {"zero": coassoc.is_zero(), "table": coassoc.to_nested()},
        "compatibility_defect": {"zero": compat.is_zero(), "table": compat.to_nested()},
        "mc_defect": {"zero": mc.is_zero(), "components": mc.describe()},
    })
    return 0 if ok else 1


def cmd_mc(args) -> int:
    bi = load_bialgebra(args.file)
    mc = aleph.mc_defect(bi.star, bi.delta, normalized=not args.unnormalized)
    _emit({"normalized": not args.unnormalized, "zero": mc.is_zero(), "components": mc.describe()})
    return 0 if mc.is_zero() else 1


_BRACKET_OPERANDS = ("psi", "theta", "beta")


def _operand(name: str, bi: Bialgebra) -> aleph.AlephElement:
    if name == "psi":
        return aleph.psi_bar(bi.star)
    if name == "theta":
        return aleph.theta_bar(bi.delta)
    return aleph.beta(bi.star, bi.delta)


def cmd_bracket(args) -> int:
    bi = load_bialgebra(args.file)
    x, y = _operand(args.x, bi), _operand(args.y, bi)
    z = aleph.bracket(x, y)
    _emit({"x": args.x, "y": args.y, "zero": z.is_zero(), "bracket": z.describe()})
    return 0


def _compact(xs) -> str:
    return "n/a" if xs is None else "[" + ",".join(map(str, xs)) + "]"


def cmd_homology(args) -> int:
    m, n = args.m, args.n
    if m < 1 or n < 1 or m + n < 3:
        raise InputError(f"K(m,n) needs m, n >= 1 and m + n >= 3, got ({m},{n})")
    if m + n > args.bound:
        raise InputError(f"m + n = {m + n} exceeds --bound {args.bound}")
    try:
        cx = strata.assemble_and_verify(m, n)
        d2 = True
    except strata.BoundarySquareError as exc:
        log.error("%s", exc)
        cx, d2 = strata.assemble(m, n), False
    f, h = cx.f_vector(), cx.homology_ranks() if d2 else None
    if args.dot:
        sys.stdout.write(cx.to_dot())
    elif args.json:
        _emit({
            "m": m, "n": n, "f_vector": f, "d_squared_zero": d2, "homology": h,
            "euler_characteristic": cx.euler_characteristic(),
            "strata": {str(d): [strata.label(w) for w in ws] for d, ws in cx.strata.items()},
            "differential": {str(d): cx.triplets(d) for d in sorted(cx.differential)},
        })
    else:
        lines = [f"K({m},{n}): f={_compact(f)}, H={_compact(h)}", f"d^2=0: {'yes' if d2 else 'NO'}",
                 f"euler characteristic: {cx.euler_characteristic()}"]
        if args.matrices:
            for d in sorted(cx.differential):
                lines.append(f"d{d}: {len(cx.strata.get(d - 1, []))}x{len(cx.strata[d])}")
                lines.extend(f"  {r} {c} {v}" for r, c, v in cx.triplets(d))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if d2 else 1


def cmd_axioms(args) -> int:
    try:
        report = check_axioms(d=args.dim, arity_bound=args.bound, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise InputError(f"axioms: {exc}") from None
    _emit({"dim": args.dim, "bound": args.bound, "trials": args.trials, "seed": args.seed,
           "passed": report.passed, "axioms": report.to_dict()})
    return 0 if report.passed else 1


def cmd_signs(args) -> int:
    table = aleph.sign_table()
    if args.json:
        _emit(table)
    else:
        width = max(len(r["pair"]) for r in table)
        for r in table:
            sys.stdout.write(f"{r['pair']:<{width}}  degrees {r['degrees']:<12}  {r['rule']}\n")
    return 0


def bialgebra_assignment(bi: Bialgebra, symbols) -> dict:
    """Each generator goes to the iterated coproduct after the iterated product."""
    out = {}
    for s in symbols:
        if s.kind == "st_col":
            out[s] = iterated_product(bi.star, s.m)
        elif s.kind == "st_row":
            out[s] = iterated_coproduct(bi.delta, s.n)
        else:
            out[s] = compose(iterated_coproduct(bi.delta, s.n), iterated_product(bi.star, s.m))
    return out


def _symbols(e) -> set:
    if isinstance(e, free.Gen):
        return {e.symbol}
    return _symbols(e.left) | _symbols(e.right)


def _end_to_json(x):
    if isinstance(x, (Row, Column)):
        return {"type": type(x).__name__.lower(), "entries": [t.to_nested() for t in x.maps]}
    return {"type": "plain", "signature": list(x.signature), "table": x.to_nested()}


def cmd_word(args) -> int:
    try:
        expr = free.parse(args.expr)
        word = free.normal_form(expr)
    except free.FreeWordError as exc:
        raise InputError(f"word: {exc}") from None
    bi = load_bialgebra(args.file)
    value = free.evaluate(word, bialgebra_assignment(bi, _symbols(expr)))
    _emit({"expr": free.to_text(expr), "normal_form": free.word_text(word),
           "shape": type(word).__name__, "signature": list(word.signature), "value": _end_to_json(value)})
    return 0


# --- entry point -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tprop", description="Exact checks for 2/3-PROPs, bialgebras and K(m,n).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output where a text form exists")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="bialgebra axioms and Maurer-Cartan defect of a bialgebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("mc", parents=[common], help="Maurer-Cartan defect of beta = PsiBar(star) + ThetaBar(delta)")
    s.add_argument("file")
    s.add_argument("--unnormalized", action="store_true", help="report [beta,beta] instead of half of it")
    s.set_defaults(func=cmd_mc)

    s = sub.add_parser("bracket", parents=[common], help="bracket of two elements built from a bialgebra file")
    s.add_argument("file")
    s.add_argument("x", choices=_BRACKET_OPERANDS)
    s.add_argument("y", choices=_BRACKET_OPERANDS)
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("homology", parents=[common], help="cellular chain complex of K(m,n)")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--bound", type=int, default=8, help="largest allowed m + n")
    s.add_argument("--dot", action="store_true", help="emit the face poset as DOT")
    s.add_argument("--matrices", action="store_true", help="print boundary matrices as sparse triplets")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("axioms", parents=[common], help="randomized check of the End(V) axioms")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--bound", type=int, default=6)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("signs", parents=[common], help="sign conventions of the bracket")
    s.set_defaults(func=cmd_signs)

    s = sub.add_parser("word", parents=[common], help="normalize a free word and evaluate it on a bialgebra file")
    s.add_argument("expr")
    s.add_argument("file")
    s.set_defaults(func=cmd_word)
    return p


def main(argv=None) -> int:
    level = os.environ.get("TPROP_LOG", "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        level = "WARNING"
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dim", 1) < 1 or getattr(args, "trials", 1) < 0:
        parser.error("--dim must be positive and --trials non-negative")
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"tprop: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
