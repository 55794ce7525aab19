"""Command-line front end: ``forest-hopf <command> ...``.

Exit status is 0 on success, 1 when ``check`` finds a violated identity and
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .coefficients import Poly, Specialization, SymbolTable, UnknownLabelError
from .enumerate import decoration_count, forests_of_degree, shapes
from .forest import subforest_pairs
from .hopf import HopfAlgebra
from .laws import CHECKS, random_specializations, run_checks
from .linear import Element
from .operated import evaluate, renaming_target
from .text import JSON_SCHEMA_VERSION, ParseError, forest_to_json, parse_element, parse_forest, to_json

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
MAX_DEGREE_ENV = "FOREST_HOPF_MAX_DEGREE"
DEFAULT_MAX_DEGREE_CAP = 6


class UsageError(Exception):
    pass


def _labels(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(",") if s.strip())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--x", default="x", help="comma-separated X-labels (default: x)")
    common.add_argument(
        "--omega", default="a,b,c", help="comma-separated Omega-labels (default: a,b,c)"
    )
    common.add_argument("--weights", help="numeric weights, e.g. la_a=0,mu_x=1/2")
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")

    parser = argparse.ArgumentParser(
        prog="forest-hopf",
        description="Weighted Hopf algebra of (X, Omega)-decorated planar forests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="concatenation product A B")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of an element")
    p.add_argument("element")
    p.add_argument("--method", choices=("recursive", "cuts"), default="recursive")

    p = sub.add_parser("counit", parents=[common], help="counit of an element")
    p.add_argument("element")
    p.add_argument("--closed", action="store_true", help="use the closed vertex-product formula")

    p = sub.add_parser("antipode", parents=[common], help="antipode of an element")
    p.add_argument("element")

    p = sub.add_parser("tilde", parents=[common], help="shift every leaf by its weight")
    p.add_argument("element")

    p = sub.add_parser("subforests", parents=[common], help="subforest / quotient table")
    p.add_argument("forest")

    p = sub.add_parser("eval", parents=[common], help="evaluate into a relabelled forest algebra")
    p.add_argument("forest")
    p.add_argument("--rename", default="", help="X-label renaming, e.g. x=y,z=y")

    p = sub.add_parser("enumerate", parents=[common], help="count (and list) forests by degree")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print the forests as well")

    p = sub.add_parser("check", parents=[common], help="exhaustive law checks")
    p.add_argument("name", choices=("all",) + CHECKS)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed-specializations", type=int, default=0, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _degree_cap() -> int:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None:
        return DEFAULT_MAX_DEGREE_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None


def _check_degree(n: int) -> None:
    if n < 0:
        raise UsageError("--max-degree must be nonnegative")
    cap = _degree_cap()
    if n > cap:
        raise UsageError(f"--max-degree {n} exceeds the cap {cap} set by {MAX_DEGREE_ENV}")


class Session:
    def __init__(self, args: argparse.Namespace):
        try:
            self.symbols = SymbolTable(_labels(args.x), _labels(args.omega))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        try:
            self.weights = Specialization.parse(args.weights) if args.weights else None
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --weights: {exc}") from None
        if self.weights is not None:
            unknown = set(self.weights.assignment) - set(self.symbols.symbol_names())
            if unknown:
                raise UsageError(f"--weights names unknown symbols {sorted(unknown)}")
        self.format = args.format
        self.hopf = HopfAlgebra(self.symbols, specialization=self.weights)

    def element(self, text: str) -> Element:
        return parse_element(text, self.symbols)

    def render(self, command: str, value, out) -> None:
        if self.format == "json":
            payload = {"schema": JSON_SCHEMA_VERSION, "command": command, "result": to_json(value)}
            json.dump(payload, out, ensure_ascii=False)
            out.write("\n")
        elif self.format == "latex":
            out.write(value.latex() + "\n")
        else:
            out.write(str(value) + "\n")


def _cmd_subforests(session: Session, args, out) -> int:
    f = parse_forest(args.forest, session.symbols)
    rows = []
    for g, q in subforest_pairs(f):
        rows.append((g, q, session.hopf.leaf_tilde(q)))
    if session.format == "json":
        payload = {
            "schema": JSON_SCHEMA_VERSION,
            "command": "subforests",
            "result": [
                {"subforest": forest_to_json(g), "quotient": forest_to_json(q), "tilde": to_json(t)}
                for g, q, t in rows
            ],
        }
        json.dump(payload, out, ensure_ascii=False)
        out.write("\n")
    elif session.format == "latex":
        for g, q, t in rows:
            out.write(f"{g.latex()} & {q.latex()} & {t.latex()} \\\\\n")
    else:
        for g, q, t in rows:
            out.write(f"{g}\t{q}\t{t}\n")
    return EXIT_OK


def _parse_rename(text: str) -> dict[str, str]:
    out = {}
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        src, sep, dst = chunk.partition("=")
        if not sep or not src.strip() or not dst.strip():
            raise UsageError(f"bad --rename entry {chunk!r}")
        out[src.strip()] = dst.strip()
    return out


def _cmd_eval(session: Session, args, out) -> int:
    f = parse_forest(args.forest, session.symbols)
    try:
        target = renaming_target(session.hopf, _parse_rename(args.rename))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    session.render("eval", evaluate(f, target), out)
    return EXIT_OK


def _cmd_enumerate(session: Session, args, out) -> int:
    _check_degree(args.max_degree)
    rows = []
    for n in range(args.max_degree + 1):
        forests = forests_of_degree(n, session.symbols)
        expected = sum(decoration_count(s, session.symbols) for s in shapes(n))
        rows.append((n, len(shapes(n)), len(forests), expected, forests))
    if session.format == "json":
        payload = {
            "schema": JSON_SCHEMA_VERSION,
            "command": "enumerate",
            "result": [
                {
                    "degree": n,
                    "shapes": ns,
                    "forests": nf,
                    **({"list": [forest_to_json(f) for f in fs]} if args.list else {}),
                }
                for n, ns, nf, _, fs in rows
            ],
        }
        json.dump(payload, out)
        out.write("\n")
        return EXIT_OK
    for n, ns, nf, _, fs in rows:
        out.write(f"degree {n}: {ns} shapes, {nf} forests\n")
        if args.list:
            for f in fs:
                out.write(f"  {f.latex() if session.format == 'latex' else f}\n")
    return EXIT_OK


def _describe(weights: Specialization | None) -> str:
    if weights is None:
        return "symbolic"
    return ",".join(f"{k}={v}" for k, v in sorted(weights.assignment.items()))


def _cmd_check(session: Session, args, out) -> int:
    _check_degree(args.max_degree)
    which = CHECKS if args.name == "all" else (args.name,)
    weight_sets = [session.weights]
    weight_sets += random_specializations(session.symbols, args.seed_specializations, args.seed)
    results = run_checks(session.symbols, args.max_degree, which, weight_sets)
    failed = [(s, r) for s, r in results if not r.ok]
    if session.format == "json":
        payload = {
            "schema": JSON_SCHEMA_VERSION,
            "command": "check",
            "result": [
                {
                    "check": r.name,
                    "weights": _describe(s),
                    "checked": r.checked,
                    "ok": r.ok,
                    **({"counterexample": str(r.violations[0])} if not r.ok else {}),
                }
                for s, r in results
            ],
        }
        json.dump(payload, out)
        out.write("\n")
    else:
        for s, r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r} [{_describe(s)}]\n")
            if not r.ok:
                out.write(f"  smallest counterexample: {_format_violation(r.violations[0])}\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def _format_violation(detail) -> str:
    return " | ".join(str(part) for part in detail)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        session = Session(args)
        cmd = args.command
        if cmd == "product":
            session.render(cmd, session.element(args.a) * session.element(args.b), out)
        elif cmd == "coproduct":
            a = session.element(args.element)
            fn = session.hopf.coproduct if args.method == "recursive" else session.hopf.coproduct_cuts
            session.render(cmd, fn(a), out)
        elif cmd == "counit":
            a = session.element(args.element)
            if args.closed:
                value = Poly()
                for f, c in a.items():
                    value = value + c * session.hopf.counit_closed(f)
            else:
                value = session.hopf.counit(a)
            session.render(cmd, value, out)
        elif cmd == "antipode":
            session.render(cmd, session.hopf.antipode(session.element(args.element)), out)
        elif cmd == "tilde":
            session.render(cmd, session.hopf.leaf_tilde(session.element(args.element)), out)
        elif cmd == "subforests":
            return _cmd_subforests(session, args, out)
        elif cmd == "eval":
            return _cmd_eval(session, args, out)
        elif cmd == "enumerate":
            return _cmd_enumerate(session, args, out)
        elif cmd == "check":
            return _cmd_check(session, args, out)
        return EXIT_OK
    except (UsageError, ParseError, UnknownLabelError) as exc:
        err.write(f"forest-hopf: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
