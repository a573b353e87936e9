"""Command-line front end: ``dyckfact <command> [options]``.

Results go to stdout (JSON by default, text with ``--ascii``), diagnostics to
stderr.  Exit status is 0 on success, 2 when the input is mathematically
unusable and 1 for malformed command lines or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from . import worked_examples
from .errors import DomainError
from .exactnum import ShiftPair, as_rat, derive_mn, format_rat
from .factorizer import (
    Factorization,
    Triviality,
    canonical_factorization,
    multiquiver_factorization,
    multiquiver_solution,
    triviality_check,
)
from .paths import DyckPath, area, canonical_orbit_rep, cyl_path, enumerate_dyck, render_path
from .polyring import SolutionPair
from .solutions import (
    FundamentalSolution,
    classify_degenerate,
    fundamental,
    fundamental_from_word,
    satisfies,
)
from .words import as_word

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2

# accept "-3/2" as a value rather than an option
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rat_arg(text: str):
    try:
        return as_rat(text)
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _common() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = _Parser(add_help=False)
    p.add_argument("--alpha", type=_rat_arg, default=argparse.SUPPRESS, help="shift of step 1")
    p.add_argument("--beta", type=_rat_arg, default=argparse.SUPPRESS, help="shift of step 2")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="output", action="store_const", const="json", default=argparse.SUPPRESS)
    out.add_argument("--ascii", dest="output", action="store_const", const="ascii", default=argparse.SUPPRESS)
    p.add_argument("--max-size", type=int, default=argparse.SUPPRESS, help="enumeration bound on m+n")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="dyckfact", parents=[common], description=__doc__.splitlines()[0])
    parser.add_argument("--seed-examples", metavar="DIR", help="write the worked examples as JSON fixtures into DIR")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help)

    def add_mn(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)

    p = add("paths", "list the generalized Dyck paths ending at (m, n)")
    add_mn(p)
    p = add("count", "count the generalized Dyck paths ending at (m, n)")
    add_mn(p)
    p = add("fundamental", "fundamental solution of a word, shifted by lambda")
    p.add_argument("--word", required=True)
    p.add_argument("--lambda", dest="lam", type=_rat_arg, default=as_rat(0))
    p = add("verify", "check a solution pair against the functional equation")
    p.add_argument("--input", required=True, help="JSON file, '-' for stdin, or inline JSON")
    p = add("factor", "canonical factorization of a solution pair")
    p.add_argument("--input", required=True, help="JSON file, '-' for stdin, or inline JSON")
    p = add("product", "multiply out a factorization")
    p.add_argument("--input", required=True, help="JSON file, '-' for stdin, or inline JSON")
    add("multiquiver", "multiquiver solution for integer shifts of opposite sign and its factorization")
    p = add("orbit-rep", "Dyck rotation of a cyclically irreducible word")
    p.add_argument("--word", required=True)
    p = add("render", "draw Dyck paths or a factorization as ASCII")
    add_mn(p)
    p.add_argument("--word")
    p.add_argument("--input", help="factorization JSON to draw on the cylinder")
    return parser


# -- helpers ---------------------------------------------------------------


def _shifts(args) -> ShiftPair:
    alpha, beta = getattr(args, "alpha", None), getattr(args, "beta", None)
    if alpha is None or beta is None:
        raise UsageError(f"{args.command} needs --alpha and --beta")
    if alpha == 0 or beta == 0:
        raise DomainError(f"a shift is zero; the solution set is {classify_degenerate(alpha, beta).value}")
    return ShiftPair(alpha, beta)


def _mn(args) -> tuple:
    if args.m is not None and args.n is not None:
        return args.m, args.n
    if args.m is not None or args.n is not None:
        raise UsageError("give both --m and --n")
    if getattr(args, "alpha", None) is None or getattr(args, "beta", None) is None:
        raise UsageError(f"{args.command} needs --m/--n or --alpha/--beta")
    mn = derive_mn(args.alpha, args.beta)
    if mn is None:
        raise DomainError("shifts of the same sign have no Dyck paths")
    return mn


def read_json(source: str):
    text = source.strip()
    try:
        if source == "-":
            return json.load(sys.stdin)
        if text.startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {source if len(source) < 60 else 'input'}: {exc}") from exc


def _fact_text(fact: Factorization) -> str:
    lines = []
    for rep, fs in fact.cosets:
        lines.append(f"coset of {format_rat(rep)}:")
        lines.extend(f"  ({d.word}, {format_rat(lam)})" for d, lam in fs)
    return "\n".join(lines) if lines else "trivial"


# -- commands --------------------------------------------------------------
# each returns (json-able object, text rendering)


def cmd_paths(args):
    m, n = _mn(args)
    paths = enumerate_dyck(m, n, getattr(args, "max_size", None))
    obj = {"m": m, "n": n, "paths": [{"word": d.word, "area": area(d)} for d in paths]}
    text = "\n\n".join(f"{d.word}  area {area(d)}\n{render_path(d)}" for d in paths)
    return obj, text


def cmd_count(args):
    m, n = _mn(args)
    count = len(enumerate_dyck(m, n, getattr(args, "max_size", None)))
    return {"dyck_paths": count}, str(count)


def cmd_fundamental(args):
    sp = _shifts(args)
    word = as_word(args.word)
    try:
        d = DyckPath(word)
    except DomainError:
        d = None
    if d is not None and (d.m, d.n) == sp.require_mn():
        fs = fundamental(sp, d, args.lam)
        obj = fs.to_json()
        pair = fs.pair
    else:
        pair = fundamental_from_word(sp, word).shift(-args.lam)
        obj = {"word": word, "lambda": format_rat(args.lam), **pair.to_json()}
    return obj, f"p1 = {pair.p1}\np2 = {pair.p2}"


def cmd_verify(args):
    s = SolutionPair.from_json(read_json(args.input))
    alpha, beta = getattr(args, "alpha", None), getattr(args, "beta", None)
    if alpha is None or beta is None:
        raise UsageError("verify needs --alpha and --beta")
    ok = satisfies(alpha, beta, s)
    return {"verified": ok}, "true" if ok else "false"


def cmd_factor(args):
    sp = _shifts(args)
    s = SolutionPair.from_json(read_json(args.input))
    status = triviality_check(sp, s)
    if status is Triviality.NONTRIVIAL_IMPOSSIBLE:
        raise DomainError("shifts of the same sign admit only the trivial solution")
    fact = Factorization(sp) if status is Triviality.TRIVIAL else canonical_factorization(sp, s)
    return fact.to_json(), _fact_text(fact)


def cmd_product(args):
    sp = _shifts(args)
    fact = Factorization.from_json(sp, read_json(args.input))
    pair = fact.product()
    return pair.to_json(), f"p1 = {pair.p1}\np2 = {pair.p2}"


def cmd_multiquiver(args):
    sp = _shifts(args)
    if sp.alpha1.denominator != 1 or sp.alpha2.denominator != 1:
        raise DomainError("multiquiver shifts must be integers")
    a1, a2 = int(sp.alpha1), int(sp.alpha2)
    pair = multiquiver_solution(a1, a2)
    fact = multiquiver_factorization(a1, a2)
    obj = {"solution": pair.to_json(), "factorization": fact.to_json()}
    return obj, f"p1 = {pair.p1}\np2 = {pair.p2}\n{_fact_text(fact)}"


def cmd_orbit_rep(args):
    sp = _shifts(args)
    k, d = canonical_orbit_rep(sp, args.word)
    return {"shift": k, "word": d.word}, f"{d.word} (rotation {k})\n{render_path(d)}"


def cmd_render(args):
    blocks: List[str] = []
    if args.input is not None:
        sp = _shifts(args)
        fact = Factorization.from_json(sp, read_json(args.input))
        for rep, fs in fact.cosets:
            for d, lam in fs:
                c = cyl_path(sp, d, lam, rep)
                blocks.append(f"{d.word}  lambda {format_rat(lam)}  base ({c.base.r}, {c.base.s})\n{render_path(d)}")
    elif args.word is not None:
        d = DyckPath(args.word)
        blocks.append(f"{d.word}\n{render_path(d)}")
    else:
        m, n = _mn(args)
        blocks.extend(f"{d.word}\n{render_path(d)}" for d in enumerate_dyck(m, n, getattr(args, "max_size", None)))
    text = "\n\n".join(blocks)
    return {"render": text}, text


COMMANDS: Dict[str, Callable] = {
    "paths": cmd_paths,
    "count": cmd_count,
    "fundamental": cmd_fundamental,
    "verify": cmd_verify,
    "factor": cmd_factor,
    "product": cmd_product,
    "multiquiver": cmd_multiquiver,
    "orbit-rep": cmd_orbit_rep,
    "render": cmd_render,
}

# commands whose default output is text
_TEXT_DEFAULT = {"render"}


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seed_examples:
            for path in worked_examples.dump(Path(args.seed_examples)):
                print(path, file=stdout)
            if args.command is None:
                return EXIT_OK
        if args.command is None:
            raise UsageError("a command is required")
        obj, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    mode = getattr(args, "output", None) or ("ascii" if args.command in _TEXT_DEFAULT else "json")
    if mode == "ascii":
        print(text, file=stdout)
    else:
        print(json.dumps(obj, indent=2), file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
