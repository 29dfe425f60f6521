"""Command-line front end.

Every JSON argument may be a file path, ``-`` for standard input, or an
inline JSON document.  Exit codes: 0 success, 1 usage error, 2 bad input,
3 when a predicate (``equiv``) answers no.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .boolvec import vectorize
from .emtre.compile import compile_star_free, eval_emtre
from .emtre.syntax import parse
from .enumeration import MAX_ARITY, count_ptt, default_workers, enumerate_ptt
from .errors import TildeError
from .lang import act_tilde, languages_from_json
from .poset import equivalent, pseudo_closure
from .tilde import Multitilde, compose_partial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NO = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json(arg: str, what: str):
    text = arg
    stripped = arg.lstrip()
    if arg == "-":
        text = sys.stdin.read()
    elif not stripped.startswith(("{", "[")):
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise TildeError(f"{what}: cannot read {arg}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise TildeError(f"{what}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _tilde(arg: str, what: str) -> Multitilde:
    try:
        return Multitilde.from_json(_load_json(arg, what))
    except TildeError as exc:
        field = getattr(exc, "field", None)
        prefix = f"{what}: field '{field}'" if field else what
        raise TildeError(f"{prefix}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="multitilde", description="Multitilde operators on finite languages.")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("compose", help="partial composition T1 o_k T2")
    s.add_argument("t1")
    s.add_argument("k", type=int)
    s.add_argument("t2")

    s = sub.add_parser("act", help="apply a multitilde to a tuple of languages")
    s.add_argument("tilde")
    s.add_argument("langs")

    s = sub.add_parser("vectorize", help="boolean vectors of the free subsets")
    s.add_argument("tilde")

    s = sub.add_parser("closure", help="pseudotransitive closure")
    s.add_argument("tilde")

    s = sub.add_parser("equiv", help="exit 0 if equivalent, 3 otherwise")
    s.add_argument("t1")
    s.add_argument("t2")

    for name, help_text in (
        ("count", "number of pseudotransitive multitildes of arity k"),
        ("enumerate", "stream pseudotransitive multitildes of arity k as NDJSON"),
    ):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("k", type=int)
        s.add_argument("--workers", type=int, default=None,
                       help="worker processes (default: $TILDE_WORKERS or 1)")

    s = sub.add_parser("compile", help="compile a star-free expression to one multitilde")
    s.add_argument("expr")

    s = sub.add_parser("eval", help="words of an expression up to a length bound")
    s.add_argument("expr")
    s.add_argument("--max-len", type=int, required=True)

    sub.add_parser("paper-examples", help="check every published worked example")
    return p


def _emit(out, obj) -> None:
    out.write(json.dumps(obj, ensure_ascii=False))
    out.write("\n")


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "compose":
        t1 = _tilde(args.t1, "T1")
        t2 = _tilde(args.t2, "T2")
        _emit(out, compose_partial(t1, args.k, t2).to_json())
    elif cmd == "act":
        t = _tilde(args.tilde, "tilde")
        langs = languages_from_json(_load_json(args.langs, "langs"))
        _emit(out, act_tilde(t, langs).to_json())
    elif cmd == "vectorize":
        _emit(out, vectorize(_tilde(args.tilde, "tilde")).to_json())
    elif cmd == "closure":
        _emit(out, pseudo_closure(_tilde(args.tilde, "tilde")).to_json())
    elif cmd == "equiv":
        same = equivalent(_tilde(args.t1, "T1"), _tilde(args.t2, "T2"))
        _emit(out, {"equivalent": same})
        return EXIT_OK if same else EXIT_NO
    elif cmd in ("count", "enumerate"):
        if not 1 <= args.k <= MAX_ARITY:
            raise UsageError(f"k must be in 1..{MAX_ARITY}")
        workers = args.workers or default_workers()
        if cmd == "count":
            _emit(out, count_ptt(args.k, workers=workers).to_json())
        else:
            for t in enumerate_ptt(args.k, workers=workers):
                _emit(out, t.to_json())
    elif cmd == "compile":
        _emit(out, compile_star_free(parse(args.expr)).to_json())
    elif cmd == "eval":
        if args.max_len < 0:
            raise UsageError("--max-len must be non-negative")
        _emit(out, eval_emtre(parse(args.expr), args.max_len).to_json())
    elif cmd == "paper-examples":
        from .worked_examples import run_all

        results = run_all()
        for name, ok, error in results:
            line = f"{'PASS' if ok else 'FAIL'}  {name}"
            if error:
                line += f"  ({error})"
            out.write(line + "\n")
        passed = sum(ok for _, ok, _ in results)
        out.write(f"{passed}/{len(results)} examples pass\n")
        return EXIT_OK if passed == len(results) else EXIT_NO
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = sys.stdout
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                return _dispatch(args, fh)
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TildeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
