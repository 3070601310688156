"""Command-line front end.

Exit codes: 0 yes/holds, 1 no/fails, 2 usage or parse error,
3 presentation could not be closed into a finite table.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import semigroup as sg
from .variety import (Verdict, classify_nonsimilarity, decide_cyclic_regularity,
                      decide_regular_closedness, derive_yx_identity, ForbiddenWitness,
                      parse_basis)
from .words import (ParseError, blocking_letters, canonical_decomposition, is_regular_word,
                    is_similar, letter_name, parse_identity, parse_word)

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_CONSTRUCTION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cyclreg", description="Cyclic regularity and regular closedness "
                                             "of semigroup varieties.")
    top = ap.add_subparsers(dest="noun", required=True, parser_class=_Parser)

    word = top.add_parser("word", help="inspect words").add_subparsers(dest="verb", required=True)
    p = word.add_parser("decompose", help="canonical decomposition of a word")
    p.add_argument("word")
    p = word.add_parser("similar", help="are two words similar?")
    p.add_argument("u")
    p.add_argument("v")

    ident = top.add_parser("identity", help="check or transform identities") \
        .add_subparsers(dest="verb", required=True)
    p = ident.add_parser("check", help="brute-force an identity in a named semigroup")
    p.add_argument("--semigroup", required=True, choices=sg.BUILTIN_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("identity")
    p = ident.add_parser("derive-yx", help="derive x^k y^l = u'yxv' from a non-similar identity")
    p.add_argument("identity")

    semi = top.add_parser("semigroup", help="named or presented semigroups") \
        .add_subparsers(dest="verb", required=True)
    p = semi.add_parser("show", help="Cayley table and regularity data")
    p.add_argument("name", choices=sg.BUILTIN_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p = semi.add_parser("close", help="build a table from a presentation file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--json", action="store_true")

    var = top.add_parser("variety", help="decide properties of a variety from its basis") \
        .add_subparsers(dest="verb", required=True)
    p = var.add_parser("cyclic-regular")
    p.add_argument("--basis", required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--json", action="store_true")
    p = var.add_parser("regular-closed")
    p.add_argument("--basis", required=True)
    p.add_argument("--json", action="store_true")
    return ap


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _names(S: sg.CayleyTable, elems) -> str:
    return "{" + ", ".join(S.names[e] for e in sorted(elems)) + "}"


def _builtin(name: str, n: Optional[int]) -> sg.CayleyTable:
    if name == "K" and n is None:
        raise _UsageError("semigroup K needs --n")
    try:
        return sg.builtin(name, n)
    except ValueError as e:
        raise _UsageError(str(e)) from None


def _word_decompose(args, out) -> int:
    w = parse_word(args.word)
    blocking = sorted(blocking_letters(w))
    print(f"components: {canonical_decomposition(w)}; m_c={canonical_decomposition(w).m_c}; "
          f"blocking: {','.join(letter_name(x) for x in blocking) or '-'}; "
          f"regular: {'yes' if is_regular_word(w) else 'no'}", file=out)
    return EXIT_YES


def _word_similar(args, out) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    if is_similar(u, v):
        print("similar: yes", file=out)
        return EXIT_YES
    case = classify_nonsimilarity(u, v)
    data = ",".join(letter_name(x) for x in case.letters)
    extra = f" component {case.component}" if case.component else ""
    print(f"similar: no ({case.tag.value} {data}{extra})", file=out)
    return EXIT_NO


def _identity_check(args, out) -> int:
    ident = parse_identity(args.identity)
    S = _builtin(args.semigroup, args.n)
    sigma = sg.counterexample(S, ident)
    if sigma is None:
        print(f"holds: {ident}", file=out)
        return EXIT_YES
    lhs = sg.evaluate_word(S, ident.lhs, sigma)
    rhs = sg.evaluate_word(S, ident.rhs, sigma)
    print(f"fails: {ident}; counterexample {sg.format_assignment(S, sigma)} "
          f"gives {S.names[lhs]} vs {S.names[rhs]}", file=out)
    return EXIT_NO


def _identity_derive(args, out) -> int:
    ident = parse_identity(args.identity)
    if is_similar(ident.lhs, ident.rhs):
        print(f"sides of {ident} are similar; the identity holds in A0 and yields no "
              f"x^k y^l = u'yxv' consequence", file=out)
        return EXIT_NO
    print(derive_yx_identity(ident), file=out)
    return EXIT_YES


def _describe(S: sg.CayleyTable) -> dict:
    d = S.to_dict()
    d["regular"] = sorted(sg.regular_elements(S))
    d["idempotents"] = sorted(sg.idempotents(S))
    d["cyclically_regular"] = sg.is_cyclically_regular(S)
    d["regularly_closed"] = sg.is_regularly_closed(S)
    return d


def _print_table(S: sg.CayleyTable, as_json: bool, out):
    d = _describe(S)
    if as_json:
        print(json.dumps(d, sort_keys=True), file=out)
        return
    print(S, file=out)
    print(f"order: {S.order}", file=out)
    print(f"regular elements: {_names(S, d['regular'])}", file=out)
    print(f"idempotents: {_names(S, d['idempotents'])}", file=out)
    w = sg.cyclic_regularity_witness(S)
    if w is None:
        print("cyclically regular: yes", file=out)
    else:
        a, x = w
        axa = S.table[a][a] if x is None else S.table[S.table[a][x]][a]
        mid = "" if x is None else f"*{S.names[x]}"
        print(f"cyclically regular: no ({S.names[a]}{mid}*{S.names[a]} = {S.names[axa]} "
              f"is not regular)", file=out)
    r = sg.regular_closure_witness(S)
    if r is None:
        print("regularly closed: yes", file=out)
    else:
        a, b = r
        print(f"regularly closed: no ({S.names[a]}*{S.names[b]} = {S.names[S.table[a][b]]} "
              f"is not regular)", file=out)


def _semigroup_show(args, out) -> int:
    _print_table(_builtin(args.name, args.n), args.json, out)
    return EXIT_YES


def _semigroup_close(args, out) -> int:
    p = sg.Presentation.parse(_read(args.file))
    S = sg.close_presentation(p, args.cap)
    _print_table(S, args.json, out)
    return EXIT_YES


def _print_verdict(v: Verdict, as_json: bool, out):
    if as_json:
        print(v.to_json(), file=out)
        return
    label = {"cyclic-regular": "all semigroups cyclically regular",
             "regular-closed": "all semigroups regularly closed"}[v.question]
    print(f"{label}: {'yes' if v.answer else 'no'}", file=out)
    for key, val in v.parameters.items():
        print(f"{key}: {val}", file=out)
    for w in v.witnesses:
        if isinstance(w, ForbiddenWitness):
            print(f"witness: variety contains {w.label}", file=out)
        else:
            data = ",".join(letter_name(x) for x in w.case.letters)
            print(f"witness: identity #{w.index + 1} {w.identity} is non-similar "
                  f"({w.case.tag.value} {data}); derived {w.derived}", file=out)


def _variety_cyclic(args, out) -> int:
    basis = parse_basis(_read(args.basis))
    if args.n_max is not None and args.n_max < 1:
        raise _UsageError("--n-max must be positive")
    v = decide_cyclic_regularity(basis, args.n_max)
    _print_verdict(v, args.json, out)
    return EXIT_YES if v.answer else EXIT_NO


def _variety_closed(args, out) -> int:
    v = decide_regular_closedness(parse_basis(_read(args.basis)))
    _print_verdict(v, args.json, out)
    return EXIT_YES if v.answer else EXIT_NO


_HANDLERS = {
    ("word", "decompose"): _word_decompose,
    ("word", "similar"): _word_similar,
    ("identity", "check"): _identity_check,
    ("identity", "derive-yx"): _identity_derive,
    ("semigroup", "show"): _semigroup_show,
    ("semigroup", "close"): _semigroup_close,
    ("variety", "cyclic-regular"): _variety_cyclic,
    ("variety", "regular-closed"): _variety_closed,
}


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(list(argv))
        return _HANDLERS[(args.noun, args.verb)](args, out)
    except _UsageError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except sg.ClosureError as e:
        print(f"construction failed: {e}", file=err)
        return EXIT_CONSTRUCTION


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
