"""Command-line interface: ``sfword <command> ...``.

Exit status is 0 on success, 1 when the queried property fails or a domain
error occurs, and 2 on usage errors.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__
from .constructor import DEFAULT_DEPTH, construct
from .disposability import DeletionSite, delete_factor, is_irreducibly_square_free, is_k_irreducible
from .enumerator import CSV_HEADER, census_range, default_threads, iter_square_free
from .errors import SfwordError
from .morphisms import (
    BUILTINS,
    alignment_test,
    apply_morphism,
    crochemore_test,
    fixed_point_prefix,
    parse_morphism,
    power,
    procedure_I_k,
)
from .replication import aggregate_verdict, replicate_all
from .words import find_square, parse_word


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _words(args, stdin) -> list:
    raw = args.words if args.words else [line.strip() for line in stdin if line.strip()]
    return [parse_word(w) for w in raw]


def _add_output_flags(p, table=False, csv=False) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    if table:
        group.add_argument("--table", action="store_true", help="emit an aligned text table")
    if csv:
        group.add_argument("--csv", action="store_true", help="emit CSV")


def _add_threads(p) -> None:
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $SFWORD_THREADS or CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sfword", description="Square-free ternary words toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("check", help="test square-freeness")
    p.add_argument("words", nargs="*", help="words over 012 (default: read stdin)")
    _add_output_flags(p)

    p = sub.add_parser("delete", help="delete an interior factor")
    p.add_argument("word")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--length", type=int, default=1)
    _add_output_flags(p)

    p = sub.add_parser("irreducible", help="test irreducible square-freeness")
    p.add_argument("words", nargs="*")
    _add_output_flags(p)

    p = sub.add_parser("k-irreducible", help="test k-irreducible square-freeness")
    p.add_argument("words", nargs="*")
    p.add_argument("-k", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("enumerate", help="list square-free words of a given length")
    p.add_argument("-n", "--length", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the number of words")

    p = sub.add_parser("census", help="count irreducibly square-free words by length")
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)
    p.add_argument("--representatives", action="store_true",
                   help="list canonical representatives, one per line")
    _add_output_flags(p, table=True, csv=True)
    _add_threads(p)

    p = sub.add_parser("construct", help="build an irreducibly square-free word of length N")
    p.add_argument("--length", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("morphism", help="morphism operations")
    p.add_argument("action", choices=["apply", "power", "fixpoint", "crochemore", "align", "procedure1"])
    p.add_argument("word", nargs="?", help="input word for 'apply'")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", choices=sorted(BUILTINS))
    source.add_argument("--spec", help="file with lines 'a -> image'")
    p.add_argument("-n", type=int, default=1, help="exponent for 'power'")
    p.add_argument("--seed", default="0", help="seed letter for 'fixpoint'")
    p.add_argument("--length", type=int, default=100, help="prefix length for 'fixpoint'")
    p.add_argument("-k", type=int, default=1, help="factor length for 'procedure1'")
    _add_output_flags(p)

    p = sub.add_parser("verify-paper", help="re-check every finite claim")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                   help=f"prefix length standing in for infinite words (default {DEFAULT_DEPTH})")
    _add_output_flags(p, table=True)
    _add_threads(p)
    return parser


def _cmd_check(args, out, stdin) -> int:
    words = _words(args, stdin)
    results = [(w, find_square(w)) for w in words]
    if args.json:
        _dump([{"word": w, "square_free": sq is None,
                "square": None if sq is None else sq.to_dict()} for w, sq in results], out)
    else:
        for w, sq in results:
            text = "square-free" if sq is None else (
                f"square {sq.factor(w)} at start={sq.start} half_length={sq.half_length}")
            print(text if len(results) == 1 else f"{w}: {text}", file=out)
    return 0 if all(sq is None for _, sq in results) else 1


def _cmd_delete(args, out, stdin) -> int:
    w = parse_word(args.word)
    site = DeletionSite(args.start, args.length)
    deleted = delete_factor(w, site)
    if args.json:
        sq = find_square(deleted)
        _dump({"word": w, "site": site.to_dict(), "result": deleted, "square_free": sq is None,
               "square": None if sq is None else sq.to_dict()}, out)
    else:
        print(deleted, file=out)
    return 0


def _report_text(report) -> str:
    if report.verdict:
        return "irreducibly square-free" if report.k == 1 else f"{report.k}-irreducibly square-free"
    site = report.first_disposable
    return f"disposable factor {report.word[site.start:site.start + site.length]} at start={site.start}"


def _cmd_reports(reports, args, out) -> int:
    if args.json:
        _dump([r.to_dict() for r in reports], out)
    else:
        for r in reports:
            text = _report_text(r)
            print(text if len(reports) == 1 else f"{r.word}: {text}", file=out)
    return 0 if all(r.verdict for r in reports) else 1


def _cmd_irreducible(args, out, stdin) -> int:
    return _cmd_reports([is_irreducibly_square_free(w) for w in _words(args, stdin)], args, out)


def _cmd_k_irreducible(args, out, stdin) -> int:
    return _cmd_reports([is_k_irreducible(w, args.k) for w in _words(args, stdin)], args, out)


def _cmd_enumerate(args, out, stdin) -> int:
    if args.length < 0:
        raise SfwordError(f"length must be nonnegative, got {args.length}")
    count = 0
    for w in iter_square_free(args.length):
        count += 1
        if not args.count:
            print(w, file=out)
    if args.count:
        print(count, file=out)
    return 0


def _cmd_census(args, out, stdin) -> int:
    threads = args.threads or default_threads()
    rows = census_range(args.n_min, args.n_max, args.representatives, threads=threads)
    if args.json:
        _dump([row.to_dict() for row in rows], out)
    elif args.representatives:
        for row in rows:
            for w in row.representatives:
                print(w, file=out)
    elif args.csv:
        print(CSV_HEADER, file=out)
        for row in rows:
            print(row.csv(), file=out)
    else:
        print(f"{'length':>6} {'square-free':>11} {'irred. raw':>10} {'irred. classes':>14}", file=out)
        for row in rows:
            print(f"{row.length:>6} {row.square_free_count:>11} {row.irreducible_count_raw:>10} "
                  f"{row.irreducible_count_canonical:>14}", file=out)
    return 0


def _cmd_construct(args, out, stdin) -> int:
    trace = construct(args.length)
    if args.json:
        _dump(trace.to_dict(), out)
    else:
        print(trace.result, file=out)
    return 0


def _load_morphism(args):
    if args.builtin:
        return BUILTINS[args.builtin]
    with open(args.spec) as fh:
        return parse_morphism(fh.read())


def _cmd_morphism(args, out, stdin) -> int:
    m = _load_morphism(args)
    action = args.action
    if action == "apply":
        if args.word is None:
            raise SfwordError("'apply' needs a word")
        result = apply_morphism(m, parse_word(args.word))
        if args.json:
            _dump({"word": args.word, "image": result}, out)
        else:
            print(result, file=out)
        return 0
    if action == "power":
        p = power(m, args.n)
        if args.json:
            _dump(p.to_dict(), out)
        else:
            out.write(p.to_spec())
        return 0
    if action == "fixpoint":
        prefix = fixed_point_prefix(m, args.seed, args.length)
        if args.json:
            _dump({"seed": args.seed, "length": args.length, "prefix": prefix}, out)
        else:
            print(prefix, file=out)
        return 0
    if action in ("crochemore", "align"):
        passed, witness = (crochemore_test if action == "crochemore" else alignment_test)(m)
        if args.json:
            _dump({"test": action, "pass": passed,
                   "witness": None if witness is None else witness.to_dict()}, out)
        else:
            print("pass" if passed else f"fail: {witness.to_dict()}", file=out)
        return 0 if passed else 1
    cert = procedure_I_k(m, args.k)
    if args.json:
        _dump(cert.to_dict(), out)
    else:
        print(f"crochemore: {'pass' if cert.crochemore_pass else 'fail'}", file=out)
        print(f"alignment: {'pass' if cert.alignment_pass else 'fail'}", file=out)
        for pc in cert.pair_checks:
            print(f"pair {pc.a}{pc.b}: {'pass' if pc.passed else 'fail'}", file=out)
        print(f"procedure I: {'pass' if cert.procedure_I_pass else 'fail'}", file=out)
    return 0 if cert.procedure_I_pass else 1


def _cmd_verify_paper(args, out, stdin) -> int:
    threads = args.threads or default_threads()
    results = replicate_all(args.depth, threads=threads)
    ok = aggregate_verdict(results)
    if args.json:
        _dump([r.to_dict() for r in results], out)
    else:
        width = max(len(r.claim_id) for r in results)
        for r in results:
            note = " (bounded)" if r.bounded else ""
            print(f"{r.claim_id:<{width}}  {'pass' if r.verdict else 'FAIL'}{note}", file=out)
        print(f"{'all':<{width}}  {'pass' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


COMMANDS = {
    "check": _cmd_check,
    "delete": _cmd_delete,
    "irreducible": _cmd_irreducible,
    "k-irreducible": _cmd_k_irreducible,
    "enumerate": _cmd_enumerate,
    "census": _cmd_census,
    "construct": _cmd_construct,
    "morphism": _cmd_morphism,
    "verify-paper": _cmd_verify_paper,
}


def run(argv=None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, stdin)
    except ValueError as exc:
        # SfwordError subclasses ValueError; plain ValueErrors are bad arguments
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
