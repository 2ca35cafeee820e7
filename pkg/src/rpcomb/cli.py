"""Command-line front end.

Exit status: 0 ok, 1 domain error or exceeded bound, 2 usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, List, Optional

from . import catalan_parity as cp
from . import core_trees as ct
from . import rp_compositions as rc
from . import rp_words as rw
from .errors import DomainError
from .records import (
    Record,
    check_record,
    composition_record,
    count_record,
    format_code,
    format_composition,
    parse_code,
    parse_composition,
    parse_partition,
    partition_record,
    pair_record,
    word_record,
)
from .verify import HARD_CAPS, PAIRINGS, Bounds, run_verify

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _alphabet_for(word: str, given: Optional[str]) -> str:
    if given is None:
        return "".join(sorted(set(word)))
    if len(set(given)) != len(given):
        raise UsageError(f"--alphabet has repeated letters: {given!r}")
    stray = sorted(set(word) - set(given))
    if stray:
        raise DomainError(f"letters {''.join(stray)!r} are not in the alphabet {given!r}")
    return given


def cmd_count_words(args) -> Iterable[Record]:
    if args.alphabet is not None:
        if len(set(args.alphabet)) != len(args.alphabet) or not args.alphabet:
            raise UsageError(f"bad --alphabet {args.alphabet!r}")
        k = len(args.alphabet)
    elif args.alphabet_size is not None:
        k = args.alphabet_size
    else:
        raise UsageError("count-words needs --alphabet-size or --alphabet")
    if k < 1:
        raise UsageError("alphabet size must be at least 1")
    n = args.length
    yield count_record(
        f"rp-words n={n} K={k}", rw.count_rp_words(n, k), candidates=k**n
    )


def cmd_list_words(args) -> Iterable[Record]:
    if len(set(args.alphabet)) != len(args.alphabet) or not args.alphabet:
        raise UsageError(f"bad --alphabet {args.alphabet!r}")
    for w in rw.enumerate_rp_words(args.length, args.alphabet):
        yield word_record(w)


def cmd_check_word(args) -> Iterable[Record]:
    _alphabet_for(args.word, args.alphabet)
    yield check_record("rp-word", args.word, ct.is_rp(args.word))


def cmd_pair_word(args) -> Iterable[Record]:
    _alphabet_for(args.word, args.alphabet)
    yield pair_record(args.word, ct.pair_sequence(args.word))


def cmd_encode_word(args) -> Iterable[Record]:
    code = rw.encode_rp_word(args.word)
    yield Record("code", {"code": format_code(code, args.empty_mark), "n": code.n})


def cmd_decode_code(args) -> Iterable[Record]:
    code = parse_code(args.code, args.empty_mark)
    yield word_record("".join(rw.decode_rp_code(code)))


def cmd_count_compositions(args) -> Iterable[Record]:
    yield count_record(
        f"rp-compositions n={args.n}",
        rc.count_rp_compositions(args.n),
        candidates=1 << (args.n - 1) if args.n else 1,
    )


def cmd_count_binary_partitions(args) -> Iterable[Record]:
    yield count_record(f"binary-partitions n={args.n}", rc.count_binary_partitions(args.n))


def cmd_list_compositions(args) -> Iterable[Record]:
    for c in rc.enumerate_rp_compositions(args.n):
        yield composition_record(c)


def cmd_list_partitions(args) -> Iterable[Record]:
    for lam in rc.enumerate_binary_partitions(args.n, bound=args.bound):
        yield partition_record(lam)


def cmd_check_composition(args) -> Iterable[Record]:
    c = parse_composition(args.composition)
    yield check_record("rp-composition", format_composition(c), rc.is_rp_composition(c))


def cmd_pair_composition(args) -> Iterable[Record]:
    c = parse_composition(args.composition)
    yield pair_record(format_composition(c), format_composition(rc.pair_composition(c)))


def cmd_map_composition(args) -> Iterable[Record]:
    c = parse_composition(args.composition)
    yield partition_record(rc.composition_to_partition(c))


def cmd_map_partition(args) -> Iterable[Record]:
    lam = parse_partition(args.partition)
    yield composition_record(rc.partition_to_composition(lam))


def cmd_catalan_parity(args) -> Iterable[Record]:
    yield check_record("catalan-odd", args.n, cp.parity_rule(args.n))


def cmd_catalan_count(args) -> Iterable[Record]:
    yield count_record(f"catalan n={args.n}", cp.catalan_number(args.n))


def cmd_catalan_fixed_points(args) -> Iterable[Record]:
    fixed = [
        t
        for t in cp.enumerate_shape_trees(args.n, bound=args.bound)
        if cp.catalan_involution(t) == t
    ]
    yield count_record(f"catalan-fixed-points n={args.n}", len(fixed))
    if args.list:
        for t in fixed:
            yield Record("tree", {"tree": cp.format_shape(t), "n": cp.tree_size(t)})


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpcomb", description="Recursively palindromic words, compositions and trees."
    )
    parser.add_argument(
        "--format", choices=("text", "structured"), default="text",
        help="structured prints one JSON record per line",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        # also accept --format after the subcommand
        p.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)
        return p

    p = add("count-words", cmd_count_words, "number of RP words of a length")
    p.add_argument("--length", type=_nonneg, required=True)
    p.add_argument("--alphabet-size", type=int)
    p.add_argument("--alphabet")

    p = add("list-words", cmd_list_words, "all RP words of a length")
    p.add_argument("--length", type=_nonneg, required=True)
    p.add_argument("--alphabet", required=True)

    for name, func, help_ in (
        ("check-word", cmd_check_word, "is the word RP"),
        ("pair-word", cmd_pair_word, "partner of a word under the pairing"),
    ):
        p = add(name, func, help_)
        p.add_argument("word")
        p.add_argument("--alphabet")

    for name, func, help_, arg in (
        ("encode-word", cmd_encode_word, "code of an RP word, deepest level first", "word"),
        ("decode-code", cmd_decode_code, "RP word of a code such as A0B0C", "code"),
    ):
        p = add(name, func, help_)
        p.add_argument(arg)
        p.add_argument("--empty-mark", default="0")

    for name, func, help_ in (
        ("count-compositions", cmd_count_compositions, "number of RP compositions of n"),
        ("count-binary-partitions", cmd_count_binary_partitions, "number of binary partitions of n"),
        ("list-compositions", cmd_list_compositions, "all RP compositions of n"),
        ("catalan-parity", cmd_catalan_parity, "is the n-th Catalan number odd"),
        ("catalan-count", cmd_catalan_count, "the n-th Catalan number"),
    ):
        p = add(name, func, help_)
        p.add_argument("n", type=_nonneg)

    p = add("list-partitions", cmd_list_partitions, "all binary partitions of n")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--bound", type=_nonneg, default=rc.DEFAULT_PARTITION_BOUND)

    p = add("catalan-fixed-points", cmd_catalan_fixed_points, "trees fixed by the involution")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--bound", type=_nonneg, default=cp.DEFAULT_TREE_BOUND)
    p.add_argument("--list", action="store_true", help="also print the fixed trees")

    for name, func, help_, arg in (
        ("check-composition", cmd_check_composition, "is the composition RP", "composition"),
        ("pair-composition", cmd_pair_composition, "partner of a composition", "composition"),
        ("map-composition", cmd_map_composition, "binary partition of an RP composition", "composition"),
        ("map-partition", cmd_map_partition, "RP composition of a binary partition", "partition"),
    ):
        p = add(name, func, help_)
        p.add_argument(arg)

    p = add("verify", None, "run every brute-force oracle suite")
    defaults = Bounds()
    for f in vars(defaults):
        p.add_argument(
            "--" + f.replace("_", "-"), type=_nonneg, default=getattr(defaults, f),
            help=f"default {getattr(defaults, f)}, at most {getattr(HARD_CAPS, f)}",
        )
    p.add_argument("--alphabet", default="01", help="two-letter alphabet for word suites")
    p.add_argument("--alphabet3", default="012", help="three-letter alphabet for word suites")
    p.add_argument(
        "--pairing-criterion", choices=sorted(PAIRINGS), default="subtree",
        help="level-labels swaps in the level-label pairing as a negative control",
    )
    return parser


def _emit(records: Iterable[Record], fmt: str, out) -> None:
    for r in records:
        out.write(r.render(fmt) + "\n")


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        if args.command == "verify":
            bounds = Bounds(**{f: getattr(args, f) for f in vars(Bounds())})
            records = run_verify(bounds, args.alphabet, args.alphabet3, args.pairing_criterion)
            _emit(records, args.format, out)
            return EXIT_OK if all(r.data["passed"] for r in records) else EXIT_VERIFY
        # materialize first so a failure prints no partial output
        records = list(args.func(args))
    except UsageError as exc:
        err.write(f"rpcomb {args.command}: {exc}\n")
        return EXIT_USAGE
    except (DomainError, ValueError) as exc:
        err.write(f"rpcomb {args.command}: {exc}\n")
        return EXIT_DOMAIN
    _emit(records, args.format, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
