"""Exhaustive cross-checks of every operation against brute-force oracles.

Each suite scans its inputs in increasing size and stops at the first
failure, so a reported counterexample is the smallest one in scan order.
Reports contain no timings and are byte-identical across runs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, fields
from typing import Callable, List, Optional, Sequence

from .catalan_parity import (
    catalan_involution,
    catalan_number,
    enumerate_shape_trees,
    format_shape,
    parity_rule,
    tree_size,
)
from .core_trees import (
    EMPTY,
    first_asymmetric_depth,
    inorder_word,
    is_rp,
    levels,
    midpoint_tree,
    pair_sequence,
    pair_sequence_level_labels,
)
from .errors import BoundExceeded
from .records import (
    Record,
    format_code,
    format_composition,
    format_partition,
    verdict_record,
)
from .rp_compositions import (
    all_compositions,
    binary_partition_counts,
    composition_to_partition,
    count_binary_partitions,
    count_rp_compositions,
    enumerate_binary_partitions,
    enumerate_rp_compositions,
    partition_to_composition,
    rp_composition_counts,
)
from .rp_words import (
    RPCode,
    alpha,
    brute_force_rp_words,
    count_rp_words,
    decode_rp_code,
    encode_rp_word,
    enumerate_rp_words,
)

PAIRINGS = {
    "subtree": pair_sequence,
    "level-labels": pair_sequence_level_labels,
}


@dataclass
class Bounds:
    words_max_n: int = 16
    words3_max_n: int = 9
    pairing_max_n: int = 14
    theorem2_max_n: int = 40
    compositions_max_n: int = 20
    bijection_max_n: int = 20
    composition_pairing_max_n: int = 14
    catalan_max_n: int = 12
    parity_max_n: int = 64


HARD_CAPS = Bounds(
    words_max_n=22,
    words3_max_n=13,
    pairing_max_n=18,
    theorem2_max_n=100_000,
    compositions_max_n=24,
    bijection_max_n=40,
    composition_pairing_max_n=18,
    catalan_max_n=13,
    parity_max_n=1_000_000,
)


def check_bounds(bounds: Bounds) -> None:
    for f in fields(Bounds):
        value, cap = getattr(bounds, f.name), getattr(HARD_CAPS, f.name)
        if not 0 <= value <= cap:
            raise BoundExceeded(f"{f.name}={value} is outside 0..{cap}")


class _Failure(Exception):
    def __init__(self, message: str, counterexample):
        super().__init__(message)
        self.counterexample = counterexample


def _fail(message: str, counterexample) -> None:
    raise _Failure(message, counterexample)


def _show(w) -> str:
    return w if isinstance(w, str) else "".join(str(x) for x in w)


def _suite(name: str, body: Callable[[], str]) -> Record:
    try:
        detail = body()
    except _Failure as exc:
        return verdict_record(name, False, str(exc), exc.counterexample)
    return verdict_record(name, True, detail)


def _words_theorem(bounds: Bounds, alphabet: str, alphabet3: str) -> str:
    for alph, max_n in ((alphabet, bounds.words_max_n), (alphabet3, bounds.words3_max_n)):
        k = len(alph)
        for n in range(max_n + 1):
            oracle = brute_force_rp_words(n, alph)
            listed = list(enumerate_rp_words(n, alph))
            if len(oracle) != count_rp_words(n, k):
                _fail(f"length {n} over {alph!r}: {len(oracle)} RP words, expected {k}^{alpha(n)}", n)
            if len(set(listed)) != len(listed):
                _fail(f"length {n} over {alph!r}: enumeration repeats a word", n)
            if set(listed) != oracle:
                stray = sorted(set(listed) ^ oracle)[0]
                _fail(f"length {n} over {alph!r}: enumeration disagrees with brute force", stray)
    n = bounds.words_max_n
    return (
        f"n<={bounds.words_max_n} over {alphabet!r}, n<={bounds.words3_max_n} over {alphabet3!r}; "
        f"length {n}: {count_rp_words(n, len(alphabet))} RP of {len(alphabet) ** n} words"
    )


def _words_bijection(bounds: Bounds, alphabet: str) -> str:
    checked = 0
    for n in range(bounds.words_max_n + 1):
        for w in sorted(brute_force_rp_words(n, alphabet)):
            code = encode_rp_word(w)
            if _show(decode_rp_code(code)) != w:
                _fail("decode(encode(w)) != w", w)
            checked += 1
        bits = [i for i in range(n.bit_length()) if n >> i & 1]
        for choice in itertools.product(alphabet, repeat=len(bits)):
            lv = [EMPTY] * n.bit_length()
            for i, x in zip(bits, choice):
                lv[i] = x
            code = RPCode(tuple(lv), n)
            if encode_rp_word(_show(decode_rp_code(code))) != code:
                _fail("encode(decode(c)) != c", format_code(code, empty_mark="."))
    return f"{checked} RP words and their codes round-trip for n<={bounds.words_max_n}"


def _midpoint_trees(bounds: Bounds, alphabet: str, alphabet3: str) -> str:
    checked = 0
    for alph, max_n in ((alphabet, bounds.pairing_max_n), (alphabet3, bounds.words3_max_n)):
        for n in range(max_n + 1):
            for letters in itertools.product(alph, repeat=n):
                w = "".join(letters)
                t = midpoint_tree(w)
                if _show(inorder_word(t)) != w:
                    _fail("inorder(midpoint_tree(w)) != w", w)
                for level in levels(t):
                    for v in level:
                        if _shape_of(v.left) != _shape_of(v.right):
                            _fail("halves have different tree shapes", w)
                if is_rp(w) != (first_asymmetric_depth(t) is None):
                    _fail("recursive RP test disagrees with subtree symmetry", w)
                checked += 1
    return f"{checked} words: inorder round trip, equal half shapes, both RP tests agree"


def _shape_of(t):
    if t is None:
        return None
    return (_shape_of(t.left), _shape_of(t.right))


def _word_pairing(bounds: Bounds, alphabet: str, pair: Callable) -> str:
    k = len(alphabet)
    for n in range(bounds.pairing_max_n + 1):
        fixed = 0
        for letters in itertools.product(alphabet, repeat=n):
            w = "".join(letters)
            p = pair(w)
            if pair(p) != w:
                _fail("pairing is not self-inverse", w)
            if Counter(p) != Counter(w):
                _fail("pairing changes the letter multiset", w)
            if (p == w) != is_rp(w):
                _fail("fixed points differ from RP words", w)
            fixed += p == w
        if fixed != count_rp_words(n, k):
            _fail(f"length {n}: {fixed} fixed points, expected {count_rp_words(n, k)}", n)
    return f"self-inverse, multiset-preserving, fixed exactly on RP words for n<={bounds.pairing_max_n}"


def _pairing_regression(pair: Callable) -> str:
    if pair("MADAMIMADAM") != "AMDMAIAMDMA":
        _fail("MADAMIMADAM does not pair with AMDMAIAMDMA", "MADAMIMADAM")
    if pair("AABB") == "AABB":
        _fail("non-RP word is a fixed point", "AABB")
    return f"MADAMIMADAM <-> AMDMAIAMDMA, AABB <-> {pair('AABB')}"


def _theorem2(bounds: Bounds) -> str:
    n_max = bounds.theorem2_max_n
    f = rp_composition_counts(n_max)
    b = binary_partition_counts(n_max)
    for n in range(n_max + 1):
        if f[n] != b[n]:
            _fail(f"f({n}) = {f[n]} but b({n}) = {b[n]}", n)
    return f"f(n) = b(n) for n<={n_max}; f({n_max}) = {f[n_max]}"


def _composition_oracle(bounds: Bounds) -> str:
    total = 0
    for n in range(bounds.compositions_max_n + 1):
        oracle = [c for c in all_compositions(n) if is_rp(c)]
        listed = list(enumerate_rp_compositions(n))
        if len(oracle) != count_rp_compositions(n):
            _fail(f"n={n}: {len(oracle)} RP compositions by brute force, f(n)={count_rp_compositions(n)}", n)
        if len(oracle) != count_binary_partitions(n):
            _fail(f"n={n}: brute-force count differs from b(n)", n)
        if len(set(listed)) != len(listed) or set(listed) != set(oracle):
            _fail(f"n={n}: enumeration disagrees with brute force", n)
        total += 1 << max(n - 1, 0)
    return f"brute force over {total} compositions matches f(n) and b(n) for n<={bounds.compositions_max_n}"


def _composition_bijection(bounds: Bounds) -> str:
    checked = 0
    for n in range(bounds.bijection_max_n + 1):
        for lam in enumerate_binary_partitions(n, bound=HARD_CAPS.bijection_max_n):
            c = partition_to_composition(lam)
            if sum(c) != n or not is_rp(c) or composition_to_partition(c) != lam:
                _fail("partition does not round-trip", format_partition(lam))
            checked += 1
        for c in enumerate_rp_compositions(n):
            lam = composition_to_partition(c)
            if lam.n != n or partition_to_composition(lam) != c:
                _fail("composition does not round-trip", format_composition(c))
    return f"{checked} binary partitions and as many RP compositions round-trip for n<={bounds.bijection_max_n}"


def _composition_pairing(bounds: Bounds, pair: Callable) -> str:
    for n in range(bounds.composition_pairing_max_n + 1):
        fixed = 0
        for c in all_compositions(n):
            p = tuple(pair(c))
            if tuple(pair(p)) != c:
                _fail("pairing is not self-inverse", format_composition(c))
            if sorted(p) != sorted(c):
                _fail("pairing changes the part multiset", format_composition(c))
            if (p == c) != is_rp(c):
                _fail("fixed points differ from RP compositions", format_composition(c))
            fixed += p == c
        if n >= 1 and fixed % 2 != (1 if n == 1 else 0):
            _fail(f"n={n}: fixed-point parity differs from 2^(n-1)", n)
    return f"involution laws hold on all compositions of n<={bounds.composition_pairing_max_n}"


def _catalan_involution(bounds: Bounds) -> str:
    fixed_sizes = []
    for n in range(bounds.catalan_max_n + 1):
        fixed = 0
        for t in enumerate_shape_trees(n, bound=HARD_CAPS.catalan_max_n):
            s = catalan_involution(t)
            if catalan_involution(s) != t:
                _fail("involution is not self-inverse", format_shape(t))
            if tree_size(s) != n:
                _fail("involution changes the node count", format_shape(t))
            if s == t:
                fixed += 1
                if first_asymmetric_depth(t) is not None:
                    _fail("fixed tree is not perfect", format_shape(t))
            elif first_asymmetric_depth(s) != first_asymmetric_depth(t):
                _fail("first asymmetric depth moves under the involution", format_shape(t))
        if fixed != catalan_number(n) % 2 or fixed != int(parity_rule(n)):
            _fail(f"n={n}: {fixed} fixed points, C_n = {catalan_number(n)}", n)
        if fixed:
            fixed_sizes.append(n)
    return f"fixed points exist exactly for n in {fixed_sizes} (n<={bounds.catalan_max_n})"


def _parity_rule(bounds: Bounds) -> str:
    for n in range(bounds.parity_max_n + 1):
        if parity_rule(n) != (catalan_number(n) % 2 == 1):
            _fail(f"C_{n} parity disagrees with the rule", n)
    odd = [n for n in range(bounds.parity_max_n + 1) if parity_rule(n)]
    return f"C_n odd exactly for n in {odd} (n<={bounds.parity_max_n})"


def _records_round_trip(records: List[Record]) -> str:
    for r in records:
        if Record.from_json(r.to_json()) != r:
            _fail("structured record does not parse back", r.data.get("suite"))
    return f"{len(records)} structured records parse back to equal values"


def run_verify(
    bounds: Optional[Bounds] = None,
    alphabet: str = "01",
    alphabet3: str = "012",
    criterion: str = "subtree",
) -> List[Record]:
    """Run every suite in a fixed order and return one verdict per suite."""
    bounds = bounds or Bounds()
    check_bounds(bounds)
    if len(set(alphabet)) != 2 or len(alphabet) != 2:
        raise ValueError(f"--alphabet needs 2 distinct letters, got {alphabet!r}")
    if len(set(alphabet3)) != 3 or len(alphabet3) != 3:
        raise ValueError(f"--alphabet3 needs 3 distinct letters, got {alphabet3!r}")
    pair = PAIRINGS[criterion]
    suites = [
        ("words-theorem1", lambda: _words_theorem(bounds, alphabet, alphabet3)),
        ("words-bijection", lambda: _words_bijection(bounds, alphabet)),
        ("midpoint-trees", lambda: _midpoint_trees(bounds, alphabet, alphabet3)),
        ("word-pairing", lambda: _word_pairing(bounds, alphabet, pair)),
        ("pairing-regression", lambda: _pairing_regression(pair)),
        ("compositions-theorem2", lambda: _theorem2(bounds)),
        ("compositions-brute-force", lambda: _composition_oracle(bounds)),
        ("composition-bijection", lambda: _composition_bijection(bounds)),
        ("composition-pairing", lambda: _composition_pairing(bounds, pair)),
        ("catalan-involution", lambda: _catalan_involution(bounds)),
        ("catalan-parity-rule", lambda: _parity_rule(bounds)),
    ]
    records = [_suite(name, body) for name, body in suites]
    records.append(_suite("record-round-trip", lambda: _records_round_trip(records)))
    return records
