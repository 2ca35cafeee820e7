"""Counting, enumerating and encoding RP words over a finite alphabet.

An RP word of length ``n`` is determined by one letter per 1-bit of ``n``:
the letter at bit ``i`` labels every node at depth ``i`` of its midpoint
tree, and the 0-bits are the depths carrying the empty mark.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence, Set, Tuple

from .core_trees import EMPTY, inorder_expand, is_rp
from .errors import BoundExceeded, InvalidCode, NotRecursivelyPalindromic

DEFAULT_ORACLE_BOUND = 2**24


def alpha(n: int) -> int:
    """Sum of the binary digits of ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n.bit_count()


def count_rp_words(n: int, k: int) -> int:
    """Number of RP words of length ``n`` over ``k`` letters, ``k**alpha(n)``."""
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    return k ** alpha(n)


def _check_alphabet(alphabet: Sequence[Hashable]) -> None:
    if len(alphabet) == 0:
        raise ValueError("alphabet must not be empty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet has repeated letters: {alphabet!r}")


@dataclass(frozen=True)
class RPCode:
    """Level labels of an RP word's midpoint tree, root first.

    ``levels[i]`` is a letter when bit ``i`` of ``n`` is set and ``EMPTY``
    otherwise.
    """

    levels: Tuple[Hashable, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        if self.n < 0:
            raise InvalidCode(f"negative length {self.n}")
        if len(self.levels) != self.n.bit_length():
            raise InvalidCode(
                f"code has {len(self.levels)} levels but n={self.n} "
                f"has {self.n.bit_length()} binary digits"
            )
        for i, label in enumerate(self.levels):
            if (label is not EMPTY) != bool(self.n >> i & 1):
                raise InvalidCode(
                    f"level {i} is {'empty' if label is EMPTY else 'a letter'} "
                    f"but binary digit {i} of {self.n} is {self.n >> i & 1}"
                )

    @classmethod
    def from_levels(cls, levels: Sequence[Hashable]) -> "RPCode":
        """Build a code, reading ``n`` off the positions of the letters."""
        n = sum(1 << i for i, label in enumerate(levels) if label is not EMPTY)
        return cls(tuple(levels), n)

    @property
    def letters(self) -> tuple:
        return tuple(x for x in self.levels if x is not EMPTY)


def encode_rp_word(w: Sequence) -> RPCode:
    """Code of an RP word: the uniform label of each depth, root first."""
    if not is_rp(w):
        raise NotRecursivelyPalindromic(f"{w!r} is not recursively palindromic")
    n = len(w)
    levels = []
    while len(w) > 0:
        m = len(w)
        levels.append(w[m // 2] if m % 2 else EMPTY)
        w = w[: m // 2]
    return RPCode(tuple(levels), n)


def decode_rp_code(code) -> tuple:
    """RP word of a code; accepts an :class:`RPCode` or a root-first level list."""
    if not isinstance(code, RPCode):
        code = RPCode.from_levels(code)
    return inorder_expand(code.levels)


def _as_word(alphabet, letters):
    if isinstance(alphabet, str):
        return "".join(letters)
    return tuple(letters)


def enumerate_rp_words(n: int, alphabet: Sequence[Hashable]) -> Iterator[Sequence]:
    """Yield every RP word of length ``n``, each once.

    Words come out in lexicographic order of their letter assignment to the
    code positions, root first, letters ranked by their alphabet order.
    """
    _check_alphabet(alphabet)
    bits = [i for i in range(n.bit_length()) if n >> i & 1]
    for choice in itertools.product(alphabet, repeat=len(bits)):
        levels = [EMPTY] * n.bit_length()
        for i, letter in zip(bits, choice):
            levels[i] = letter
        yield _as_word(alphabet, inorder_expand(levels))


def brute_force_rp_words(
    n: int, alphabet: Sequence[Hashable], bound: int = DEFAULT_ORACLE_BOUND
) -> Set[Sequence]:
    """Filter all ``len(alphabet)**n`` words of length ``n`` through :func:`is_rp`."""
    _check_alphabet(alphabet)
    total = len(alphabet) ** n
    if total > bound:
        raise BoundExceeded(
            f"{len(alphabet)}^{n} = {total} candidate words exceeds the bound {bound}"
        )
    return {
        _as_word(alphabet, w)
        for w in itertools.product(alphabet, repeat=n)
        if is_rp(w)
    }
