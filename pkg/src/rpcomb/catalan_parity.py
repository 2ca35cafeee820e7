"""Parity of the Catalan numbers through an involution on binary trees.

Flipping every node at the shallowest depth where some node has unequal
subtrees pairs off all binary trees except the perfect ones, so ``C_n`` is
odd exactly when a perfect tree with ``n`` nodes exists, i.e. ``n = 2**k - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .core_trees import first_asymmetric_depth, swap_at_depth
from .errors import BoundExceeded

DEFAULT_TREE_BOUND = 14


@dataclass(frozen=True)
class Shape:
    """Unlabeled binary tree node; ``None`` is the empty tree."""

    left: Optional["Shape"] = None
    right: Optional["Shape"] = None
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + tree_size(self.left) + tree_size(self.right))


ShapeTree = Optional[Shape]


def tree_size(t: ShapeTree) -> int:
    return 0 if t is None else t.size


def perfect_tree(depth: int) -> ShapeTree:
    """The perfect tree with ``2**depth - 1`` nodes."""
    t = None
    for _ in range(depth):
        t = Shape(t, t)
    return t


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[ShapeTree, ...]:
    if n == 0:
        return (None,)
    return tuple(
        Shape(left, right)
        for i in range(n)
        for left in _shapes(i)
        for right in _shapes(n - 1 - i)
    )


def enumerate_shape_trees(n: int, bound: int = DEFAULT_TREE_BOUND) -> Iterator[ShapeTree]:
    """Yield all binary trees with ``n`` nodes, by left-subtree size ascending."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the tree enumeration bound {bound}")
    yield from _shapes(n)


def catalan_involution(t: ShapeTree) -> ShapeTree:
    depth = first_asymmetric_depth(t)
    if depth is None:
        return t
    return swap_at_depth(t, depth)


def fixed_point_count(n: int, bound: int = DEFAULT_TREE_BOUND) -> int:
    return sum(1 for t in enumerate_shape_trees(n, bound) if catalan_involution(t) == t)


def catalan_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def parity_rule(n: int) -> bool:
    """True iff ``n + 1`` is a power of two, the condition for ``C_n`` odd."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = n + 1
    return m & (m - 1) == 0


def format_shape(t: ShapeTree) -> str:
    """``.`` for the empty tree, ``(LR)`` for a node, e.g. ``((..)(..))``."""
    if t is None:
        return "."
    return "(" + format_shape(t.left) + format_shape(t.right) + ")"


def parse_shape(s: str) -> ShapeTree:
    pos = 0

    def parse() -> ShapeTree:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of tree text {s!r}")
        ch = s[pos]
        pos += 1
        if ch == ".":
            return None
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} at {pos - 1} in {s!r}")
        left = parse()
        right = parse()
        if pos >= len(s) or s[pos] != ")":
            raise ValueError(f"expected ')' at {pos} in {s!r}")
        pos += 1
        return Shape(left, right)

    t = parse()
    if pos != len(s):
        raise ValueError(f"trailing text at {pos} in {s!r}")
    return t
