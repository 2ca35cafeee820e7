"""Recursively palindromic words, compositions and binary trees."""

from .catalan_parity import (
    Shape,
    catalan_involution,
    catalan_number,
    enumerate_shape_trees,
    fixed_point_count,
    parity_rule,
    perfect_tree,
)
from .core_trees import (
    EMPTY,
    Node,
    first_asymmetric_depth,
    inorder_expand,
    inorder_word,
    is_rp,
    midpoint_tree,
    pair_sequence,
    swap_at_depth,
)
from .errors import BoundExceeded, DomainError, InvalidCode, NotRecursivelyPalindromic
from .rp_compositions import (
    BinaryPartition,
    composition_to_partition,
    count_binary_partitions,
    count_rp_compositions,
    enumerate_binary_partitions,
    enumerate_rp_compositions,
    is_rp_composition,
    pair_composition,
    partition_to_composition,
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
