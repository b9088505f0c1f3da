"""Exact decomposition of restrictions between two wreath-product families,
with an independent brute-force verification oracle.

The label-level engine (`decomp`) computes every multiplicity from
Littlewood-Richardson numbers; the oracle (`oracle`) rebuilds the same
numbers from explicit character tables of concretely enumerated groups.
"""

from .partitions import (
    Partition,
    MultiPartition,
    generate_partitions,
    generate_multipartitions,
    hook_lengths,
    p_core_and_quotient,
    reconstruct_from_core_quotient,
    hat,
    parse_partition,
    parse_multipartition,
    format_partition,
    format_multipartition,
)
from .sn_char import mn_value, degree, character_table_sn
from .lr import lr_coefficient, iterated_lr, restriction_expansion
from .cyclotomic import Cyclotomic, root_of_unity
from .decomp import (
    k_coefficient,
    induce_H_to_G,
    restrict_G_to_H,
    degree_G,
    degree_H,
    k_matrix,
    gram_matrix,
    basic_set,
    block_partition,
)
from .oracle import (
    base_group,
    wreath_group,
    conjugacy_classes,
    parametrized_character,
    inner_product,
    oracle_restriction,
    verify_mackey_multiplicities,
    verify_suite,
    GuardError,
)

__all__ = [
    "Partition",
    "MultiPartition",
    "generate_partitions",
    "generate_multipartitions",
    "hook_lengths",
    "p_core_and_quotient",
    "reconstruct_from_core_quotient",
    "hat",
    "parse_partition",
    "parse_multipartition",
    "format_partition",
    "format_multipartition",
    "mn_value",
    "degree",
    "character_table_sn",
    "lr_coefficient",
    "iterated_lr",
    "restriction_expansion",
    "Cyclotomic",
    "root_of_unity",
    "k_coefficient",
    "induce_H_to_G",
    "restrict_G_to_H",
    "degree_G",
    "degree_H",
    "k_matrix",
    "gram_matrix",
    "basic_set",
    "block_partition",
    "base_group",
    "wreath_group",
    "conjugacy_classes",
    "parametrized_character",
    "inner_product",
    "oracle_restriction",
    "verify_mackey_multiplicities",
    "verify_suite",
    "GuardError",
]
