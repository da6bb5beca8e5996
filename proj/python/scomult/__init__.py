"""Finite rings, modules and multiplicatively closed sets.

Elements are plain integers (the carrier index); sets are lists of them.
"""

from ._scomult import (
    DisjointnessFailure,
    Module,
    ParseError,
    Ring,
    direct_sum,
    divisor_module,
    ideals,
    is_comultiplication,
    is_multiplication,
    is_s_comultiplication,
    is_s_cyclic,
    is_s_prime,
    is_s_second,
    lemma_forms,
    localized_order,
    mcs,
    parse_instance,
    saturation,
    self_module,
    statement_ids,
    submodules,
    verify,
    zn,
    zn_product,
)

__all__ = [
    "DisjointnessFailure",
    "Module",
    "ParseError",
    "Ring",
    "direct_sum",
    "divisor_module",
    "ideals",
    "is_comultiplication",
    "is_multiplication",
    "is_s_comultiplication",
    "is_s_cyclic",
    "is_s_prime",
    "is_s_second",
    "lemma_forms",
    "localized_order",
    "mcs",
    "parse_instance",
    "saturation",
    "self_module",
    "statement_ids",
    "submodules",
    "verify",
    "zn",
    "zn_product",
]
