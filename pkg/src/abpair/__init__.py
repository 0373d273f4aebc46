"""Tensor products, bilinear maps and pairings on finite abelian groups."""

from .bilinear import (
    BilinearMap,
    NondegVerdict,
    QuotientPairing,
    canonical_nondeg_fastpath,
    count_bilinear,
    count_pairings_cyclic,
    direct_product_combine,
    enumerate_bilinear,
    is_pairing,
    kernels,
    nondegeneracy,
    pairing_exists,
    quotient_pairing,
)
from .duality import (
    Character,
    CyclicTarget,
    PrimeFieldRealization,
    character_eval,
    dual_group,
    duality_pairing,
    find_primitive_root,
    realize_in_prime_field,
)
from .groups import FinAbGroup, GroupStructure, Homomorphism, census, is_isomorphic, normalize, structure_from_census
from .limits import EnumerationLimitError, set_enum_limit
from .tensor import TensorResult, canonical_map, factor_through_tensor, primary_tensor_formula, tensor_product

__all__ = [
    "BilinearMap",
    "NondegVerdict",
    "QuotientPairing",
    "canonical_nondeg_fastpath",
    "count_bilinear",
    "count_pairings_cyclic",
    "direct_product_combine",
    "enumerate_bilinear",
    "is_pairing",
    "kernels",
    "nondegeneracy",
    "pairing_exists",
    "quotient_pairing",
    "Character",
    "CyclicTarget",
    "PrimeFieldRealization",
    "character_eval",
    "dual_group",
    "duality_pairing",
    "find_primitive_root",
    "realize_in_prime_field",
    "FinAbGroup",
    "GroupStructure",
    "Homomorphism",
    "census",
    "is_isomorphic",
    "normalize",
    "structure_from_census",
    "EnumerationLimitError",
    "set_enum_limit",
    "TensorResult",
    "canonical_map",
    "factor_through_tensor",
    "primary_tensor_formula",
    "tensor_product",
]
