"""Hopf monoid structure on class functions of pattern groups."""

from .species import (
    SpeciesElement,
    coproduct,
    coproduct_label,
    multiply_tensor,
    product,
    product_labels,
    restriction_general,
    subgroup_label,
    subgroup_poset,
)
