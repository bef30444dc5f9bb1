"""Supercharacters of pattern groups and the Hopf monoid of non-nesting poset partitions.

Everything is exact: character values are rational functions of the field
size ``q``, and a brute-force model of UT_R(F_p) is available for checking.
"""

from .errors import *  # noqa: F401,F403
from .group import (
    GroupElement,
    enumerate_elements,
    generator,
    group_normality_check,
    in_cover_closure,
    inverse,
    multiply,
    superclass_of,
)
from .hopf.antipode import (
    antipode_chi,
    antipode_delta_subgroup,
    antipode_takeuchi,
    antipode_trivial,
    fac,
    is_lambda_atomic,
)
from .hopf.primitives import decompose_atomic, is_atomic_pair, is_primitive, primitive_generator
from .hopf.species import SpeciesElement, coproduct, product, restriction_general
from .lattice import (
    CoIdeal,
    covers,
    generated_coideal,
    is_normal,
    join,
    join_irreducible,
    lbl_ch_inverse,
    lbl_cl,
    meet,
    meet_irreducible,
    order_exponent,
    ut_lower,
    ut_upper,
)
from .nonnesting import NNPartition, enumerate_nn, int_lambda_mu, is_nn, res_compatible, restrict_nn
from .poset import (
    Interval,
    Poset,
    concatenate,
    interval_leq,
    is_convex,
    poset_from_relations,
    proper_intervals,
    restrict,
    width,
)
from .scalars import RationalFunction, q
from .supercharacters import (
    Basis,
    ClassFunction,
    chi_degree,
    chi_value,
    convert,
    evaluate_at_element,
    inner_product,
    superclass_size,
    table,
    table_determinant,
)

__version__ = "0.1.0"
