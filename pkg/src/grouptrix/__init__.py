"""Graphs defined on finite groups: construction, reduction, verification.

The package builds finite groups in several representations, derives the
graphs whose edges reflect group structure (power, enhanced power, deep
commuting, commuting, generating and non-generating, nilpotence, solvability,
Engel, dual enhanced power), reduces graphs by twin merging to their
cokernels, relates them to the Gruenberg-Kegel prime graph and to subgroup
intersection graphs, and constructs universality embeddings with independent
verifiers.
"""

from .arith import (
    FactorClass,
    enumerate_condition_values,
    factor_classify,
    factorize,
    is_prime,
    phi_and_lcm,
    psl2_cograph_condition,
)
from .errors import (
    CliqueCapError,
    CoverageError,
    GrouptrixError,
    IndeterminateError,
    NotNormalError,
    OrientationError,
    SizeGuardError,
    SpecError,
)
from .fields import FiniteField
from .groups import (
    TOP,
    Group,
    SubgroupHandle,
    alternating_group,
    cayley_table_group,
    center,
    centralizer,
    cyclic_classes,
    cyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    elementary_abelian_group,
    engel_related,
    generalized_quaternion_group,
    generated_closure,
    generates_whole,
    make_group,
    modular_p3_group,
    permutation_group,
    psl2_group,
    quotient,
    series,
    sl2_group,
    subgroup_is,
    symmetric_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
