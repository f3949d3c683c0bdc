"""Exact homological algebra for finite-dimensional algebras.

Algebras are given by structure constants over ``Q`` or ``GF(p)``.  The
package builds path algebras, matrix algebras and skew group algebras,
computes radicals, primitive idempotents and Gabriel quivers, minimal
resolutions, projective/injective dimensions and Ext dimensions, and runs
condition checkers for several homological conjectures.
"""
from .algebra import (
    Algebra, AlgebraAutomorphism, GroupAction, Quiver, cyclic_table, from_structure_constants,
    gabriel_quiver, jacobson_radical, matrix_algebra, path_algebra, permutation_group_table,
    primitive_idempotents, quiver_automorphism_matrix, skew_group_algebra,
)
from .exactlin import GF, QQ
from .modules import (
    HomDim, Module, direct_sum, dual, ext_dim, ext_dim_via_injective, hom_dim, hom_space,
    indecomposable_injectives, indecomposable_projectives, induce, injective_dimension,
    is_isomorphic, minimal_resolution, projective_dimension, regular_module, restrict, simples,
    twist,
)

__version__ = "0.1.0"
