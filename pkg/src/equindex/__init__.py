"""Equivariant GSV-indices and Chern obstructions of collections of 1-forms.

Everything is exact rational arithmetic.  The main entry points are
:func:`gsv_index`, :func:`smooth_index` and :func:`chern_obstruction`; problems
are usually read with :func:`equindex.document.load`.
"""

from .conservation import DeformationSpec, conserve, conserve_ideal
from .document import load, loads, problem_from_dict, problem_to_dict
from .equivariant import (
    EquivariantFunction,
    EquivariantOneForm,
    IndexProblem,
    InvalidProblem,
    ProfilePair,
    assemble_ideal,
    schur_matrix,
    validate,
)
from .group_rep import AbelianGroup, Character, DiagonalRepresentation, char_add, char_of_monomial, fixed_block
from .indices import (
    GenericityFailure,
    IndexReport,
    NonIsolatedError,
    chern_obstruction,
    gsv_index,
    sample_generic_linear,
    smooth_index,
)
from .local_algebra import INFINITE, BudgetExceeded, colength, global_colength, normal_form, standard_basis
from .oracle import NOT_STABILIZED, cross_check, macaulay_colength
from .polyring import GLOBAL, LOCAL, MonomialOrder, Polynomial, determinant, parse

__version__ = "0.1.0"
