"""Exact computations with two and three dimensional Lie superalgebras and super-bialgebras."""

__version__ = "0.1.0"

from .symkernel import Scalar, parse, declare, SymbolicError
from .superalgebra import SuperAlgebra, SuperMatrix, AlgebraError
from .bialgebra import SuperBialgebra
from .registry import algebra, algebra_names, pairs, find_pair, Pair
from .yangbaxter import (RMatrix, SolutionSet, ClassificationResult, NotASolution, solve_coboundary,
                         skew_reduce, schouten, classify, classify_side, bi_r_matrix_check,
                         cocommutator_from_r)
from .supergroup import (GroupParameterization, PoissonTable, PreconditionError, maurer_cartan,
                         invariant_fields, fields_for, sklyanin, poisson_axiom_check, linearization)
from .conventions import current as conventions

__all__ = [
    "Scalar", "parse", "declare", "SymbolicError", "SuperAlgebra", "SuperMatrix", "AlgebraError",
    "SuperBialgebra", "algebra", "algebra_names", "pairs", "find_pair", "Pair", "RMatrix",
    "SolutionSet", "ClassificationResult", "NotASolution", "solve_coboundary", "skew_reduce",
    "schouten", "classify", "classify_side", "bi_r_matrix_check", "cocommutator_from_r",
    "GroupParameterization", "PoissonTable", "PreconditionError", "maurer_cartan",
    "invariant_fields", "fields_for", "sklyanin", "poisson_axiom_check", "linearization", "conventions",
]
