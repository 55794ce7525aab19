"""Weighted Hopf algebra of (X, Omega)-decorated planar rooted forests.

Coefficients are exact polynomials in the weights ``mu_x`` and ``la_w``.
"""

from .coefficients import ONE, ZERO, Poly, Specialization, SymbolTable, UnknownLabelError
from .enumerate import decorate, forests_of_degree, forests_up_to, shapes
from .forest import (
    UNIT,
    Decoration,
    DecorationKind,
    Forest,
    Tree,
    breadth,
    concat,
    degree,
    depth,
    graft,
    leaf,
    subforest_pairs,
    validate,
)
from .hopf import HopfAlgebra
from .linear import Element, Tensor2, Tensor3, lift_linear, tensor
from .operated import (
    GeneratorConditionError,
    MissingImageError,
    OperatedBialgebraTarget,
    OperatedTarget,
    check_bialgebra_homomorphism,
    check_cocycle_target,
    check_homomorphism,
    evaluate,
    forest_target,
    renaming_target,
)
from .text import ParseError, format_forest, parse_element, parse_forest, parse_tensor2

__all__ = [
    "ONE", "ZERO", "Poly", "Specialization", "SymbolTable", "UnknownLabelError",
    "decorate", "forests_of_degree", "forests_up_to", "shapes",
    "UNIT", "Decoration", "DecorationKind", "Forest", "Tree", "breadth", "concat",
    "degree", "depth", "graft", "leaf", "subforest_pairs", "validate",
    "HopfAlgebra", "Element", "Tensor2", "Tensor3", "lift_linear", "tensor",
    "GeneratorConditionError", "MissingImageError", "OperatedBialgebraTarget",
    "OperatedTarget", "check_bialgebra_homomorphism", "check_cocycle_target",
    "check_homomorphism", "evaluate", "forest_target", "renaming_target",
    "ParseError", "format_forest", "parse_element", "parse_forest", "parse_tensor2",
]
