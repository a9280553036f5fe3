"""kclass: exact conjugacy-class and automorphism-orbit counting for finite
permutation groups, with verification suites for the class-count bounds
(notably log3|G| < k(G)) over a bundled corpus of simple and almost simple
groups."""

from ._core import BACKEND
from .permcore import (
    ClassDecomposition,
    FiniteGroup,
    Permutation,
    compose,
    conjugacy_classes,
    element_order,
    group_elements,
    group_order,
    is_normal_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassDecomposition",
    "FiniteGroup",
    "Permutation",
    "compose",
    "conjugacy_classes",
    "element_order",
    "group_elements",
    "group_order",
    "is_normal_subgroup",
    "__version__",
]
