"""Exact homological algebra for small groups, algebras and simplicial modules."""

__version__ = "0.1.0"

from .abelian import FGAbelianGroup  # noqa: E402
from .chains import ChainComplexZ, all_homology, chain_homology  # noqa: E402
from .errors import (DegreeError, GroupAxiomError, GuardError,  # noqa: E402
                     InfiniteHomSetError, NotEquivariantError,
                     NotHomomorphismError, QuillenKitError, SizeCapError,
                     ValidationError)
from .linalg import IntMatrix, smith_normal_form  # noqa: E402

__all__ = [
    "ChainComplexZ", "DegreeError", "FGAbelianGroup", "GroupAxiomError",
    "GuardError", "InfiniteHomSetError", "IntMatrix", "NotEquivariantError",
    "NotHomomorphismError", "QuillenKitError", "SizeCapError", "ValidationError",
    "all_homology", "chain_homology", "smith_normal_form", "__version__",
]
