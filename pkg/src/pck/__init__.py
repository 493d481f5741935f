"""Exact computations with finite-dimensional graded Poisson color algebras."""

from .algebra import PoissonColorAlgebra, validate_all
from .connections import compute_supports, connection_classes, is_connected
from .decomposition import compute_center, decompose
from .errors import InputError, PreconditionError
from .grading import BiCharacter, GroupSpec
from .scalars import Cyc
from .simplicity import gr_simple_criterion, gr_simple_oracle, simple_decomposition
from .workbench.corpus import corpus_member

__version__ = "0.1.0"

__all__ = [
    "BiCharacter",
    "Cyc",
    "GroupSpec",
    "InputError",
    "PoissonColorAlgebra",
    "PreconditionError",
    "compute_center",
    "compute_supports",
    "connection_classes",
    "corpus_member",
    "decompose",
    "gr_simple_criterion",
    "gr_simple_oracle",
    "is_connected",
    "simple_decomposition",
    "validate_all",
]
