"""Exact computational engine for factorisable ribbon quasi-Hopf algebras."""

from .exactmath import ExactMatrix, Scalar
from .tensorspace import Tensor
from .qha import AxiomReport, QuasiHopfAlgebra, validate

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix",
    "Scalar",
    "Tensor",
    "AxiomReport",
    "QuasiHopfAlgebra",
    "validate",
    "__version__",
]
