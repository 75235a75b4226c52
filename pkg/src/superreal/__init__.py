"""Exact-arithmetic library for matrix Lie superalgebras, their real
structures, super Hermitian forms, unitary superalgebras and supergroup
points over finite Grassmann coefficient algebras.

All arithmetic is exact: scalars are Gaussian rationals, coefficient
superalgebras are finite Grassmann algebras over them, and every check
in the package is a zero-tolerance identity.
"""

from .scalars import GaussianRational
from .grassmann import (
    GrassmannAlgebraSpec,
    GrassmannElement,
    gr_mul,
    gr_conjugate,
    gr_real_part_basis,
    gr_nilpotency_index,
)
from .supermatrix import (
    SuperMatrix,
    supertranspose,
    supertrace,
    exp_nilpotent,
    log_unipotent,
)

__all__ = [
    "GaussianRational",
    "GrassmannAlgebraSpec",
    "GrassmannElement",
    "gr_mul",
    "gr_conjugate",
    "gr_real_part_basis",
    "gr_nilpotency_index",
    "SuperMatrix",
    "supertranspose",
    "supertrace",
    "exp_nilpotent",
    "log_unipotent",
]

__version__ = "0.1.0"
