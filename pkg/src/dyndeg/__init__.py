"""Dynamical degrees of the matrix inversion map on cyclic and symmetric
cyclic matrices, computed from exact integer pullback matrices."""

from .errors import (
    BadGenerator, BadPrime, CrossCheckFailure, DegenerateLine, DyndegError, InexactDivision,
    InvalidIndex, NonConvergence, UnknownDivisor, UnsupportedQ,
)
from .numeric import (
    BigIntMatrix, IntPoly, SpectralResult, charpoly, matrix_power_entry, spectral_radius,
    unit_circle_cofactor_check,
)
from .divisors import Case, DivisorProfile, build_profile
from .picard import (
    BasisKind, PicMatrix, build_cyclic, build_div4, build_odd, build_symmetric, build_twice_odd,
)
from .oracle import DegreeSequence, MapKind, compare, run_oracle
from .lemmas import verify_orbit_lemmas

__version__ = "0.1.0"

__all__ = [
    "BadGenerator", "BadPrime", "BasisKind", "BigIntMatrix", "Case", "CrossCheckFailure",
    "DegenerateLine", "DegreeSequence", "DivisorProfile", "DyndegError", "InexactDivision",
    "IntPoly", "InvalidIndex", "MapKind", "NonConvergence", "PicMatrix", "SpectralResult",
    "UnknownDivisor", "UnsupportedQ", "build_cyclic", "build_div4", "build_odd", "build_profile",
    "build_symmetric", "build_twice_odd", "charpoly", "compare", "matrix_power_entry",
    "run_oracle", "spectral_radius", "unit_circle_cofactor_check", "verify_orbit_lemmas",
]
