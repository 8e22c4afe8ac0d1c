"""Pic(X) bases, pullback matrices, closed-form characteristic polynomials
and the block determinant identities behind them."""

from .basis import BasisElement, BasisKind, parse_label
from .blocks import block_determinant_Mn, block_determinant_Mprime
from .builders import (
    build_cyclic, build_div4, build_odd, build_symmetric, build_twice_odd, supports_symmetric,
)
from .closed_form import closed_form, closed_form_odd, closed_form_twice_odd, t_polynomials
from .pic import PicMatrix, symmetrize

__all__ = [
    "BasisElement", "BasisKind", "PicMatrix", "block_determinant_Mn", "block_determinant_Mprime",
    "build_cyclic", "build_div4", "build_odd", "build_symmetric", "build_twice_odd",
    "closed_form", "closed_form_odd", "closed_form_twice_odd", "parse_label",
    "supports_symmetric", "symmetrize", "t_polynomials",
]
