"""Exact combinatorics of skew domino tableaux, sign-imbalance and the
skew domino Schensted correspondence."""
from .growth import DOMINO, RS, GrowthDiagram, fill_from_boundary, fill_from_corner, forward_local, inverse_local
from .imbalance import F_poly, sign_imbalance, weighted_sum_W
from .polynomials import LaurentPoly, TruncatedSeries, series_exp
from .schensted import (
    PPM,
    ColoredPermutation,
    ZeroOneMatrix,
    phi,
    phi_inverse,
    phi_sym,
    phi_sym_inverse,
    rs_phi,
    rs_phi_inverse,
)
from .shapes import (
    Domino,
    SignedSkewShape,
    covers,
    is_domino_tileable,
    parse_partition,
    shape_stats,
    staircase,
    two_core,
)
from .tableaux import SDT, SYT, ChainTableau, enumerate_tableaux, sdt_stats, spin_polynomial, tableau_sign
from .verify import REGISTRY, IdentityReport, verify_all, verify_identity

__version__ = "0.1.0"

__all__ = [
    "DOMINO", "RS", "GrowthDiagram", "fill_from_boundary", "fill_from_corner", "forward_local",
    "inverse_local", "F_poly", "sign_imbalance", "weighted_sum_W", "LaurentPoly", "TruncatedSeries",
    "series_exp", "PPM", "ColoredPermutation", "ZeroOneMatrix", "phi", "phi_inverse", "phi_sym",
    "phi_sym_inverse", "rs_phi", "rs_phi_inverse", "Domino", "SignedSkewShape", "covers",
    "is_domino_tileable", "parse_partition", "shape_stats", "staircase", "two_core", "SDT", "SYT",
    "ChainTableau", "enumerate_tableaux", "sdt_stats", "spin_polynomial", "tableau_sign", "REGISTRY",
    "IdentityReport", "verify_all", "verify_identity",
]
