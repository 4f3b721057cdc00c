"""
Exact Laurent polynomials, expansions of labeled graphs and resolution identities.
"""

from .poly import LaurentPoly
from .expansion import (
    band_laurent, edge_weight, height, laurent_of, snake_laurent, weight, x_var, y_var,
)
from .coefficients import (
    IdentityCheck, coefficients, completion, lhs_laurent, resolution_laurent,
    verify_identity, verify_resolution,
)

__all__ = [
    'LaurentPoly',
    'band_laurent', 'edge_weight', 'height', 'laurent_of', 'snake_laurent', 'weight', 'x_var', 'y_var',
    'IdentityCheck', 'coefficients', 'completion', 'lhs_laurent', 'resolution_laurent',
    'verify_identity', 'verify_resolution',
]
