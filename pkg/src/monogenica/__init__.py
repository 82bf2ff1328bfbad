"""Orthogonal bases of solid spherical monogenics over the real quaternions.

Constructive bases of the square-integrable monogenic functions on the
unit ball and on the exterior domain, the hypercomplex derivative and
primitivation operators acting on them, and Fourier, Taylor-type and
Laurent series expansions with quadrature-based coefficients.
"""

from .basis import (
    BasisFamily,
    BasisIndex,
    PoleError,
    appell,
    appell_inner_closed,
    appell_inner_recur,
    appell_outer,
    basis_function,
    cauchy_kernel,
    coeff_functions,
    family_convert,
    kelvin,
    phi,
    phi_inner,
    phi_outer,
    spherical_xy,
)
from .calculus import (
    NoPrimitiveError,
    OperatorAction,
    ZetaPolynomial,
    basis_derivative,
    basis_primitive,
    dbar_c,
    fd_dbar,
    fd_hyper_derivative,
    kernel_depth,
    spherical_hyper_derivative,
)
from .legendre import assoc_legendre, legendre_table
from .quadrature import (
    QuadratureRule,
    ball_rule,
    build_rule,
    exterior_rule,
    inner_product,
    shell_rule,
    sphere_rule,
    surface_integral_with_element,
)
from .quaternion import E1, E2, E3, ONE, Point3, Quaternion, antimonogenic_involution, zeta
from .series import (
    SeriesExpansion,
    cauchy_integral,
    derive_series,
    fourier_expand,
    fourier_from_taylor,
    laurent_expand,
    parseval,
    primitive_series,
    taylor_coeffs,
    taylor_from_fourier,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Quaternion",
    "Point3",
    "ONE",
    "E1",
    "E2",
    "E3",
    "zeta",
    "antimonogenic_involution",
    "assoc_legendre",
    "legendre_table",
    "BasisIndex",
    "BasisFamily",
    "PoleError",
    "coeff_functions",
    "spherical_xy",
    "phi_inner",
    "phi_outer",
    "phi",
    "appell",
    "appell_inner_closed",
    "appell_inner_recur",
    "appell_outer",
    "basis_function",
    "cauchy_kernel",
    "family_convert",
    "kelvin",
    "NoPrimitiveError",
    "OperatorAction",
    "ZetaPolynomial",
    "basis_derivative",
    "basis_primitive",
    "dbar_c",
    "fd_dbar",
    "fd_hyper_derivative",
    "kernel_depth",
    "spherical_hyper_derivative",
    "QuadratureRule",
    "build_rule",
    "ball_rule",
    "sphere_rule",
    "shell_rule",
    "exterior_rule",
    "inner_product",
    "surface_integral_with_element",
    "SeriesExpansion",
    "fourier_expand",
    "taylor_coeffs",
    "laurent_expand",
    "fourier_from_taylor",
    "taylor_from_fourier",
    "derive_series",
    "primitive_series",
    "cauchy_integral",
    "parseval",
]
