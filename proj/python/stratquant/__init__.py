"""Exact-arithmetic toolkit for singular symplectic reduction and
costratified Fock-space quantization.

All exact values cross the boundary as strings ("p/q" rationals, canonical
polynomial text) or python ints, so nothing is ever rounded. See the
individual function docstrings on :mod:`stratquant._core`.
"""

from ._core import (
    DEFAULT_SEED,
    __version__,
    adjoint_point,
    bargmann_inner,
    bracket,
    costratified_restrict,
    dirac_max_residual,
    enumerate_monomials,
    euler_apply,
    gram,
    invariant_basis,
    jacobiator,
    kernel_dim,
    mu_o,
    mu_sp,
    normal_form,
    oracle_dim,
    orbit_image,
    poisson_ideal_ok,
    run_checks,
    section_dim,
    steinberg,
    weyl_dim,
)

__all__ = [
    "DEFAULT_SEED",
    "__version__",
    "adjoint_point",
    "bargmann_inner",
    "bracket",
    "costratified_restrict",
    "dirac_max_residual",
    "enumerate_monomials",
    "euler_apply",
    "gram",
    "invariant_basis",
    "jacobiator",
    "kernel_dim",
    "mu_o",
    "mu_sp",
    "normal_form",
    "oracle_dim",
    "orbit_image",
    "poisson_ideal_ok",
    "run_checks",
    "section_dim",
    "steinberg",
    "weyl_dim",
]
