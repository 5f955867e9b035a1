"""Composability classes, split-complex arithmetic and hyperbolic phase space."""

from ._core import (
    HqmError,
    Poly,
    Split,
    __version__,
    axiom_suite,
    expectation,
    gaussian_star,
    minimizer_scan,
    negativity_search,
    para_norm,
    para_spectral_radius,
    phase_axioms,
    run_cli,
    star,
)

__all__ = [
    "HqmError",
    "Poly",
    "Split",
    "__version__",
    "axiom_suite",
    "expectation",
    "gaussian_star",
    "minimizer_scan",
    "negativity_search",
    "para_norm",
    "para_spectral_radius",
    "phase_axioms",
    "run_cli",
    "star",
]
