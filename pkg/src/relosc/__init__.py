"""relosc: phase-space and wave-packet dynamics of relativistic oscillators.

The package covers three connected threads:

* classical phase-space (Liouville) evolution of relativistic
  oscillator models with symmetric split-operator maps
  (:mod:`relosc.dynamics`, :mod:`relosc.split`, :mod:`relosc.density`);
* period analysis of the relativistic momentum oscillation through
  Jacobi elliptic functions and a Duffing-type approximation
  (:mod:`relosc.elliptic`);
* spectral propagation of the one-dimensional spinless Salpeter
  equation with linear and quadratic potentials
  (:mod:`relosc.salpeter`).

A command-line front end (:mod:`relosc.cli`, installed as ``relosc``)
drives the standard runs and writes deterministic CSV files.
"""

from .dynamics import (
    KIND_NAMES,
    HamiltonianKind,
    LinearMassSolution,
    PhaseState,
    Scales,
    Trajectory,
    beta_of,
    dimensionless_energy,
    eom_rhs,
    exact_free,
    exact_linear_mass,
    exact_linear_scalar,
    gamma_of,
    hamiltonian_value,
    nonrel_limit_linear,
)
from .density import (
    ContinuityResidual,
    CurrentPair,
    DensityField,
    GaussianDensity,
    Grid2D,
    continuity_residual,
    density_current,
    evolve_density,
    grid_mass,
    marginals,
    push_forward_samples,
    sample_gaussian,
)
from .elliptic import (
    DuffingParams,
    duffing_solution,
    elliptic_k,
    integrate_momentum_ode,
    jacobi_cn,
    jacobi_functions,
    measure_period,
    momentum_ode_solution,
    period_correction_curve,
    rel_period,
)
from .salpeter import (
    AccuracyWarning,
    Observables,
    SalpeterPotential,
    SpectralState,
    linear_exact_step,
    observables,
    quadratic_split_step,
    weierstrass_transform_quadrature,
)
from .split import SplitStepper, evolve, forward_step, jacobian_fd, pullback_step, step_arrays

__version__ = "0.1.0"

__all__ = [
    "KIND_NAMES",
    "AccuracyWarning",
    "ContinuityResidual",
    "CurrentPair",
    "DensityField",
    "DuffingParams",
    "GaussianDensity",
    "Grid2D",
    "HamiltonianKind",
    "LinearMassSolution",
    "Observables",
    "PhaseState",
    "SalpeterPotential",
    "Scales",
    "SpectralState",
    "SplitStepper",
    "Trajectory",
    "beta_of",
    "continuity_residual",
    "density_current",
    "dimensionless_energy",
    "duffing_solution",
    "elliptic_k",
    "eom_rhs",
    "evolve",
    "evolve_density",
    "exact_free",
    "exact_linear_mass",
    "exact_linear_scalar",
    "forward_step",
    "gamma_of",
    "grid_mass",
    "hamiltonian_value",
    "integrate_momentum_ode",
    "jacobi_cn",
    "jacobi_functions",
    "jacobian_fd",
    "linear_exact_step",
    "marginals",
    "measure_period",
    "momentum_ode_solution",
    "nonrel_limit_linear",
    "observables",
    "period_correction_curve",
    "pullback_step",
    "push_forward_samples",
    "quadratic_split_step",
    "rel_period",
    "sample_gaussian",
    "step_arrays",
    "weierstrass_transform_quadrature",
    "__version__",
]
