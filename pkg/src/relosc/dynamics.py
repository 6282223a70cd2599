"""Relativistic oscillator models in dimensionless phase-space variables.

A point particle with relativistic kinetic energy moving in an external
potential is described here in one spatial dimension.  Two potential
families are covered, each in two variants depending on whether the
potential enters as an additive (Lorentz-scalar) term or through a
position-dependent mass:

``free``
    no force, ``E = sqrt(1 + Pi**2)``
``linear-scalar``
    constant force added to the kinetic term, ``E = sqrt(1 + Pi**2) - eta``
``linear-mass``
    constant force absorbed into the mass, ``E = sqrt(Pi**2 + (1 - eta)**2)``
``quadratic-scalar``
    harmonic potential added to the kinetic term,
    ``E = sqrt(1 + Pi**2) + eta**2 / 2``
``quadratic-mass``
    harmonic potential absorbed into the mass,
    ``E = sqrt(Pi**2 + (1 + eta**2 / 2)**2)``

Coordinates are dimensionless throughout: ``Pi = p / (m0 c)`` always,
while ``eta`` and the evolution parameter ``lam`` are scaled by the
oscillator frequency (``eta = Omega x / c``, ``lam = Omega t``) for the
quadratic family and by the proper acceleration (``eta = a x / c**2``,
``lam = a t / c``) for the linear family.  ``E`` denotes the Hamiltonian
in units of the rest energy ``m0 c**2``.

The module also carries the closed-form motions that exist for the free,
linear-scalar and linear-mass models; they are the analytic benchmarks
used by the integrator and density tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "KIND_NAMES",
    "Scales",
    "PhaseState",
    "HamiltonianKind",
    "Trajectory",
    "LinearMassSolution",
    "gamma_of",
    "beta_of",
    "dimensionless_energy",
    "velocity",
    "force",
    "hamiltonian_value",
    "eom_rhs",
    "exact_free",
    "exact_linear_scalar",
    "nonrel_limit_linear",
    "exact_linear_mass",
]

KIND_NAMES = (
    "free",
    "linear-scalar",
    "linear-mass",
    "quadratic-scalar",
    "quadratic-mass",
)

_FAMILY = {
    "free": "free",
    "linear-scalar": "linear",
    "linear-mass": "linear",
    "quadratic-scalar": "quadratic",
    "quadratic-mass": "quadratic",
}


@dataclass(frozen=True)
class Scales:
    """Physical scales fixing the dimensionless variables.

    Parameters
    ----------
    m0 : rest mass (> 0).
    c : speed of light (> 0).
    omega : angular frequency of the harmonic force, required by the
        quadratic models.
    accel : proper acceleration ``F / m0`` of the constant force,
        required by the linear models (any sign, nonzero).
    length : reference length used only by the free model, where no
        force fixes a scale (``eta = x / length``, ``lam = c t / length``).
    """

    m0: float = 1.0
    c: float = 1.0
    omega: float | None = None
    accel: float | None = None
    length: float = 1.0

    def __post_init__(self) -> None:
        if not (self.m0 > 0.0 and math.isfinite(self.m0)):
            raise ValueError(f"rest mass must be positive and finite, got {self.m0}")
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise ValueError(f"speed of light must be positive and finite, got {self.c}")
        if self.omega is not None and not (self.omega > 0.0 and math.isfinite(self.omega)):
            raise ValueError(f"oscillator frequency must be positive, got {self.omega}")
        if self.accel is not None and (self.accel == 0.0 or not math.isfinite(self.accel)):
            raise ValueError(f"proper acceleration must be nonzero and finite, got {self.accel}")
        if not (self.length > 0.0 and math.isfinite(self.length)):
            raise ValueError(f"reference length must be positive, got {self.length}")


@dataclass(frozen=True)
class PhaseState:
    """A single dimensionless phase-space sample (eta, Pi) at time lam."""

    eta: float
    pi: float
    lam: float = 0.0

    def __post_init__(self) -> None:
        for name in ("eta", "pi", "lam"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"PhaseState.{name} must be finite, got {v}")


@dataclass(frozen=True)
class HamiltonianKind:
    """One of the five supported models together with its scales."""

    name: str
    scales: Scales = field(default_factory=Scales)

    def __post_init__(self) -> None:
        if self.name not in KIND_NAMES:
            raise ValueError(f"unknown Hamiltonian kind {self.name!r}; expected one of {KIND_NAMES}")
        if self.family == "quadratic" and self.scales.omega is None:
            raise ValueError(f"kind {self.name!r} requires Scales.omega")
        if self.family == "linear" and self.scales.accel is None:
            raise ValueError(f"kind {self.name!r} requires a nonzero Scales.accel")

    @property
    def family(self) -> str:
        return _FAMILY[self.name]

    # -- constructors ------------------------------------------------

    @classmethod
    def free(cls, scales: Scales | None = None) -> "HamiltonianKind":
        return cls("free", scales if scales is not None else Scales())

    @classmethod
    def linear_scalar(cls, scales: Scales | None = None) -> "HamiltonianKind":
        return cls("linear-scalar", scales if scales is not None else Scales(accel=1.0))

    @classmethod
    def linear_mass(cls, scales: Scales | None = None) -> "HamiltonianKind":
        return cls("linear-mass", scales if scales is not None else Scales(accel=1.0))

    @classmethod
    def quadratic_scalar(cls, scales: Scales | None = None) -> "HamiltonianKind":
        return cls("quadratic-scalar", scales if scales is not None else Scales(omega=1.0))

    @classmethod
    def quadratic_mass(cls, scales: Scales | None = None) -> "HamiltonianKind":
        return cls("quadratic-mass", scales if scales is not None else Scales(omega=1.0))

    # -- unit conversions --------------------------------------------

    def to_dimensionless(self, x: float, p: float, t: float) -> PhaseState:
        """Map physical ``(x, p, t)`` to a dimensionless :class:`PhaseState`."""
        s = self.scales
        pi = p / (s.m0 * s.c)
        if self.family == "quadratic":
            return PhaseState(s.omega * x / s.c, pi, s.omega * t)
        if self.family == "linear":
            return PhaseState(s.accel * x / s.c**2, pi, s.accel * t / s.c)
        return PhaseState(x / s.length, pi, s.c * t / s.length)

    def to_physical(self, state: PhaseState) -> tuple[float, float, float]:
        """Inverse of :meth:`to_dimensionless`; returns ``(x, p, t)``."""
        s = self.scales
        p = state.pi * s.m0 * s.c
        if self.family == "quadratic":
            return state.eta * s.c / s.omega, p, state.lam / s.omega
        if self.family == "linear":
            return state.eta * s.c**2 / s.accel, p, state.lam * s.c / s.accel
        return state.eta * s.length, p, state.lam * s.length / s.c


@dataclass(frozen=True)
class Trajectory:
    """Ordered phase-space samples ``(lam_k, eta_k, Pi_k, E_k)``."""

    lambdas: np.ndarray
    etas: np.ndarray
    pis: np.ndarray
    energies: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.lambdas)
        if not (len(self.etas) == len(self.pis) == len(self.energies) == n):
            raise ValueError("trajectory columns must have equal length")

    def __len__(self) -> int:
        return len(self.lambdas)


def gamma_of(pi):
    """Lorentz factor ``sqrt(1 + Pi**2)`` of a dimensionless momentum."""
    pi = np.asarray(pi, dtype=float)
    return np.sqrt(1.0 + pi * pi)


def beta_of(pi):
    """Velocity in units of c, ``Pi / sqrt(1 + Pi**2)``."""
    pi = np.asarray(pi, dtype=float)
    return pi / np.sqrt(1.0 + pi * pi)


# ----------------------------------------------------------------------
# Energy and equations of motion (array-capable kernels + state wrappers)
# ----------------------------------------------------------------------

def dimensionless_energy(kind: HamiltonianKind, eta, pi):
    """Hamiltonian in units of the rest energy; accepts scalars or arrays."""
    eta = np.asarray(eta, dtype=float)
    pi = np.asarray(pi, dtype=float)
    if kind.name == "free":
        return np.sqrt(1.0 + pi * pi)
    if kind.name == "linear-scalar":
        return np.sqrt(1.0 + pi * pi) - eta
    if kind.name == "linear-mass":
        u = 1.0 - eta
        return np.sqrt(pi * pi + u * u)
    if kind.name == "quadratic-scalar":
        return np.sqrt(1.0 + pi * pi) + 0.5 * eta * eta
    q = 1.0 + 0.5 * eta * eta
    return np.sqrt(pi * pi + q * q)


def velocity(kind: HamiltonianKind, eta, pi):
    """``d eta / d lam`` along the exact flow, i.e. ``dE/dPi``."""
    eta = np.asarray(eta, dtype=float)
    pi = np.asarray(pi, dtype=float)
    if kind.name in ("free", "linear-scalar", "quadratic-scalar"):
        return pi / np.sqrt(1.0 + pi * pi)
    return pi / dimensionless_energy(kind, eta, pi)


def force(kind: HamiltonianKind, eta, pi):
    """``d Pi / d lam`` along the exact flow, i.e. ``-dE/deta``."""
    eta = np.asarray(eta, dtype=float)
    pi = np.asarray(pi, dtype=float)
    if kind.name == "free":
        return np.zeros_like(eta)
    if kind.name == "linear-scalar":
        return np.ones_like(eta)
    if kind.name == "linear-mass":
        return (1.0 - eta) / dimensionless_energy(kind, eta, pi)
    if kind.name == "quadratic-scalar":
        return -eta
    return -eta * (1.0 + 0.5 * eta * eta) / dimensionless_energy(kind, eta, pi)


def _check_state(state: PhaseState) -> None:
    if not isinstance(state, PhaseState):
        raise TypeError(f"expected PhaseState, got {type(state).__name__}")


def hamiltonian_value(kind: HamiltonianKind, state: PhaseState) -> float:
    """Dimensionless energy ``E(eta, Pi)`` of a single state."""
    _check_state(state)
    return float(dimensionless_energy(kind, state.eta, state.pi))


def eom_rhs(kind: HamiltonianKind, state: PhaseState) -> tuple[float, float]:
    """Right-hand side ``(d eta/d lam, d Pi/d lam)`` of Hamilton's equations."""
    _check_state(state)
    return (
        float(velocity(kind, state.eta, state.pi)),
        float(force(kind, state.eta, state.pi)),
    )


# ----------------------------------------------------------------------
# Closed-form motions
# ----------------------------------------------------------------------

def exact_free(eta0: float, pi0: float, lam):
    """Free motion: uniform drift at the relativistic velocity.

    Returns ``(eta, pi)``; ``lam`` may be a scalar or an array.
    """
    lam = np.asarray(lam, dtype=float)
    eta = eta0 + lam * pi0 / math.sqrt(1.0 + pi0 * pi0)
    if lam.ndim:
        return eta, np.full_like(lam, pi0)
    return float(eta), float(pi0)


def exact_linear_scalar(eta0: float, pi0: float, lam):
    """Constant force, scalar-potential form: hyperbolic motion.

    The momentum grows linearly, ``Pi = Pi0 + lam``, and the position
    follows ``eta = eta0 + sqrt(1 + Pi**2) - sqrt(1 + Pi0**2)``.
    Returns ``(eta, pi)``.
    """
    lam = np.asarray(lam, dtype=float)
    pi = pi0 + lam
    eta = eta0 + np.sqrt(1.0 + pi * pi) - math.sqrt(1.0 + pi0 * pi0)
    if lam.ndim:
        return eta, pi
    return float(eta), float(pi)


def nonrel_limit_linear(eta0: float, pi0: float, lam):
    """Newtonian limit of :func:`exact_linear_scalar` (parabolic position).

    ``eta = eta0 + ((Pi0 + lam)**2 - Pi0**2) / 2`` with the same linear
    momentum growth as the exact solution.  Returns ``(eta, pi)``.
    """
    lam = np.asarray(lam, dtype=float)
    pi = pi0 + lam
    eta = eta0 + 0.5 * (pi * pi - pi0 * pi0)
    if lam.ndim:
        return eta, pi
    return float(eta), float(pi)


@dataclass(frozen=True)
class LinearMassSolution:
    """Closed-form bounded motion of the linear mass-type model.

    The conserved dimensionless energy ``gamma0`` and the offset
    ``delta = (1 - eta0) / gamma0`` fix a circular orbit in the plane of
    the rotation coordinates ``(X, X')``, traversed at unit angular
    speed in the phase ``xi = a t / (gamma0 c)``.  The starting point is
    ``X(0) = -delta``, ``X'(0) = x0p = Pi0 / gamma0``; for a state
    launched with ``Pi0 >= 0`` this gives ``x0p = sqrt(1 - delta**2)``.
    """

    gamma0: float
    delta: float
    x0p: float
    scales: Scales

    def __post_init__(self) -> None:
        if not (self.gamma0 > 0.0 and math.isfinite(self.gamma0)):
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")
        if self.delta * self.delta > 1.0 + 1e-12:
            raise ValueError(
                f"delta**2 = {self.delta**2:.6g} exceeds 1; no bounded orbit "
                "matches these parameters"
            )
        if self.scales.accel is None:
            raise ValueError("LinearMassSolution requires Scales.accel")

    @classmethod
    def from_initial(cls, x0: float, pi0: float, scales: Scales) -> "LinearMassSolution":
        if scales.accel is None:
            raise ValueError("linear-mass motion requires Scales.accel")
        eta0 = scales.accel * x0 / scales.c**2
        gamma0 = math.hypot(pi0, 1.0 - eta0)
        if gamma0 == 0.0:
            raise ValueError(
                "degenerate initial condition x0 = c**2/a, p0 = 0: "
                "the effective mass and momentum both vanish"
            )
        return cls(gamma0, (1.0 - eta0) / gamma0, pi0 / gamma0, scales)

    @property
    def angular_frequency(self) -> float:
        """Physical frequency ``a / (gamma0 c)`` of the bounded motion."""
        return abs(self.scales.accel) / (self.gamma0 * self.scales.c)

    def phase(self, t):
        """Rotation phase ``xi = a t / (gamma0 c)``."""
        return np.asarray(t, dtype=float) * self.scales.accel / (self.gamma0 * self.scales.c)

    def rotation(self, xi):
        """Rotation coordinates ``(X, X')`` at phase ``xi``.

        ``(X, X')`` is the initial vector ``(x0p, -delta)`` advanced by
        the rotation ``[[sin, -cos], [cos, sin]]`` acting on
        ``(x0p, delta)``; the orbit satisfies ``X**2 + X'**2 = 1``.
        """
        xi = np.asarray(xi, dtype=float)
        big_x = self.x0p * np.sin(xi) - self.delta * np.cos(xi)
        big_xp = self.x0p * np.cos(xi) + self.delta * np.sin(xi)
        return big_x, big_xp

    def position(self, t):
        """Physical position ``x(t) = (c**2/a) (1 + gamma0 X(xi))``."""
        s = self.scales
        big_x, _ = self.rotation(self.phase(t))
        return (s.c**2 / s.accel) * (1.0 + self.gamma0 * big_x)


def exact_linear_mass(x0: float, pi0: float, scales: Scales, t):
    """Closed-form linear mass-type motion evaluated at physical time t.

    Returns ``(x, X, Xp)`` where ``x`` is the physical position and
    ``(X, Xp)`` are the unit-circle rotation coordinates at the phase
    ``xi = a t / (gamma0 c)``.  Raises a ``ValueError`` for the
    degenerate initial condition at the potential center.
    """
    sol = LinearMassSolution.from_initial(x0, pi0, scales)
    xi = sol.phase(t)
    big_x, big_xp = sol.rotation(xi)
    return (scales.c**2 / scales.accel) * (1.0 + sol.gamma0 * big_x), big_x, big_xp
