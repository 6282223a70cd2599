"""Elliptic-function period analysis of the momentum oscillation.

For the harmonic scalar-potential model the momentum obeys

    Pi'' = -Pi / sqrt(1 + Pi**2),

an oscillator whose period grows with amplitude.  Truncating the
restoring force at cubic order gives a softening Duffing equation

    Pi'' = -Pi + Pi**3 / 2,

solved in closed form by a Jacobi ``cn`` with negative parameter:

    Pi(lam) = sqrt(2 (1 - sigma**2)) * cn(sigma * lam; m),
    sigma   = sqrt(1 - Pi0**2 / 2),
    m       = (sigma**2 - 1) / (2 * sigma**2) <= 0,

with quarter period ``K(m) / sigma``.  The module provides the complete
elliptic integral and Jacobi functions (real arithmetic throughout,
parameter convention ``m = k**2``), the closed-form Duffing solution and
its period, a high-order adaptive integrator for the full momentum
equation, and a zero-crossing period estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .dynamics import Trajectory

__all__ = [
    "DuffingParams",
    "elliptic_k",
    "jacobi_functions",
    "jacobi_cn",
    "duffing_solution",
    "rel_period",
    "period_correction_curve",
    "momentum_ode_rhs",
    "momentum_ode_solution",
    "integrate_momentum_ode",
    "measure_period",
]

_SQRT2 = math.sqrt(2.0)


def elliptic_k(m: float) -> float:
    """Complete elliptic integral of the first kind, parameter convention.

    Computed by the arithmetic-geometric mean for ``0 <= m < 1``; a
    negative parameter is first mapped into that range with the
    reciprocal-parameter identity ``K(m) = K(m / (m - 1)) / sqrt(1 - m)``.
    ``m >= 1`` is rejected (the integral diverges at m = 1).
    """
    if not math.isfinite(m):
        raise ValueError(f"parameter must be finite, got {m}")
    if m >= 1.0:
        raise ValueError(f"parameter must satisfy m < 1, got {m}")
    if m == 0.0:
        return 0.5 * math.pi
    if m < 0.0:
        return elliptic_k(m / (m - 1.0)) / math.sqrt(1.0 - m)
    a, b = 1.0, math.sqrt(1.0 - m)
    for _ in range(64):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * math.pi / a


def _jacobi_core(u, m: float):
    """sn, cn, dn for 0 <= m < 1 by the descending AGM phase recursion."""
    u = np.asarray(u, dtype=float)
    a, b, c = 1.0, math.sqrt(1.0 - m), math.sqrt(m)
    a_seq, c_seq = [a], [c]
    for _ in range(64):
        if abs(c) <= 1e-17 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    n = len(a_seq) - 1
    phi = (2.0**n) * a_seq[n] * u
    for k in range(n, 0, -1):
        ratio = c_seq[k] / a_seq[k]
        phi = 0.5 * (phi + np.arcsin(np.clip(ratio * np.sin(phi), -1.0, 1.0)))
    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = np.sqrt(1.0 - m * sn * sn)
    return sn, cn, dn


def jacobi_functions(u, m: float):
    """Jacobi ``(sn, cn, dn)`` at real ``u`` for parameter ``m < 1``.

    Negative parameters are handled with the real-valued identities

        sn(u | -mu) = sn(v | eps) / (dn(v | eps) sqrt(1 + mu))
        cn(u | -mu) = cn(v | eps) / dn(v | eps)
        dn(u | -mu) = 1 / dn(v | eps)

    where ``eps = mu / (1 + mu)`` and ``v = u sqrt(1 + mu)``; no complex
    arithmetic is involved anywhere.
    """
    if not math.isfinite(m):
        raise ValueError(f"parameter must be finite, got {m}")
    if m >= 1.0:
        raise ValueError(f"parameter must satisfy m < 1, got {m}")
    if m >= 0.0:
        return _jacobi_core(u, m)
    mu = -m
    eps = mu / (1.0 + mu)
    root = math.sqrt(1.0 + mu)
    sn_e, cn_e, dn_e = _jacobi_core(np.asarray(u, dtype=float) * root, eps)
    return sn_e / (dn_e * root), cn_e / dn_e, 1.0 / dn_e


def jacobi_cn(u, m: float):
    """Jacobi ``cn(u, m)`` (parameter convention) for real ``u``, ``m < 1``."""
    return jacobi_functions(u, m)[1]


@dataclass(frozen=True)
class DuffingParams:
    """Amplitude parametrization of the cubic-truncation solution.

    ``sigma`` rescales time inside the elliptic function and ``m`` is
    its (non-positive) parameter; both follow from the momentum
    amplitude ``pi0``, which must lie in (0, sqrt(2)) for the
    parametrization to exist.
    """

    pi0: float
    sigma: float
    m: float

    def __post_init__(self) -> None:
        if not (0.0 < self.pi0 < _SQRT2):
            raise ValueError(
                f"momentum amplitude must lie in (0, sqrt(2)); got {self.pi0}"
            )
        if abs(self.sigma - math.sqrt(1.0 - 0.5 * self.pi0**2)) > 1e-14:
            raise ValueError("sigma inconsistent with pi0")
        if abs(self.m - (self.sigma**2 - 1.0) / (2.0 * self.sigma**2)) > 1e-12:
            raise ValueError("parameter m inconsistent with sigma")

    @classmethod
    def from_amplitude(cls, pi0: float) -> "DuffingParams":
        if not (0.0 < pi0 < _SQRT2):
            raise ValueError(
                f"momentum amplitude must lie in (0, sqrt(2)); got {pi0}"
            )
        sigma = math.sqrt(1.0 - 0.5 * pi0 * pi0)
        m = (sigma * sigma - 1.0) / (2.0 * sigma * sigma)
        return cls(pi0, sigma, m)


def duffing_solution(pi0: float, lam):
    """Closed-form momentum of the cubic truncation, started at rest.

    ``Pi(lam) = pi0 * cn(sigma * lam; m)`` with the amplitude relation
    ``pi0 = sqrt(2 (1 - sigma**2))``.
    """
    p = DuffingParams.from_amplitude(pi0)
    return p.pi0 * jacobi_cn(np.asarray(lam, dtype=float) * p.sigma, p.m)


def rel_period(pi0: float, omega: float = 1.0) -> tuple[float, float]:
    """Oscillation period of the cubic truncation, exact and expanded.

    Returns ``(t_elliptic, t_expanded)`` in physical time:

    * ``t_elliptic = 4 K(m) / (omega * sigma)`` with
      ``m = pi0**2 / (2 pi0**2 - 4)``;
    * ``t_expanded = (2 pi / omega) * (1 + pi0**2 / 4 * (1 + 1 / (2 pi0**2 - 4)))``,
      the small-amplitude expansion of the same quantity.

    ``pi0 = 0`` returns the harmonic period ``2 pi / omega`` for both.
    """
    if not (omega > 0.0 and math.isfinite(omega)):
        raise ValueError(f"omega must be positive, got {omega}")
    if pi0 == 0.0:
        return 2.0 * math.pi / omega, 2.0 * math.pi / omega
    if not (0.0 < pi0 < _SQRT2):
        raise ValueError(
            f"momentum amplitude must lie in [0, sqrt(2)); got {pi0}"
        )
    sigma = math.sqrt(1.0 - 0.5 * pi0 * pi0)
    m = pi0 * pi0 / (2.0 * pi0 * pi0 - 4.0)
    t_elliptic = 4.0 * elliptic_k(m) / (omega * sigma)
    t_expanded = (2.0 * math.pi / omega) * (
        1.0 + 0.25 * pi0 * pi0 * (1.0 + 1.0 / (2.0 * pi0 * pi0 - 4.0))
    )
    return t_elliptic, t_expanded


def period_correction_curve(pi0s, omega: float = 1.0):
    """Relative period stretch versus kinetic energy at the turning momentum.

    For each amplitude the kinetic energy in units of the rest energy is
    ``sqrt(1 + pi0**2) - 1`` and the correction is
    ``t_elliptic / (2 pi / omega) - 1``.  Returns
    ``(kinetic_over_rest, correction)`` arrays; useful for judging at
    which energies the anharmonic period shift becomes measurable.
    """
    pi0s = np.asarray(pi0s, dtype=float)
    kin = np.sqrt(1.0 + pi0s * pi0s) - 1.0
    corr = np.array([rel_period(p, omega)[0] for p in pi0s.ravel()])
    corr = corr.reshape(pi0s.shape) / (2.0 * math.pi / omega) - 1.0
    return kin, corr


def momentum_ode_rhs(lam, y):
    """First-order form of ``Pi'' = -Pi / sqrt(1 + Pi**2)``."""
    pi, dpi = y
    return [dpi, -pi / math.sqrt(1.0 + pi * pi)]


def momentum_ode_solution(
    pi0: float, dpi0: float = 0.0, lambda_max: float = 25.0, tol: float = 1e-10
):
    """Adaptive high-order solution of the full momentum equation.

    Returns the dense scipy solution object, evaluable at arbitrary
    times; raises on integrator failure.
    """
    if lambda_max <= 0.0:
        raise ValueError(f"lambda_max must be positive, got {lambda_max}")
    sol = solve_ivp(
        momentum_ode_rhs,
        (0.0, lambda_max),
        [pi0, dpi0],
        method="DOP853",
        rtol=tol,
        atol=0.01 * tol,
        dense_output=True,
    )
    if not sol.success:
        raise RuntimeError(f"momentum ODE integration failed: {sol.message}")
    return sol.sol


def integrate_momentum_ode(
    pi0: float,
    dpi0: float = 0.0,
    lambda_max: float = 25.0,
    tol: float = 1e-10,
    n_samples: int | None = None,
) -> Trajectory:
    """Integrate the full momentum equation and sample it uniformly.

    The returned :class:`Trajectory` carries ``eta = -Pi'`` (the
    conjugate position of the harmonic scalar-potential model) and the
    conserved energy ``sqrt(1 + Pi**2) + Pi'**2 / 2``.
    """
    dense = momentum_ode_solution(pi0, dpi0, lambda_max, tol)
    if n_samples is None:
        n_samples = max(2001, int(round(lambda_max / 2e-3)) + 1)
    lambdas = np.linspace(0.0, lambda_max, n_samples)
    pis, dpis = dense(lambdas)
    etas = -dpis
    energies = np.sqrt(1.0 + pis * pis) + 0.5 * etas * etas
    return Trajectory(lambdas, etas, pis, energies)


def _refine_crossing(lams: np.ndarray, vals: np.ndarray, k: int) -> float:
    """Root of the local parabola through samples around a sign change."""
    lo = max(k - 1, 0)
    hi = min(lo + 3, len(lams))
    lo = hi - 3
    x = lams[lo:hi]
    y = vals[lo:hi]
    x0 = x[1]
    coeff = np.polyfit(x - x0, y, 2)
    roots = np.roots(coeff)
    roots = roots[np.isreal(roots)].real + x0
    inside = roots[(roots >= lams[k] - 1e-12) & (roots <= lams[k + 1] + 1e-12)]
    if len(inside):
        return float(inside[0])
    # degenerate parabola; fall back to the secant through the bracket
    lam_a, lam_b = lams[k], lams[k + 1]
    va, vb = vals[k], vals[k + 1]
    return float(lam_a - va * (lam_b - lam_a) / (vb - va))


def measure_period(traj: Trajectory) -> tuple[float, float]:
    """Oscillation period from successive same-direction zero crossings.

    Downward crossings of the momentum are located, refined by local
    quadratic interpolation, and averaged.  Returns the estimate and an
    uncertainty (scatter of the individual periods, or a resolution
    bound when only one period is available).  Raises when the
    trajectory contains fewer than two such crossings.
    """
    lams = np.asarray(traj.lambdas, dtype=float)
    vals = np.asarray(traj.pis, dtype=float)
    down = np.nonzero((vals[:-1] > 0.0) & (vals[1:] <= 0.0))[0]
    if len(down) < 2:
        raise ValueError(
            f"need at least two downward zero crossings, found {len(down)}; "
            "extend the trajectory to cover more oscillations"
        )
    crossings = np.array([_refine_crossing(lams, vals, k) for k in down])
    periods = np.diff(crossings)
    period = float(np.mean(periods))
    if len(periods) >= 2:
        scatter = float(np.std(periods, ddof=1) / math.sqrt(len(periods)))
    else:
        scatter = 0.0
    d_lam = float(lams[1] - lams[0])
    return period, max(scatter, d_lam**3)
