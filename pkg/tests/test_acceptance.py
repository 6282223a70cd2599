"""Release gate: one test per acceptance criterion, at contract tolerances.

Each test is self-contained and uses an oracle independent of the code
path under test (closed forms, adaptive ODE integration, direct
quadrature).  ``pytest -v tests/test_acceptance.py`` prints one
pass/fail line per criterion.
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad, solve_ivp

from relosc.density import (
    GaussianDensity,
    Grid2D,
    continuity_residual,
    density_current,
    evolve_density,
    grid_mass,
    push_forward_samples,
    sample_gaussian,
)
from relosc.dynamics import (
    HamiltonianKind,
    PhaseState,
    Scales,
    exact_linear_mass,
    exact_linear_scalar,
)
from relosc.elliptic import (
    duffing_solution,
    elliptic_k,
    integrate_momentum_ode,
    jacobi_cn,
    measure_period,
    momentum_ode_solution,
    rel_period,
)
from relosc.salpeter import (
    SpectralState,
    linear_exact_step,
    observables,
    quadratic_split_step,
    weierstrass_transform_quadrature,
)
from relosc.split import SplitStepper, jacobian_fd, step_arrays
from relosc.dynamics import Trajectory

ALL_KINDS = [
    HamiltonianKind.free(),
    HamiltonianKind.linear_scalar(),
    HamiltonianKind.linear_mass(),
    HamiltonianKind.quadratic_scalar(),
    HamiltonianKind.quadratic_mass(),
]


def test_c1_every_one_step_map_has_unit_jacobian():
    # finite-difference Jacobian determinant of each model's one-step map
    # equals 1 within 1e-8 over 1000 random states per model
    rng = np.random.default_rng(1)
    for kind in ALL_KINDS:
        worst = 0.0
        etas = rng.uniform(-1.5, 1.5, 1000)
        pis = rng.uniform(-1.5, 1.5, 1000)
        dlams = 10.0 ** rng.uniform(-4.0, -1.0, 1000)
        for eta, pi, dlam in zip(etas, pis, dlams):
            det = jacobian_fd(SplitStepper(kind, float(dlam)), PhaseState(eta, pi))
            worst = max(worst, abs(det - 1.0))
        assert worst < 1e-8, f"{kind.name}: |det - 1| reached {worst:.3e}"


def test_c2_linear_scalar_split_converges_at_second_order():
    # global error against the closed form at lam = 2 fits order 2.0 +/- 0.2
    kind = HamiltonianKind.linear_scalar()
    eta0, pi0, lam_end = 0.0, 0.9, 2.0
    ref = exact_linear_scalar(eta0, pi0, lam_end)
    errors = []
    dlams = (1e-2, 5e-3, 2.5e-3)
    for dlam in dlams:
        eta, pi = eta0, pi0
        for _ in range(round(lam_end / dlam)):
            eta, pi = step_arrays(kind, eta, pi, dlam, "forward")
        errors.append(math.hypot(float(eta) - ref[0], float(pi) - ref[1]))
    order = float(np.polyfit(np.log(dlams), np.log(errors), 1)[0])
    assert abs(order - 2.0) <= 0.2, f"fitted order {order:.3f}"


def test_c3_density_mass_conserved_and_momentum_tails_grow():
    # transported Gaussian: total mass 1 +/- 1e-3 at every snapshot, and
    # by step 2400 the momentum marginal is leptokurtic beyond 3 standard
    # errors of the sampled excess-kurtosis estimate
    kind = HamiltonianKind.quadratic_scalar()
    rho0 = GaussianDensity(sigma_eta=0.5, sigma_pi=0.5)
    grid = Grid2D.square(8.0, 201)
    snapshots = [0, 1000, 1400, 2400]
    fields = evolve_density(rho0, kind, grid, 5e-3, snapshots)
    for field in fields:
        mass = grid_mass(field)
        assert abs(mass - 1.0) < 1e-3, f"n={field.n_steps}: mass {mass}"
        assert not field.boundary_flag

    n_samples = 20_000
    eta_s, pi_s = sample_gaussian(rho0, n_samples, np.random.default_rng(20240817))
    _, pi_s = push_forward_samples(kind, eta_s, pi_s, 5e-3, 2400)
    z = (pi_s - pi_s.mean()) / pi_s.std()
    excess = float(np.mean(z**4) - 3.0)
    stderr = math.sqrt(24.0 / n_samples)
    assert excess > 3.0 * stderr, f"excess kurtosis {excess:.4f} vs SE {stderr:.4f}"


def test_c4_continuity_residual_shrinks_under_refinement():
    # discrete d S/d lam + d I/d eta residual at lam = 5: one joint
    # grid-and-step halving must reduce the L2 norm at least 3x
    kind = HamiltonianKind.quadratic_scalar()
    rho0 = GaussianDensity(sigma_eta=0.5, sigma_pi=0.5)

    def l2_residual(grid, dlam):
        n_mid = round(5.0 / dlam)
        fields = evolve_density(rho0, kind, grid, dlam, [n_mid - 1, n_mid, n_mid + 1])
        pairs = [density_current(f, kind) for f in fields]
        return continuity_residual(*pairs).l2_norm

    coarse_grid = Grid2D.square(8.0, 101)
    coarse = l2_residual(coarse_grid, 1e-2)
    fine = l2_residual(coarse_grid.halved(), 5e-3)
    assert coarse / fine >= 3.0, f"ratio {coarse / fine:.3f} (coarse {coarse:.3e})"


def test_c5_period_physics_across_amplitudes():
    # (a) small amplitude: measured period within 0.01% of the harmonic one
    period_small, _ = measure_period(integrate_momentum_ode(0.01, lambda_max=50.0))
    assert abs(period_small / (2.0 * math.pi) - 1.0) < 1e-4

    # (b) large amplitude: the adaptive-oracle period exceeds the harmonic
    # one, and the split trajectory tracks the oracle to 1e-6 max-norm
    pi0, lam_end, dlam = 0.9, 25.0, 1e-4
    traj = integrate_momentum_ode(pi0, lambda_max=lam_end)
    period_large, _ = measure_period(traj)
    assert period_large > 2.0 * math.pi

    dense = momentum_ode_solution(pi0, 0.0, lam_end, tol=1e-12)
    kind = HamiltonianKind.quadratic_scalar()
    n_steps = round(lam_end / dlam)
    eta, pi = 0.0, pi0
    gap = 0.0
    stride = 25
    for n in range(1, n_steps + 1):
        eta, pi = step_arrays(kind, eta, pi, dlam, "forward")
        if n % stride == 0:
            ref = dense(n * dlam)[0]
            gap = max(gap, abs(float(pi) - float(ref)))
    assert gap < 1e-6, f"split vs oracle max gap {gap:.3e}"

    # (c) closed-form elliptic period against the measured period of the
    # cubic-truncation solution
    lam = np.linspace(0.0, 40.0, 40001)
    pis = duffing_solution(0.3, lam)
    traj = Trajectory(lam, np.gradient(-pis, lam), pis, np.ones_like(lam))
    period_meas, _ = measure_period(traj)
    assert abs(period_meas / rel_period(0.3)[0] - 1.0) < 1e-4


def test_c6_elliptic_functions_match_independent_oracles():
    assert elliptic_k(0.0) == math.pi / 2.0  # exact, not approximate

    for m in np.linspace(-0.9, 0.9, 19):
        m = float(m)
        oracle, _ = quad(
            lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
            0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-13,
        )
        assert abs(elliptic_k(m) - oracle) < 1e-10, f"K({m:+.2f})"
        assert abs(jacobi_cn(elliptic_k(m), m)) < 1e-10, f"cn(K, {m:+.2f})"

        def rhs(u, y, m=m):
            return [y[1], (2.0 * m - 1.0) * y[0] - 2.0 * m * y[0] ** 3]

        u = np.linspace(0.0, 4.0, 81)
        sol = solve_ivp(rhs, (0.0, 4.0), [1.0, 0.0], method="DOP853",
                        rtol=1e-12, atol=1e-14, dense_output=True)
        assert sol.success
        gap = np.max(np.abs(jacobi_cn(u, m) - sol.sol(u)[0]))
        assert gap < 1e-10, f"cn oracle gap {gap:.3e} at m={m:+.2f}"


def test_c7_rotation_solution_stays_on_the_unit_circle():
    rng = np.random.default_rng(7)
    for _ in range(200):
        scales = Scales(accel=float(rng.uniform(0.2, 3.0)))
        x0 = float(rng.uniform(-0.5, 0.5))
        pi0 = float(rng.uniform(-1.5, 1.5))
        t = float(rng.uniform(0.0, 30.0))
        _, big_x, big_xp = exact_linear_mass(x0, pi0, scales, t)
        assert abs(big_x**2 + big_xp**2 - 1.0) < 1e-12
        # one full phase revolution returns to the starting position
        gamma0 = math.hypot(pi0, 1.0 - scales.accel * x0 / scales.c**2)
        t_turn = 2.0 * math.pi * gamma0 * scales.c / scales.accel
        x_turn, _, _ = exact_linear_mass(x0, pi0, scales, t_turn)
        assert abs(x_turn - x0) < 1e-10


def test_c8_wave_packet_steps_exact_unitary_second_order():
    packet = SpectralState.gaussian_packet()  # N = 2048 over +/- 40

    # linear potential: composing steps telescopes exactly, and the mean
    # conjugate momentum drifts by exactly (coefficient) x (elapsed time)
    a = 0.4
    one = linear_exact_step(packet, a, 1.2)
    parts = packet
    for tau in (0.5, 0.3, 0.4):
        parts = linear_exact_step(parts, a, tau)
    assert np.max(np.abs(one.psi - parts.psi)) < 1e-13
    drift = observables(one).mean_eta - observables(packet).mean_eta
    assert drift == pytest.approx(a * 1.2, abs=1e-9)

    # quadratic potential: unitary to 1e-10 over ten thousand split steps
    b = 0.5
    s = packet
    for _ in range(10_000):
        s = quadratic_split_step(s, b, 1e-3)
    assert abs(s.norm() - 1.0) < 1e-10

    # self-convergence at order 2.0 +/- 0.2
    s0 = SpectralState.gaussian_packet(n_points=1024)
    total = 0.5

    def propagate(dtau):
        state = s0
        for _ in range(round(total / dtau)):
            state = quadratic_split_step(state, b, dtau)
        return state.psi

    ref = propagate(total / 800)
    dtaus = (total / 25, total / 50, total / 100)
    errors = [np.max(np.abs(propagate(dtau) - ref)) for dtau in dtaus]
    order = float(np.polyfit(np.log(dtaus), np.log(errors), 1)[0])
    assert abs(order - 2.0) <= 0.2, f"fitted order {order:.3f}"

    # the position-space potential phase equals the oscillatory-kernel
    # integral operator on the momentum representation
    s_small = SpectralState.gaussian_packet(n_points=512)
    b_dtau = 0.04
    eta, tilde = s_small.momentum_rep()
    shifted = SpectralState(
        s_small.xi_min, s_small.xi_max,
        s_small.psi * np.exp(-1j * b_dtau * s_small.xi**2), s_small.tau,
    )
    _, tilde_spectral = shifted.momentum_rep()
    center = np.nonzero(np.abs(eta) < 6.0)[0]
    out = weierstrass_transform_quadrature(eta, tilde, b_dtau, out_index=center)
    gap = np.max(np.abs(out[center] - tilde_spectral[center]))
    assert gap < 1e-6, f"kernel quadrature vs spectral gap {gap:.3e}"
