"""Spectral wave-packet propagation: exact linear step, split step, kernel quadrature."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from relosc.salpeter import (
    AccuracyWarning,
    Observables,
    SalpeterPotential,
    SpectralState,
    linear_exact_step,
    observables,
    quadratic_split_step,
    weierstrass_transform_quadrature,
)


@pytest.fixture
def packet():
    return SpectralState.gaussian_packet()


# ------------------------------------------------------------------- state


def test_state_requires_power_of_two():
    psi = np.ones(100, dtype=complex)
    with pytest.raises(ValueError, match="power of two"):
        SpectralState(-1.0, 1.0, psi)
    with pytest.raises(ValueError, match="power of two"):
        SpectralState(-1.0, 1.0, np.ones(8, dtype=complex))


def test_state_requires_ordered_window():
    with pytest.raises(ValueError):
        SpectralState(1.0, -1.0, np.ones(16, dtype=complex))


def test_state_rejects_non_finite_samples():
    psi = np.ones(16, dtype=complex)
    psi[3] = np.nan
    with pytest.raises(ValueError):
        SpectralState(-1.0, 1.0, psi)


def test_grid_layout_excludes_right_endpoint(packet):
    assert packet.n_points == 2048
    assert packet.xi[0] == -40.0
    assert packet.xi[-1] == pytest.approx(40.0 - packet.dxi)
    assert packet.dxi == pytest.approx(80.0 / 2048)


def test_normalization(packet):
    assert packet.norm() == pytest.approx(1.0, abs=1e-13)
    zero = SpectralState(-1.0, 1.0, np.zeros(16, dtype=complex))
    with pytest.raises(ValueError):
        zero.normalized()


def test_gaussian_packet_validation():
    with pytest.raises(ValueError):
        SpectralState.gaussian_packet(width=0.0)


def test_momentum_rep_is_parseval_exact(packet):
    eta, tilde = packet.momentum_rep()
    deta = eta[1] - eta[0]
    assert np.all(np.diff(eta) > 0.0)
    assert float(deta * np.sum(np.abs(tilde) ** 2)) == pytest.approx(
        packet.norm(), rel=1e-13
    )


def test_momentum_rep_centered_on_packet_momentum():
    s = SpectralState.gaussian_packet(momentum=1.5)
    eta, tilde = s.momentum_rep()
    peak = eta[int(np.argmax(np.abs(tilde)))]
    assert peak == pytest.approx(1.5, abs=0.1)


def test_potential_selector():
    with pytest.raises(ValueError):
        SalpeterPotential("cubic", 1.0)
    with pytest.raises(ValueError):
        SalpeterPotential.linear(math.inf)
    xi = np.array([2.0])
    assert SalpeterPotential.linear(0.5).values(xi)[0] == -1.0
    assert SalpeterPotential.quadratic(0.5).values(xi)[0] == 2.0


# -------------------------------------------------------- exact linear step


def test_linear_step_rejects_negative_time(packet):
    with pytest.raises(ValueError):
        linear_exact_step(packet, 0.2, -1.0)


def test_free_step_preserves_momentum_density(packet):
    _, tilde0 = packet.momentum_rep()
    out = linear_exact_step(packet, 0.0, 3.0)
    _, tilde1 = out.momentum_rep()
    assert np.max(np.abs(np.abs(tilde1) - np.abs(tilde0))) < 1e-13
    assert out.norm() == pytest.approx(1.0, abs=1e-12)
    assert out.tau == 3.0


def test_step_is_independent_of_partitioning(packet):
    one = linear_exact_step(packet, 0.4, 1.0)
    two = linear_exact_step(linear_exact_step(packet, 0.4, 0.3), 0.4, 0.7)
    assert np.max(np.abs(one.psi - two.psi)) < 1e-13


def test_momentum_mean_drifts_linearly(packet):
    a, tau = 0.4, 2.5
    out = linear_exact_step(packet, a, tau)
    before = observables(packet).mean_eta
    after = observables(out).mean_eta
    assert after - before == pytest.approx(a * tau, abs=1e-9)


def test_accumulated_phase_matches_time_quadrature():
    # a single resonant plane wave stays a single mode when the drift
    # a*tau is an exact multiple of the mode spacing; its phase must be
    # the time integral of the instantaneous frequency sqrt(1 + eta^2)
    n, xi_min, xi_max = 256, -20.0, 20.0
    dxi = (xi_max - xi_min) / n
    xi = xi_min + dxi * np.arange(n)
    d_eta = 2.0 * math.pi / (xi_max - xi_min)
    eta0 = 12 * d_eta
    s = SpectralState(xi_min, xi_max, np.exp(1j * eta0 * xi))
    a = 1.0
    tau = 5 * d_eta / a  # shift lands exactly on a grid mode
    out = linear_exact_step(s, a, tau)
    expected_phase, err = quad(
        lambda chi: math.sqrt(1.0 + (eta0 + a * tau - a * chi) ** 2), 0.0, tau,
        epsabs=1e-14, epsrel=1e-13,
    )
    assert err < 1e-11
    expected = np.exp(1j * ((eta0 + a * tau) * xi - expected_phase))
    assert np.max(np.abs(out.psi - expected)) < 1e-12


def test_linear_energy_is_conserved(packet):
    pot = SalpeterPotential.linear(0.3)
    e0 = observables(packet, pot).energy
    out = packet
    for _ in range(4):
        out = linear_exact_step(out, 0.3, 0.5)
    e1 = observables(out, pot).energy
    assert e1 == pytest.approx(e0, abs=1e-8)


def test_linear_step_warns_on_band_edge():
    s = SpectralState.gaussian_packet(width=0.4, xi_min=-8.0, xi_max=8.0, n_points=64)
    with pytest.warns(AccuracyWarning, match="band edge"):
        linear_exact_step(s, 1.0, 10.0)


# ------------------------------------------------------ quadratic split step


def test_quadratic_step_rejects_bad_time(packet):
    with pytest.raises(ValueError):
        quadratic_split_step(packet, 0.5, 0.0)
    with pytest.raises(ValueError):
        quadratic_split_step(packet, 0.5, -0.1)


def test_split_step_is_unitary_over_many_steps(packet):
    s = packet
    for _ in range(2000):
        s = quadratic_split_step(s, 0.5, 1e-3)
    assert abs(s.norm() - 1.0) < 1e-11
    assert s.tau == pytest.approx(2.0, rel=1e-12)


def test_split_step_without_potential_is_the_free_phase(packet):
    via_split = quadratic_split_step(packet, 0.0, 0.05)
    via_exact = linear_exact_step(packet, 0.0, 0.05)
    assert np.max(np.abs(via_split.psi - via_exact.psi)) < 1e-13


def _propagate(s, b, dtau, total):
    n = int(round(total / dtau))
    for _ in range(n):
        s = quadratic_split_step(s, b, dtau)
    return s


def test_split_step_is_second_order():
    s0 = SpectralState.gaussian_packet(n_points=1024)
    b, total = 0.5, 0.5
    ref = _propagate(s0, b, total / 800, total).psi
    errs = [
        np.max(np.abs(_propagate(s0, b, dtau, total).psi - ref))
        for dtau in (total / 25, total / 50, total / 100)
    ]
    assert errs[0] / errs[1] == pytest.approx(4.0, abs=0.8)
    assert errs[1] / errs[2] == pytest.approx(4.0, abs=0.8)


def test_split_step_energy_drift_is_small(packet):
    pot = SalpeterPotential.quadratic(0.5)
    e0 = observables(packet, pot).energy
    s = _propagate(packet, 0.5, 1e-3, 2.0)
    assert abs(observables(s, pot).energy - e0) < 1e-6


def test_split_step_warns_when_packet_hits_the_wall():
    s = SpectralState.gaussian_packet(width=3.0, xi_min=-10.0, xi_max=10.0, n_points=128)
    with pytest.warns(AccuracyWarning, match="edge"):
        quadratic_split_step(s, 0.0, 1e-2)


# ------------------------------------------------- Gaussian kernel quadrature


def test_quadrature_validation():
    eta = np.linspace(-1.0, 1.0, 8)
    f = np.exp(-(eta**2))
    with pytest.raises(ValueError):
        weierstrass_transform_quadrature(eta, f, 0.0)
    with pytest.raises(ValueError):
        weierstrass_transform_quadrature(eta, f[:-1], 0.1)
    with pytest.raises(ValueError):
        weierstrass_transform_quadrature(eta[:3], f[:3], 0.1)


def test_quadrature_warns_without_decay():
    eta = np.linspace(-1.0, 1.0, 33)
    with pytest.warns(AccuracyWarning, match="decayed"):
        weierstrass_transform_quadrature(eta, np.ones(33), 0.1)


def test_quadrature_matches_gaussian_closed_form():
    # e^{ia d^2/deta^2} e^{-eta^2/2} = (1+2ia)^{-1/2} e^{-eta^2/(2(1+2ia))}
    eta = np.linspace(-8.0, 8.0, 641)
    f = np.exp(-0.5 * eta**2)
    a = 0.3
    idx = np.arange(0, 641, 4)
    out = weierstrass_transform_quadrature(eta, f, a, out_index=idx)
    denom = 1.0 + 2.0j * a
    exact = np.exp(-0.5 * eta[idx] ** 2 / denom) / np.sqrt(denom)
    assert np.max(np.abs(out[idx] - exact)) < 1e-8


def test_quadrature_agrees_with_spectral_multiplication():
    # multiplying psi by exp(-i b dtau xi^2) acts on the momentum
    # representation as the oscillatory Gaussian kernel with a = b dtau
    s = SpectralState.gaussian_packet(n_points=512)
    b_dtau = 0.04
    eta, tilde = s.momentum_rep()
    shifted = SpectralState(
        s.xi_min, s.xi_max, s.psi * np.exp(-1j * b_dtau * s.xi**2), s.tau
    )
    _, tilde_spectral = shifted.momentum_rep()
    center = np.nonzero(np.abs(eta) < 6.0)[0]
    out = weierstrass_transform_quadrature(eta, tilde, b_dtau, out_index=center)
    assert np.max(np.abs(out[center] - tilde_spectral[center])) < 1e-6


# -------------------------------------------------------------- observables


def test_observables_of_fresh_packet():
    s = SpectralState.gaussian_packet(center=1.2, width=0.8, momentum=0.6)
    obs = observables(s, SalpeterPotential.quadratic(0.5))
    assert obs.norm == pytest.approx(1.0, abs=1e-12)
    assert obs.mean_xi == pytest.approx(1.2, abs=1e-9)
    assert obs.width_xi == pytest.approx(0.8, rel=1e-6)
    assert obs.mean_eta == pytest.approx(0.6, abs=1e-9)
    assert obs.kinetic >= 1.0  # never below the rest energy
    assert obs.potential == pytest.approx(0.5 * (1.2**2 + 0.8**2), rel=1e-5)
    assert obs.energy == obs.kinetic + obs.potential


def test_observables_reject_zero_state():
    s = SpectralState(-1.0, 1.0, np.zeros(16, dtype=complex))
    with pytest.raises(ValueError):
        observables(s)


def test_width_momentum_tradeoff():
    # narrower packets carry broader spectra: sigma_xi * sigma_eta >= 1/2
    for width in (0.5, 1.0, 2.0):
        obs = observables(SpectralState.gaussian_packet(width=width))
        assert obs.width_xi * obs.width_eta == pytest.approx(0.5, rel=1e-4)


def test_observables_container():
    obs = Observables(0.0, 1.0, 0.0, 0.0, 1.0, 0.5, 1.2, 0.3)
    assert obs.energy == pytest.approx(1.5)
