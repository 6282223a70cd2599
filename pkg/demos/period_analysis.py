"""How the oscillation period stretches with amplitude.

Four estimates of the period of the relativistic oscillation in a
quadratic scalar potential, compared across amplitudes:

* the harmonic value 2 pi / Omega (amplitude-independent),
* the closed-form elliptic-integral period of the cubic truncation,
* its small-amplitude series expansion,
* a direct measurement from the adaptively integrated momentum equation.

The script ends with the practical question the period curve answers:
at what kinetic energy does the anharmonic correction reach one
percent, and ten percent, of the period?

Run:  python3 demos/period_analysis.py
"""

import math

import numpy as np

from relosc.elliptic import (
    integrate_momentum_ode,
    measure_period,
    period_correction_curve,
    rel_period,
)


def main():
    print("period estimates versus momentum amplitude (units of 2 pi / Omega)")
    print(f"{'Pi0':>6}{'elliptic':>12}{'expanded':>12}{'measured':>12}{'meas. unc.':>12}")
    for pi0 in (0.05, 0.2, 0.4, 0.6, 0.9, 1.2):
        t_ell, t_exp = rel_period(pi0)
        traj = integrate_momentum_ode(pi0, lambda_max=12.0 * t_ell)
        measured, unc = measure_period(traj)
        scale = 2.0 * math.pi
        print(
            f"{pi0:>6.2f}{t_ell / scale:>12.6f}{t_exp / scale:>12.6f}"
            f"{measured / scale:>12.6f}{unc / scale:>12.1e}"
        )
    print()
    print("the elliptic and measured values agree to the truncation error")
    print("O(Pi0^5); the series expansion falls away first.")

    pi0s = np.linspace(0.01, 1.3, 400)
    kin, corr = period_correction_curve(pi0s)
    for target in (0.01, 0.10):
        idx = int(np.searchsorted(corr, target))
        print(
            f"a {target * 100:.0f}% period stretch needs Pi0 ~ {pi0s[idx]:.3f}, "
            f"i.e. kinetic energy ~ {kin[idx] * 100:.1f}% of the rest energy"
        )
    print("for an electron that ten-percent threshold sits near 0.1 MeV —")
    print("well inside the reach of a bench-top accelerating structure.")


if __name__ == "__main__":
    main()
