"""Command-line front end.

One executable, ``relosc``, with six subcommands:

``trajectory``
    Forward split-map evolution of a single phase-space point,
    optionally with the momentum-equation oracle and the ordinary
    harmonic-oscillator curve for comparison.
``density``
    Grid evolution of a Gaussian phase-space density with snapshot,
    marginal, and current CSVs plus seeded sampled-moment diagnostics.
``current``
    The flux diagnostics alone (``eta,S,I`` files).
``period``
    Period table for one amplitude: harmonic, series-expanded,
    elliptic-exact, and the measured value from the momentum equation.
``salpeter``
    Spectral wave-packet propagation under a linear (exact step) or
    quadratic (symmetric split) potential.
``convergence``
    Step-size scan with an exact or step-halving reference and a fitted
    convergence order.

Configuration values may come from flags or from a plain ``key =
value`` file named with ``--config``; flags win over the file, the file
wins over defaults, and unknown file keys are rejected by name.  Every
output CSV records the complete effective configuration in ``# cfg.key
= value`` header lines, so a run can be reproduced from any of its
files.  For a fixed configuration the CSV bodies are byte-identical
across runs (fixed float format, fixed iteration order, seeded
sampling).

Exit codes: 0 success, 1 runtime failure (partially written output is
removed), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import __version__
from .csvio import format_value, write_csv
from .density import (
    Grid2D,
    GaussianDensity,
    density_current,
    evolve_density,
    grid_mass,
    marginals,
    sample_gaussian,
)
from .dynamics import (
    HamiltonianKind,
    KIND_NAMES,
    PhaseState,
    Scales,
    exact_free,
    exact_linear_scalar,
)
from .elliptic import (
    integrate_momentum_ode,
    measure_period,
    momentum_ode_solution,
    rel_period,
)
from .salpeter import (
    SalpeterPotential,
    SpectralState,
    linear_exact_step,
    observables,
    quadratic_split_step,
)
from .split import SplitStepper, evolve, step_arrays

__all__ = ["RunConfig", "parse_config", "run", "main"]

_SQRT2 = math.sqrt(2.0)


# --------------------------------------------------------------------------
# field schema


def _to_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("must be finite")
    return value


def _to_int(text: str) -> int:
    return int(text, 10)


def _to_int_list(text: str) -> tuple[int, ...]:
    items = [p.strip() for p in text.split(",") if p.strip()]
    if not items:
        raise ValueError("empty list")
    return tuple(int(p, 10) for p in items)


def _to_float_list(text: str) -> tuple[float, ...]:
    items = [p.strip() for p in text.split(",") if p.strip()]
    if not items:
        raise ValueError("empty list")
    return tuple(_to_float(p) for p in items)


def _to_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _to_str(text: str) -> str:
    return text


def _choice(*options: str) -> Callable[[str], str]:
    def convert(text: str) -> str:
        if text not in options:
            raise ValueError(f"must be one of {', '.join(options)}")
        return text

    return convert


@dataclass(frozen=True)
class _Field:
    name: str
    convert: Callable[[str], object]
    default: object
    help: str
    is_flag: bool = False


_KIND = _Field("hamiltonian", _choice(*KIND_NAMES), "quadratic-scalar", "dynamical model")
_OMEGA = _Field("omega", _to_float, None, "angular frequency scale (quadratic models)")
_ACCEL = _Field("accel", _to_float, None, "acceleration scale (linear models)")
_OUTDIR = _Field("outdir", _to_str, ".", "output directory (created if missing)")
_SEED = _Field("seed", _to_int, 20240817, "seed for sampled diagnostics")

_SCHEMA: dict[str, tuple[_Field, ...]] = {
    "trajectory": (
        _KIND,
        _OMEGA,
        _ACCEL,
        _Field("eta0", _to_float, 0.0, "initial dimensionless position"),
        _Field("pi0", _to_float, 0.9, "initial dimensionless momentum"),
        _Field("dlambda", _to_float, 5e-3, "dimensionless time step"),
        _Field("steps", _to_int, 2400, "number of steps"),
        _Field(
            "with-references",
            _to_bool,
            False,
            "also write momentum-equation and harmonic reference curves "
            "(quadratic-scalar only)",
            is_flag=True,
        ),
        _OUTDIR,
    ),
    "density": (
        _KIND,
        _OMEGA,
        _ACCEL,
        _Field("center-eta", _to_float, 0.0, "initial Gaussian center, position"),
        _Field("center-pi", _to_float, 0.0, "initial Gaussian center, momentum"),
        _Field("sigma-eta", _to_float, 0.5, "initial Gaussian width, position"),
        _Field("sigma-pi", _to_float, 0.5, "initial Gaussian width, momentum"),
        _Field("corr", _to_float, 0.0, "initial Gaussian correlation in (-1, 1)"),
        _Field("grid-half-width", _to_float, 8.0, "square grid half extent"),
        _Field("grid-points", _to_int, 201, "nodes per grid axis"),
        _Field("dlambda", _to_float, 5e-3, "dimensionless time step"),
        _Field("snapshots", _to_int_list, (0, 1000, 1400, 2400), "step counts to record"),
        _Field("samples", _to_int, 20000, "particle count for sampled diagnostics"),
        _SEED,
        _OUTDIR,
    ),
    "current": (
        _KIND,
        _OMEGA,
        _ACCEL,
        _Field("center-eta", _to_float, 0.0, "initial Gaussian center, position"),
        _Field("center-pi", _to_float, 0.0, "initial Gaussian center, momentum"),
        _Field("sigma-eta", _to_float, 0.5, "initial Gaussian width, position"),
        _Field("sigma-pi", _to_float, 0.5, "initial Gaussian width, momentum"),
        _Field("corr", _to_float, 0.0, "initial Gaussian correlation in (-1, 1)"),
        _Field("grid-half-width", _to_float, 8.0, "square grid half extent"),
        _Field("grid-points", _to_int, 201, "nodes per grid axis"),
        _Field("dlambda", _to_float, 5e-3, "dimensionless time step"),
        _Field("snapshots", _to_int_list, (1000, 1400, 2400), "step counts to record"),
        _OUTDIR,
    ),
    "period": (
        _Field("pi0", _to_float, 0.9, "momentum amplitude in (0, sqrt(2))"),
        _Field("omega", _to_float, 1.0, "angular frequency scale"),
        _Field("tol", _to_float, 1e-10, "momentum-equation integrator tolerance"),
        _Field("periods", _to_int, 8, "oscillation count to integrate"),
        _OUTDIR,
    ),
    "salpeter": (
        _Field("potential", _choice("linear", "quadratic"), "quadratic", "potential form"),
        _Field("coefficient", _to_float, 0.5, "potential coefficient (A or B)"),
        _Field("dtau", _to_float, 1e-3, "time step"),
        _Field("steps", _to_int, 2000, "number of steps"),
        _Field("snapshots", _to_int_list, (0, 1000, 2000), "step counts to record"),
        _Field("xi-half-width", _to_float, 40.0, "position grid half extent"),
        _Field("n-points", _to_int, 2048, "grid size (power of two, >= 16)"),
        _Field("center", _to_float, 0.0, "initial packet center"),
        _Field("width", _to_float, 1.0, "initial packet width"),
        _Field("momentum", _to_float, 0.0, "initial packet momentum"),
        _OUTDIR,
    ),
    "convergence": (
        _Field("hamiltonian", _choice(*KIND_NAMES), "linear-scalar", "dynamical model"),
        _OMEGA,
        _ACCEL,
        _Field("eta0", _to_float, 0.0, "initial dimensionless position"),
        _Field("pi0", _to_float, 0.9, "initial dimensionless momentum"),
        _Field("lambda-end", _to_float, 2.0, "final dimensionless time"),
        _Field(
            "dlambda-list",
            _to_float_list,
            (1e-2, 5e-3, 2.5e-3),
            "comma-separated step sizes (each must divide lambda-end)",
        ),
        _OUTDIR,
    ),
}


@dataclass(frozen=True)
class RunConfig:
    """A validated subcommand invocation: every schema field resolved."""

    subcommand: str
    values: dict[str, object]

    def __getitem__(self, key: str) -> object:
        return self.values[key]

    def config_lines(self) -> list[str]:
        """Serialize as config-file text; parsing it back round-trips."""
        lines = []
        for field in _SCHEMA[self.subcommand]:
            value = self.values[field.name]
            if value is None:
                continue
            if isinstance(value, tuple):
                rendered = ",".join(format_value(v) for v in value)
            else:
                rendered = format_value(value)
            lines.append(f"{field.name} = {rendered}")
        return lines


def _read_config_file(path: str, fields: tuple[_Field, ...], fail) -> dict[str, str]:
    known = {f.name for f in fields}
    raw: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        fail(f"cannot read config file: {exc}")
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        key = key.strip()
        if not sep:
            fail(f"{path}:{lineno}: expected 'key = value', got {stripped!r}")
        if key not in known:
            fail(f"{path}:{lineno}: unknown config key {key!r}")
        raw[key] = value.strip()
    return raw


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relosc",
        description="Relativistic-oscillator phase-space and wave-packet runs.",
    )
    parser.add_argument("--version", action="version", version=f"relosc {__version__}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name, fields in _SCHEMA.items():
        sub = subparsers.add_parser(name, help=f"{name} run")
        sub.add_argument("--config", default=None, help="key = value config file")
        for field in fields:
            if field.is_flag:
                sub.add_argument(
                    f"--{field.name}",
                    dest=field.name,
                    action="store_const",
                    const="true",
                    default=None,
                    help=field.help,
                )
            else:
                sub.add_argument(
                    f"--{field.name}",
                    dest=field.name,
                    default=None,
                    metavar="V",
                    help=f"{field.help} (default {field.default})",
                )
    return parser


def _build_kind(name: str, omega, accel, fail) -> HamiltonianKind:
    """Resolve scale flags against the model family, rejecting mismatches."""
    if name == "free":
        if omega is not None or accel is not None:
            fail("the free model takes neither --omega nor --accel")
        return HamiltonianKind.free()
    if name in ("linear-scalar", "linear-mass"):
        if omega is not None:
            fail(f"{name} is parametrized by --accel; --omega does not apply")
        scales = Scales(accel=1.0 if accel is None else accel)
        if name == "linear-scalar":
            return HamiltonianKind.linear_scalar(scales)
        return HamiltonianKind.linear_mass(scales)
    if accel is not None:
        fail(f"{name} is parametrized by --omega; --accel does not apply")
    scales = Scales(omega=1.0 if omega is None else omega)
    if name == "quadratic-scalar":
        return HamiltonianKind.quadratic_scalar(scales)
    return HamiltonianKind.quadratic_mass(scales)


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse flags (and an optional config file) into a validated RunConfig.

    Raises SystemExit(2) with a usage message on any invalid input.
    """
    parser = _build_parser()
    namespace = parser.parse_args(argv)
    sub = namespace.subcommand
    fields = _SCHEMA[sub]
    fail = parser.error  # prints usage and exits with status 2
    file_values = (
        _read_config_file(namespace.config, fields, fail) if namespace.config else {}
    )
    values: dict[str, object] = {}
    for field in fields:
        raw = getattr(namespace, field.name)
        if raw is None:
            raw = file_values.get(field.name)
        if raw is None:
            values[field.name] = field.default
            continue
        try:
            values[field.name] = field.convert(raw)
        except ValueError as exc:
            fail(f"--{field.name}: {exc}")
    config = RunConfig(sub, values)
    _validate(config, fail)
    return config


def _validate(config: RunConfig, fail) -> None:
    v = config.values
    sub = config.subcommand

    def positive(key: str) -> None:
        if not (isinstance(v[key], (int, float)) and v[key] > 0):
            fail(f"--{key} must be positive, got {v[key]}")

    if sub in ("trajectory", "density", "current", "convergence"):
        # raises SystemExit(2) on model/scale mismatch
        _build_kind(v["hamiltonian"], v["omega"], v["accel"], fail)
    if sub == "trajectory":
        positive("dlambda")
        if v["steps"] < 0:
            fail("--steps must be >= 0")
        if v["with-references"]:
            if v["hamiltonian"] != "quadratic-scalar":
                fail("--with-references is defined for the quadratic-scalar model")
            if v["steps"] < 1:
                fail("--with-references needs at least one step")
    if sub in ("density", "current"):
        positive("dlambda")
        positive("sigma-eta")
        positive("sigma-pi")
        positive("grid-half-width")
        if not -1.0 < v["corr"] < 1.0:
            fail(f"--corr must lie in (-1, 1), got {v['corr']}")
        if v["grid-points"] < 2:
            fail("--grid-points must be >= 2")
        if not v["snapshots"] or min(v["snapshots"]) < 0:
            fail("--snapshots must be non-negative step counts")
        if sub == "density" and v["samples"] < 2:
            fail("--samples must be >= 2")
    if sub == "period":
        positive("omega")
        positive("tol")
        positive("periods")
        if not 0.0 < v["pi0"] < _SQRT2:
            fail(f"--pi0 must lie in (0, sqrt(2)), got {v['pi0']}")
    if sub == "salpeter":
        positive("dtau")
        positive("width")
        positive("xi-half-width")
        n = v["n-points"]
        if n < 16 or n & (n - 1):
            fail(f"--n-points must be a power of two >= 16, got {n}")
        if v["steps"] < 0:
            fail("--steps must be >= 0")
        if not v["snapshots"] or min(v["snapshots"]) < 0 or max(v["snapshots"]) > v["steps"]:
            fail("--snapshots must lie within [0, steps]")
    if sub == "convergence":
        positive("lambda-end")
        if len(v["dlambda-list"]) < 2:
            fail("--dlambda-list needs at least two step sizes to fit an order")
        for d in v["dlambda-list"]:
            if d <= 0:
                fail(f"step sizes must be positive, got {d}")
            n = round(v["lambda-end"] / d)
            if n < 1 or abs(n * d - v["lambda-end"]) > 1e-9 * v["lambda-end"]:
                fail(f"step size {d} does not divide lambda-end {v['lambda-end']}")


# --------------------------------------------------------------------------
# execution


class _Emitter:
    """Tracks written files so a failed run can remove them all."""

    def __init__(self, outdir: Path, base_metadata: dict[str, object]):
        self.outdir = outdir
        self.base = base_metadata
        self.written: list[Path] = []

    def emit(self, name: str, extra: dict[str, object], columns, rows) -> Path:
        metadata = dict(self.base)
        metadata.update(extra)
        path = write_csv(self.outdir / name, metadata, columns, rows)
        self.written.append(path)
        return path

    def discard_all(self) -> None:
        for path in self.written:
            path.unlink(missing_ok=True)


def _base_metadata(config: RunConfig) -> dict[str, object]:
    meta: dict[str, object] = {
        "generator": f"relosc {__version__}",
        "subcommand": config.subcommand,
    }
    for field in _SCHEMA[config.subcommand]:
        value = config.values[field.name]
        # outdir changes where files land, never what they contain; leaving
        # it out keeps equal configurations byte-identical across directories
        if value is None or field.name == "outdir":
            continue
        if isinstance(value, tuple):
            value = ",".join(format_value(x) for x in value)
        meta[f"cfg.{field.name}"] = value
    return meta


def _run_trajectory(config: RunConfig, em: _Emitter) -> None:
    v = config.values
    kind = _build_kind(v["hamiltonian"], v["omega"], v["accel"], _runtime_fail)
    stepper = SplitStepper(kind, v["dlambda"])
    traj = evolve(stepper, PhaseState(v["eta0"], v["pi0"]), v["steps"])
    columns = ("lambda", "eta", "pi", "energy")
    em.emit(
        "trajectory.csv",
        {},
        columns,
        zip(traj.lambdas, traj.etas, traj.pis, traj.energies),
    )
    if not v["with-references"]:
        return
    lams = traj.lambdas
    dense = momentum_ode_solution(v["pi0"], -v["eta0"], float(lams[-1]), tol=1e-12)
    pis, dpis = dense(lams)
    etas = -dpis
    energies = np.sqrt(1.0 + pis * pis) + 0.5 * etas * etas
    em.emit(
        "trajectory_oracle.csv",
        {"reference": "momentum-equation"},
        columns,
        zip(lams, etas, pis, energies),
    )
    eta_h = v["eta0"] * np.cos(lams) + v["pi0"] * np.sin(lams)
    pi_h = v["pi0"] * np.cos(lams) - v["eta0"] * np.sin(lams)
    energy_h = 1.0 + 0.5 * (eta_h * eta_h + pi_h * pi_h)
    em.emit(
        "trajectory_harmonic.csv",
        {"reference": "harmonic-oscillator"},
        columns,
        zip(lams, eta_h, pi_h, energy_h),
    )


def _sample_moments(pi_samples: np.ndarray) -> dict[str, object]:
    mean = float(np.mean(pi_samples))
    centered = pi_samples - mean
    var = float(np.mean(centered**2))
    skew = float(np.mean(centered**3) / var**1.5)
    kurt = float(np.mean(centered**4) / var**2 - 3.0)
    return {
        "sample-mean-pi": mean,
        "sample-var-pi": var,
        "sample-skew-pi": skew,
        "sample-kurtosis-pi": kurt,
    }


def _run_density(config: RunConfig, em: _Emitter, fields_and_marginals: bool) -> None:
    v = config.values
    kind = _build_kind(v["hamiltonian"], v["omega"], v["accel"], _runtime_fail)
    rho0 = GaussianDensity(
        center_eta=v["center-eta"],
        center_pi=v["center-pi"],
        sigma_eta=v["sigma-eta"],
        sigma_pi=v["sigma-pi"],
        corr=v["corr"],
    )
    grid = Grid2D.square(v["grid-half-width"], v["grid-points"])
    snapshots = sorted(set(v["snapshots"]))
    fields = evolve_density(rho0, kind, grid, v["dlambda"], snapshots)

    moments: dict[int, dict[str, object]] = {}
    if fields_and_marginals:
        rng = np.random.default_rng(v["seed"])
        eta_s, pi_s = sample_gaussian(rho0, v["samples"], rng)
        previous = 0
        for n in snapshots:
            eta_s, pi_s = _push(kind, eta_s, pi_s, v["dlambda"], n - previous)
            previous = n
            moments[n] = _sample_moments(pi_s)

    for field in fields:
        n = field.n_steps
        tag = f"n{n:05d}"
        snap_meta: dict[str, object] = {
            "n": n,
            "lambda": field.lam,
            "mass": grid_mass(field),
            "boundary-escape": field.boundary_flag,
        }
        snap_meta.update(moments.get(n, {}))
        if fields_and_marginals:
            eta = grid.eta
            pi = grid.pi
            rows = (
                (eta[i], pi[j], field.values[i, j])
                for i in range(len(eta))
                for j in range(len(pi))
            )
            em.emit(f"snapshot_{tag}.csv", snap_meta, ("eta", "pi", "rho"), rows)
            s, r = marginals(field)
            em.emit(
                f"marginal_eta_{tag}.csv",
                {"n": n, "lambda": field.lam, "axis": "eta"},
                ("coord", "value"),
                zip(eta, s),
            )
            em.emit(
                f"marginal_pi_{tag}.csv",
                {"n": n, "lambda": field.lam, "axis": "pi"},
                ("coord", "value"),
                zip(pi, r),
            )
        pair = density_current(field, kind)
        em.emit(
            f"current_{tag}.csv",
            {"n": n, "lambda": field.lam},
            ("eta", "S", "I"),
            zip(pair.eta, pair.density, pair.current),
        )


def _push(kind, eta, pi, dlambda, n_steps):
    for _ in range(n_steps):
        eta, pi = step_arrays(kind, eta, pi, dlambda, "forward")
    return eta, pi


def _run_period(config: RunConfig, em: _Emitter) -> None:
    v = config.values
    pi0, omega = v["pi0"], v["omega"]
    t_elliptic, t_expanded = rel_period(pi0, omega)
    lam_period_guess = omega * t_elliptic
    traj = integrate_momentum_ode(
        pi0, 0.0, lambda_max=(v["periods"] + 0.6) * lam_period_guess, tol=v["tol"]
    )
    lam_period, lam_unc = measure_period(traj)
    rows = [
        ("harmonic", 2.0 * math.pi / omega),
        ("expanded", t_expanded),
        ("elliptic", t_elliptic),
        ("measured-ode", lam_period / omega),
    ]
    em.emit(
        "period.csv",
        {
            "measured-uncertainty": lam_unc / omega,
            "energy-drift": float(
                np.max(np.abs(traj.energies - traj.energies[0]))
            ),
        },
        ("label", "period"),
        rows,
    )


def _run_salpeter(config: RunConfig, em: _Emitter) -> None:
    v = config.values
    half = v["xi-half-width"]
    state0 = SpectralState.gaussian_packet(
        center=v["center"],
        width=v["width"],
        momentum=v["momentum"],
        xi_min=-half,
        xi_max=half,
        n_points=v["n-points"],
    )
    potential = (
        SalpeterPotential.linear(v["coefficient"])
        if v["potential"] == "linear"
        else SalpeterPotential.quadratic(v["coefficient"])
    )
    snapshots = sorted(set(v["snapshots"]))
    captured: list[SpectralState] = []
    if potential.kind == "linear":
        # the linear step is exact in time: jump straight to each snapshot
        for n in snapshots:
            captured.append(
                linear_exact_step(state0, potential.coefficient, n * v["dtau"])
                if n
                else state0
            )
    else:
        state = state0
        previous = 0
        for n in snapshots:
            for _ in range(n - previous):
                state = quadratic_split_step(state, potential.coefficient, v["dtau"])
            previous = n
            captured.append(state)

    obs_rows = []
    for n, state in zip(snapshots, captured):
        obs = observables(state, potential)
        obs_rows.append(
            (obs.tau, obs.norm, obs.mean_xi, obs.mean_eta, obs.width_xi, obs.energy)
        )
        em.emit(
            f"psi_n{n:05d}.csv",
            {"n": n, "tau": state.tau},
            ("xi", "re_psi", "im_psi", "abs2"),
            zip(
                state.xi,
                state.psi.real,
                state.psi.imag,
                np.abs(state.psi) ** 2,
            ),
        )
    em.emit(
        "observables.csv",
        {},
        ("tau", "norm", "mean_xi", "mean_eta", "width_xi", "energy"),
        obs_rows,
    )


def _run_convergence(config: RunConfig, em: _Emitter) -> None:
    v = config.values
    kind = _build_kind(v["hamiltonian"], v["omega"], v["accel"], _runtime_fail)
    eta0, pi0, lam_end = v["eta0"], v["pi0"], v["lambda-end"]

    def endpoint(dlambda: float) -> tuple[float, float]:
        stepper = SplitStepper(kind, dlambda)
        eta, pi = eta0, pi0
        for _ in range(round(lam_end / dlambda)):
            eta, pi = stepper.step_arrays(eta, pi)
        return float(eta), float(pi)

    if kind.name == "free":
        reference = "exact"
        ref_eta, ref_pi = exact_free(eta0, pi0, lam_end)
    elif kind.name == "linear-scalar":
        reference = "exact"
        ref_eta, ref_pi = exact_linear_scalar(eta0, pi0, lam_end)
    else:
        reference = "step-halving"

    rows = []
    for d in sorted(v["dlambda-list"], reverse=True):
        eta, pi = endpoint(d)
        if reference == "exact":
            err = math.hypot(eta - ref_eta, pi - ref_pi)
        else:
            eta_h, pi_h = endpoint(0.5 * d)
            err = math.hypot(eta - eta_h, pi - pi_h)
        rows.append((d, err))
    steps = np.log([r[0] for r in rows])
    errors = np.log([max(r[1], 1e-300) for r in rows])
    order = float(np.polyfit(steps, errors, 1)[0])
    em.emit(
        "convergence.csv",
        {"reference": reference, "fitted-order": order},
        ("dlambda", "error"),
        rows,
    )


class _RuntimeFailure(RuntimeError):
    pass


def _runtime_fail(message: str):
    raise _RuntimeFailure(message)


_RUNNERS = {
    "trajectory": lambda c, em: _run_trajectory(c, em),
    "density": lambda c, em: _run_density(c, em, fields_and_marginals=True),
    "current": lambda c, em: _run_density(c, em, fields_and_marginals=False),
    "period": lambda c, em: _run_period(c, em),
    "salpeter": lambda c, em: _run_salpeter(c, em),
    "convergence": lambda c, em: _run_convergence(c, em),
}


def run(config: RunConfig) -> int:
    """Execute a validated configuration; 0 on success, 1 on failure.

    On failure every file written by this invocation is removed, so an
    output directory never holds a half-finished run.
    """
    outdir = Path(str(config.values["outdir"]))
    em = _Emitter(outdir, _base_metadata(config))
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        _RUNNERS[config.subcommand](config, em)
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        em.discard_all()
        print(f"relosc {config.subcommand}: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
