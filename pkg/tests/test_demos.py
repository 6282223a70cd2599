"""Smoke-run every narrative demo script."""

import subprocess
import sys
from pathlib import Path

import pytest

DEMO_DIR = Path(__file__).resolve().parent.parent / "demos"

EXPECTED_PHRASE = {
    "phase_space_portrait.py": "fan of amplitudes",
    "hamiltonian_comparison.py": "quadratic potential profile",
    "period_analysis.py": "period stretch",
    "density_current_study.py": "continuity residual",
    "wave_packet_spreading.py": "kernel quadrature",
}


def test_demo_listing_is_complete():
    found = sorted(p.name for p in DEMO_DIR.glob("*.py"))
    assert found == sorted(EXPECTED_PHRASE)


@pytest.mark.parametrize("name", sorted(EXPECTED_PHRASE))
def test_demo_runs_clean(name):
    proc = subprocess.run(
        [sys.executable, str(DEMO_DIR / name)],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stderr == ""
    assert EXPECTED_PHRASE[name] in proc.stdout
