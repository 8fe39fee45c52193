"""Shared helpers: independently typed constants and a CLI runner.

The constant literals here are typed from the CODATA 2018 tables on
purpose, not imported from the package, so a typo in the package values
would show up as a test failure.
"""

import subprocess
import sys

# CODATA 2018, SI units.
C_LIGHT = 2.99792458e8
FINE_STRUCTURE = 7.2973525693e-3
BOHR_RADIUS = 5.29177210903e-11
HBAR_SI = 1.054571817e-34
KB_SI = 1.380649e-23
MUB_SI = 9.2740100783e-24


def run_cli(args, env=None, timeout=120):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    proc = subprocess.run(
        [sys.executable, "-m", "paramagloss.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=timeout,
    )
    return proc.returncode, proc.stdout, proc.stderr
