"""Dense complex-Hermitian eigensolver for small matrices (dim <= 32).

Uses cyclic Jacobi rotations: for the tiny spin Hamiltonians this library
builds, robustness and bit-for-bit determinism matter more than asymptotic
speed.  Repeated calls on the same input return identical results.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DimensionTooLarge, InvalidInputs, NonHermitianInput

MAX_DIM = 32
HERMITIAN_RTOL = 1e-12
# Sweep until the off-diagonal Frobenius norm is below this fraction of the
# input Frobenius norm.
OFF_DIAGONAL_TOL = 1e-14
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in ascending order with matching orthonormal eigenvector
    columns (ties keep Jacobi-converged column order)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def require_hermitian(h, rtol: float = HERMITIAN_RTOL) -> np.ndarray:
    """Return h as a complex array, raising NonHermitianInput if it is not
    square and Hermitian within rtol (relative to the largest entry)."""
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.shape[0] == 0:
        raise InvalidInputs(f"expected a square matrix of dim >= 1, got shape {h.shape}")
    scale = float(np.abs(h).max())
    deviation = float(np.abs(h - h.conj().T).max())
    if deviation > rtol * scale:
        raise NonHermitianInput(
            f"matrix is not Hermitian: max |H - H^dag| = {deviation:.3e} "
            f"exceeds {rtol:.1e} * max|H| = {rtol * scale:.3e}"
        )
    return h


def diagonalize(h) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Raises NonHermitianInput or DimensionTooLarge on bad input.  Output
    satisfies ||V^dag V - I||_max < 1e-10 and
    ||H V - V Lambda||_max < 1e-10 * max|H|.
    """
    h = require_hermitian(h)
    n = h.shape[0]
    if n > MAX_DIM:
        raise DimensionTooLarge(f"dim {n} exceeds the supported maximum {MAX_DIM}")
    # Symmetrize so the iteration sees an exactly Hermitian matrix; the
    # allowed input asymmetry is below everything we care about.
    work = 0.5 * (h + h.conj().T)
    vecs = np.eye(n, dtype=np.complex128)
    off_target = OFF_DIAGONAL_TOL * float(np.linalg.norm(work))
    sweeps = _kernels.jacobi_cycle(work, vecs, off_target, _MAX_SWEEPS)
    if sweeps < 0:  # pragma: no cover - cyclic Jacobi converges for Hermitian input
        raise RuntimeError(f"Jacobi iteration did not converge in {_MAX_SWEEPS} sweeps")
    vals = work.diagonal().real.copy()
    order = np.argsort(vals, kind="stable")
    vals = np.ascontiguousarray(vals[order])
    vecs = np.ascontiguousarray(vecs[:, order])
    vals.setflags(write=False)
    vecs.setflags(write=False)
    return EigenDecomposition(eigenvalues=vals, eigenvectors=vecs)
