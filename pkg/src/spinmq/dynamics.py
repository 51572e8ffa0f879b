"""Spectral decomposition of Hermitian generators and unitary evolution.

The generator is diagonalized once; propagators for any time offset are
then assembled by rescaling the eigenphases, which keeps a sweep over a
dense grid of times at one O(d^3) factorization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

HERMITICITY_TOL = 1e-8


@dataclass(frozen=True)
class SpectralForm:
    """Eigendecomposition H = V diag(eigenvalues) V^dagger.

    ``eigenvalues`` is real and ascending; ``eigenvectors`` holds the
    orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def spectral_decompose(h: np.ndarray) -> SpectralForm:
    """Diagonalize a Hermitian matrix.

    The input is symmetrized as (H + H^dagger)/2 before factorization;
    an anti-Hermitian part larger than ``HERMITICITY_TOL`` (max entry)
    is rejected as a caller bug rather than silently averaged away.
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    anti = 0.5 * (h - h.conj().T)
    if np.abs(anti).max() > HERMITICITY_TOL:
        raise ValueError(
            f"matrix is not Hermitian: anti-Hermitian part has max entry {np.abs(anti).max():.3e}"
        )
    sym = 0.5 * (h + h.conj().T)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge: {exc}") from exc
    return SpectralForm(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def propagator(sf: SpectralForm, tau: float) -> np.ndarray:
    """Unitary U(tau) = V diag(exp(-i * lambda * tau)) V^dagger.

    U(0) is returned as the exact identity so that quantities which
    vanish identically at tau = 0 (all nonzero coherence orders) come
    out as exact zeros instead of picking up round-off from V V^dagger.
    """
    if not np.isfinite(tau):
        raise ValueError(f"tau must be finite, got {tau}")
    if tau == 0.0:
        return np.eye(sf.dim, dtype=complex)
    phases = np.exp(-1j * sf.eigenvalues * tau)
    return (sf.eigenvectors * phases) @ sf.eigenvectors.conj().T


def conjugate(u: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Unitary conjugation U A U^dagger.

    Preserves trace, Hermiticity and the eigenvalue spectrum of ``a``.
    """
    if u.shape != a.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"shape mismatch: u {u.shape} vs a {a.shape}")
    return u @ a @ u.conj().T


def require_finite(matrix: np.ndarray, label: str) -> None:
    """Abort with a numerical-failure status on NaN/Inf contamination."""
    if not np.isfinite(matrix).all():
        raise NumericalError(f"{label} contains NaN or Inf entries")
