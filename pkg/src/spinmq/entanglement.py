"""Wootters concurrence and entanglement of formation for a spin pair.

Works on 4x4 density matrices in the fixed pair basis
(up, up), (up, down), (down, up), (down, down).  The complex conjugate
entering the spin-flipped product is taken entrywise in this basis, as
Wootters' construction requires.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

#: sigma_y (x) sigma_y in the fixed pair basis; real.
_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)

#: Concurrence below this is reported as exactly zero, so "entanglement
#: disappears" statements are stable under roundoff.
CONCURRENCE_FLOOR = 1e-12

_EIG_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class PairState:
    """Reduced density matrix of one spin pair with its time label."""

    matrix: np.ndarray
    pair: tuple[int, int]
    tau: float

    def validate(self, psd_tol: float = 1e-10, trace_tol: float = 1e-12) -> None:
        """Check Hermiticity, unit trace and positivity within tolerance."""
        rho = self.matrix
        if rho.shape != (4, 4):
            raise ValueError(f"pair state must be 4x4, got {rho.shape}")
        herm = np.abs(rho - rho.conj().T).max()
        if herm > psd_tol:
            raise NumericalError(f"pair {self.pair} state not Hermitian: residue {herm:.3e}")
        tr = complex(np.trace(rho))
        if abs(tr - 1.0) > trace_tol:
            raise NumericalError(f"pair {self.pair} state trace is {tr}, expected 1")
        low = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()
        if low < -psd_tol:
            raise NumericalError(f"pair {self.pair} state has eigenvalue {low:.3e} below 0")


def _as_matrix(rho: PairState | np.ndarray) -> np.ndarray:
    mat = rho.matrix if isinstance(rho, PairState) else np.asarray(rho, dtype=complex)
    if mat.shape != (4, 4):
        raise ValueError(f"expected a 4x4 pair density matrix, got shape {mat.shape}")
    return mat


def spin_flip_product(rho: PairState | np.ndarray) -> np.ndarray:
    """R = rho (sy x sy) rho* (sy x sy), rho* the entrywise conjugate."""
    mat = _as_matrix(rho)
    return mat @ _FLIP @ mat.conj() @ _FLIP


def concurrence(rho: PairState | np.ndarray) -> float:
    """Wootters concurrence of a two-spin density matrix.

    The square roots of the eigenvalues of the spin-flipped product are
    sorted descending and combined as max(0, l1 - l2 - l3 - l4).  R is
    similar to a positive matrix, so its numerically computed eigenvalues
    carry only roundoff-level imaginary parts and occasional tiny negative
    real parts; the former are checked and dropped, the latter clipped
    before the square root so no NaN can emerge.

    Returns a value in [0, 1]: 0 for separable states, 1 for maximally
    entangled ones.
    """
    product = spin_flip_product(rho)
    try:
        eigenvalues = np.linalg.eigvals(product)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed on the spin-flipped product: {exc}") from exc
    residue = np.abs(eigenvalues.imag).max()
    if residue > _EIG_IMAG_TOL:
        raise NumericalError(
            f"spin-flipped product has complex eigenvalues (residue {residue:.3e})"
        )
    roots = np.sqrt(np.clip(eigenvalues.real, 0.0, None))
    roots[::-1].sort()
    value = max(0.0, roots[0] - roots[1] - roots[2] - roots[3])
    return 0.0 if value < CONCURRENCE_FLOOR else float(value)


def entanglement_of_formation(c: float) -> float:
    """Entanglement of formation as a function of the concurrence.

    Binary entropy of x = (1 + sqrt(1 - C^2)) / 2, with the limit value 0
    at the endpoints.  Strictly increasing in C, mapping 0 -> 0 and 1 -> 1.
    """
    if c < -1e-12 or c > 1.0 + 1e-12:
        raise ValueError(f"concurrence must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    x = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c)))
    return _binary_entropy(x)


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)
