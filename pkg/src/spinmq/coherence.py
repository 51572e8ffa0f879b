"""Integrated and pair-reduced multiple-quantum spectral intensities.

The intensity of order k at time tau is ``Tr[rho(tau) * rhoz_k(tau)]``,
where ``rhoz_k`` is the order-k block of the evolved total-z operator.
The pair-reduced variant applies the same contraction to the 4x4 partial
traces of both factors, with no extra normalization; only orders 0 and
+/-2 can survive the reduction to a pair.

Intensities are stored as real numbers after an explicit imaginary-residue
check: by symmetry they are real, so a residue beyond roundoff signals a
broken basis convention and is raised, not hidden.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .operators import OrderDecomposition, partial_trace_to_pair

#: Residue above this aborts the computation (convention breakage).
IMAG_TOL = 1e-8

#: Orders that survive reduction to a two-spin subsystem.
PAIR_ORDERS = (-2, 0, 2)


def _trace_product(a: np.ndarray, b: np.ndarray) -> complex:
    # Tr[a @ b] without forming the product
    return complex(np.sum(a * b.T))


def _checked_real(value: complex, what: str) -> float:
    if abs(value.imag) > IMAG_TOL:
        raise NumericalError(f"{what} has imaginary residue {value.imag:.3e} (tolerance {IMAG_TOL:.0e})")
    return float(value.real)


@dataclass(frozen=True)
class CoherenceSpectrum:
    """Intensities of the whole cluster, keyed by coherence order."""

    tau: float
    intensities: dict[int, float]

    def intensity(self, k: int) -> float:
        return self.intensities.get(int(k), 0.0)

    def total(self) -> float:
        """Sum over all orders; conserved along the evolution."""
        return float(sum(self.intensities.values()))

    def orders(self) -> list[int]:
        return sorted(self.intensities)


@dataclass(frozen=True)
class PairSpectrum:
    """Reduced intensities of one spin pair, orders -2, 0, +2."""

    pair: tuple[int, int]
    tau: float
    intensities: dict[int, float]

    def intensity(self, k: int) -> float:
        return self.intensities.get(int(k), 0.0)


def integrated_intensities(
    rho_tau: np.ndarray, rhoz_parts: OrderDecomposition, tau: float = 0.0
) -> CoherenceSpectrum:
    """Whole-cluster intensity of every even order present in the blocks.

    Parameters
    ----------
    rho_tau : numpy.ndarray
        Evolved density matrix.
    rhoz_parts : OrderDecomposition
        Order blocks of the evolved total-z operator.
    tau : float
        Time label carried through to the result.
    """
    out: dict[int, float] = {}
    for k in rhoz_parts.orders():
        if k % 2 != 0:
            continue
        value = _trace_product(rho_tau, rhoz_parts.parts[k])
        out[k] = _checked_real(value, f"intensity J[{k}]")
    return CoherenceSpectrum(tau=tau, intensities=out)


def reduced_intensities(
    rho_tau: np.ndarray,
    rhoz_parts: OrderDecomposition,
    m: int,
    n: int,
    tau: float = 0.0,
) -> PairSpectrum:
    """Two-spin intensities from the partial traces of state and order blocks.

    Both factors are reduced to the (m, n) pair before the trace; the
    reduction carries no normalization factor.
    """
    n_spins = rhoz_parts.n_spins
    rho_mn = partial_trace_to_pair(rho_tau, n_spins, m, n)
    out: dict[int, float] = {}
    for k in PAIR_ORDERS:
        zk_mn = partial_trace_to_pair(rhoz_parts.part(k), n_spins, m, n)
        value = _trace_product(rho_mn, zk_mn)
        out[k] = _checked_real(value, f"pair ({m},{n}) intensity J[{k}]")
    return PairSpectrum(pair=(m, n), tau=tau, intensities=out)


def high_order_pair_residual(
    rho_tau: np.ndarray, rhoz_parts: OrderDecomposition, m: int, n: int
) -> float:
    """Largest |reduced intensity| over even orders with |k| > 2.

    Environment sites are summed diagonally by the partial trace, so the
    pair inherits the full coherence order and these must all vanish; the
    residual is the verification handle for that cutoff.
    """
    n_spins = rhoz_parts.n_spins
    rho_mn = partial_trace_to_pair(rho_tau, n_spins, m, n)
    worst = 0.0
    for k in rhoz_parts.orders():
        if k % 2 != 0 or abs(k) <= 2:
            continue
        zk_mn = partial_trace_to_pair(rhoz_parts.parts[k], n_spins, m, n)
        worst = max(worst, abs(_trace_product(rho_mn, zk_mn)))
    return worst
