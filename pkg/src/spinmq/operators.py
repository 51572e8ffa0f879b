"""Spin-1/2 product basis and dense operator construction.

Basis convention, shared by every module in this package: for ``n_spins``
sites labelled ``1..N``, basis index ``i`` is read as an N-bit string with
site 1 in the most significant position.  Bit value 0 means the spin points
up (``m_j = +1/2``), bit value 1 means down (``m_j = -1/2``).  The total
magnetization of basis state ``i`` is ``m(i) = N/2 - popcount(i)``, so index
0 is the fully polarized "all up" state.

Operators are plain complex ``numpy`` matrices of dimension ``2**n_spins``;
the helpers here keep the site-to-bit mapping in one place.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

#: Hard cap on the cluster size.  Dense storage needs 2**(2N) complex
#: entries, so 12 sites (256 MB per operator) is the desk-scale limit.
MAX_SITES = 12

_SPIN_Z = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex)
_SPIN_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_SPIN_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)

_SINGLE_SITE = {"z": _SPIN_Z, "plus": _SPIN_PLUS, "minus": _SPIN_MINUS}


def check_site_count(n_spins: int) -> None:
    """Reject site counts outside [1, MAX_SITES]."""
    if not 1 <= n_spins <= MAX_SITES:
        raise ValueError(f"n_spins must be in [1, {MAX_SITES}], got {n_spins}")


def dimension(n_spins: int) -> int:
    """Hilbert-space dimension 2**n_spins."""
    check_site_count(n_spins)
    return 1 << n_spins


def site_bit(n_spins: int, site: int) -> int:
    """Bit mask selecting ``site`` inside a basis index (site 1 = MSB)."""
    if not 1 <= site <= n_spins:
        raise ValueError(f"site must be in [1, {n_spins}], got {site}")
    return 1 << (n_spins - site)


@lru_cache(maxsize=8)
def _popcounts(n_spins: int) -> np.ndarray:
    idx = np.arange(1 << n_spins, dtype=np.uint32)
    pop = np.zeros(idx.shape, dtype=np.int16)
    for b in range(n_spins):
        pop += ((idx >> b) & 1).astype(np.int16)
    return pop


def magnetizations(n_spins: int) -> np.ndarray:
    """Total magnetization m(i) = N/2 - popcount(i) for every basis index."""
    check_site_count(n_spins)
    return n_spins / 2.0 - _popcounts(n_spins).astype(float)


@lru_cache(maxsize=8)
def order_difference_matrix(n_spins: int) -> np.ndarray:
    """Integer matrix of coherence orders: K[r, s] = m(r) - m(s).

    The order of a matrix element (r, s) in the Zeeman basis is the
    magnetization difference of the two basis states, which reduces to
    popcount(s) - popcount(r).
    """
    check_site_count(n_spins)
    pop = _popcounts(n_spins)
    return (pop[None, :] - pop[:, None]).astype(np.int16)


def single_spin_operator(n_spins: int, site: int, kind: str) -> np.ndarray:
    """Embed a single-site spin operator into the N-site product space.

    Parameters
    ----------
    n_spins : int
        Number of sites N.
    site : int
        Site label in [1, N]; site 1 occupies the most significant bit.
    kind : {"z", "plus", "minus"}
        ``z`` is diag(+1/2, -1/2) in the (up, down) single-site basis,
        ``plus`` raises down -> up, ``minus`` is its adjoint.

    Returns
    -------
    numpy.ndarray
        Dense complex matrix 1 (x) ... (x) op_site (x) ... (x) 1.
    """
    check_site_count(n_spins)
    if not 1 <= site <= n_spins:
        raise ValueError(f"site must be in [1, {n_spins}], got {site}")
    try:
        op = _SINGLE_SITE[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_SINGLE_SITE)}, got {kind!r}") from None
    left = np.eye(1 << (site - 1), dtype=complex)
    right = np.eye(1 << (n_spins - site), dtype=complex)
    return np.kron(np.kron(left, op), right)


def total_z_operator(n_spins: int) -> np.ndarray:
    """Total z angular momentum: diagonal with entry m(i) at basis index i."""
    return np.diag(magnetizations(n_spins)).astype(complex)


def partial_trace_to_pair(matrix: np.ndarray, n_spins: int, m: int, n: int) -> np.ndarray:
    """Trace out every site except ``m`` and ``n``.

    The result is a 4x4 operator on the (m, n) pair in the ordered basis
    (m up, n up), (m up, n down), (m down, n up), (m down, n down).
    The trace of the input is preserved, as is Hermiticity.

    Parameters
    ----------
    matrix : numpy.ndarray
        Square operator of dimension 2**n_spins.
    n_spins : int
        Number of sites.
    m, n : int
        Pair of distinct site labels with 1 <= m < n <= n_spins.
    """
    check_site_count(n_spins)
    d = 1 << n_spins
    if matrix.shape != (d, d):
        raise ValueError(f"matrix has shape {matrix.shape}, expected {(d, d)}")
    if not (1 <= m < n <= n_spins):
        raise ValueError(f"need 1 <= m < n <= {n_spins}, got pair ({m}, {n})")
    tensor = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * n_spins))
    # C-order reshape puts site 1 on the first (most significant) axis, so
    # row axis j-1 and column axis n_spins+j-1 belong to site j.
    row = list(range(n_spins))
    col = [n_spins + j if j in (m - 1, n - 1) else j for j in range(n_spins)]
    out = [m - 1, n - 1, n_spins + m - 1, n_spins + n - 1]
    return np.einsum(tensor, row + col, out).reshape(4, 4)


@dataclass(frozen=True)
class OrderDecomposition:
    """Partition of an operator into fixed-coherence-order blocks.

    ``parts[k]`` holds exactly the matrix elements (r, s) with
    m(r) - m(s) = k and zeros elsewhere; orders whose block vanishes
    identically are omitted.  Summing all parts reconstructs the input
    exactly, entry by entry.
    """

    n_spins: int
    parts: dict[int, np.ndarray] = field(default_factory=dict)

    def orders(self) -> list[int]:
        return sorted(self.parts)

    def part(self, k: int) -> np.ndarray:
        """Block of order k; an all-zero matrix if k carries no weight."""
        d = 1 << self.n_spins
        got = self.parts.get(int(k))
        return got if got is not None else np.zeros((d, d), dtype=complex)

    def total(self) -> np.ndarray:
        d = 1 << self.n_spins
        out = np.zeros((d, d), dtype=complex)
        for block in self.parts.values():
            out += block
        return out


def decompose_by_order(matrix: np.ndarray, n_spins: int) -> OrderDecomposition:
    """Split ``matrix`` by coherence order of its basis-index pairs.

    Grouping is by exact magnetization difference of the basis indices;
    no entry is thresholded away, however small.
    """
    check_site_count(n_spins)
    d = 1 << n_spins
    if matrix.shape != (d, d):
        raise ValueError(f"matrix has shape {matrix.shape}, expected {(d, d)}")
    diff = order_difference_matrix(n_spins)
    present = np.unique(diff[matrix != 0])
    parts = {int(k): np.where(diff == k, matrix, 0.0) for k in present}
    return OrderDecomposition(n_spins=n_spins, parts=parts)
