"""Spectral decomposition and unitary evolution."""

import numpy as np
import pytest

import oracles
from spinmq.dynamics import (
    SpectralForm,
    conjugate,
    propagator,
    require_finite,
    spectral_decompose,
)
from spinmq.errors import NumericalError
from spinmq.model import ThermalConfig, build_couplings, double_quantum_hamiltonian, thermal_state
from spinmq.operators import total_z_operator


def test_diagonal_input():
    sf = spectral_decompose(np.diag([3.0, -1.0]).astype(complex))
    assert np.allclose(sf.eigenvalues, [-1.0, 3.0])


def test_zero_matrix():
    sf = spectral_decompose(np.zeros((4, 4), dtype=complex))
    assert np.all(sf.eigenvalues == 0)


def test_two_spin_spectrum():
    h = double_quantum_hamiltonian(build_couplings("chain", 2, 1.0))
    sf = spectral_decompose(h)
    assert np.allclose(np.sort(sf.eigenvalues), [-0.25, 0.0, 0.0, 0.25], atol=1e-14)


def test_reconstruction_and_orthonormality():
    h = double_quantum_hamiltonian(build_couplings("ring", 4, 1.0))
    sf = spectral_decompose(h)
    v = sf.eigenvectors
    rebuilt = (v * sf.eigenvalues) @ v.conj().T
    denom = max(np.linalg.norm(h), 1.0)
    assert np.linalg.norm(rebuilt - h) / denom < 1e-10
    assert np.abs(v.conj().T @ v - np.eye(v.shape[0])).max() < 1e-10


def test_rejects_non_hermitian_input():
    a = np.zeros((2, 2), dtype=complex)
    a[0, 1] = 1e-6j
    with pytest.raises(ValueError):
        spectral_decompose(a)


def test_rejects_non_square():
    with pytest.raises(ValueError):
        spectral_decompose(np.zeros((2, 3), dtype=complex))


def test_propagator_at_zero_is_identity():
    sf = spectral_decompose(double_quantum_hamiltonian(build_couplings("chain", 3, 1.0)))
    assert np.abs(propagator(sf, 0.0) - np.eye(8)).max() < 1e-12


def test_propagator_group_property_and_unitarity():
    sf = spectral_decompose(double_quantum_hamiltonian(build_couplings("chain", 3, 1.0)))
    u = propagator(sf, 1.7)
    uinv = propagator(sf, -1.7)
    assert np.abs(u @ uinv - np.eye(8)).max() < 1e-10
    assert np.abs(u @ u.conj().T - np.eye(8)).max() < 1e-10


def test_propagator_matches_series_exponential():
    h = double_quantum_hamiltonian(build_couplings("chain", 4, 1.0))
    sf = spectral_decompose(h)
    rng = np.random.default_rng(5)
    for tau in rng.uniform(0.0, 5.0, size=5):
        ours = propagator(sf, float(tau))
        ref = oracles.series_expm(-1j * float(tau) * h)
        assert np.abs(ours - ref).max() < 1e-8


def test_propagator_rejects_non_finite_tau():
    sf = spectral_decompose(np.zeros((2, 2), dtype=complex))
    with pytest.raises(ValueError):
        propagator(sf, float("nan"))


def test_conjugate_identity_and_trace():
    rng = np.random.default_rng(2)
    a = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    assert np.array_equal(conjugate(np.eye(8, dtype=complex), a), a)
    sf = spectral_decompose(double_quantum_hamiltonian(build_couplings("chain", 3, 1.0)))
    u = propagator(sf, 0.9)
    moved = conjugate(u, a)
    assert abs(np.trace(moved) - np.trace(a)) < 1e-10
    assert abs(np.trace(moved @ moved) - np.trace(a @ a)) < 1e-9


def test_conjugate_shape_mismatch():
    with pytest.raises(ValueError):
        conjugate(np.eye(4, dtype=complex), np.eye(2, dtype=complex))


def test_evolved_state_invariants():
    n = 4
    sf = spectral_decompose(double_quantum_hamiltonian(build_couplings("chain", n, 1.0)))
    rho0 = thermal_state(n, ThermalConfig("norm_target", 10.0))
    iz = total_z_operator(n)
    iz_spec = np.linalg.eigvalsh(iz)
    for tau in (0.3, 1.1, 4.0):
        u = propagator(sf, tau)
        rho = conjugate(u, rho0)
        rhoz = conjugate(u, iz)
        assert np.abs(rho - rho.conj().T).max() < 1e-12
        assert abs(np.trace(rho).real - 1.0) < 1e-12
        assert np.linalg.eigvalsh(rho).min() >= -1e-10
        assert abs(np.trace(rhoz)) < 1e-10
        assert np.abs(np.linalg.eigvalsh(rhoz) - iz_spec).max() < 1e-10


def test_require_finite():
    require_finite(np.eye(2, dtype=complex), "ok")
    bad = np.array([[np.nan, 0.0], [0.0, 1.0]], dtype=complex)
    with pytest.raises(NumericalError, match="rho_test"):
        require_finite(bad, "rho_test")


def test_spectral_form_dim():
    sf = SpectralForm(np.zeros(4), np.eye(4, dtype=complex))
    assert sf.dim == 4
