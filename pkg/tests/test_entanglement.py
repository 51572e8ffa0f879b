"""Concurrence and entanglement of formation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from spinmq.entanglement import (
    PairState,
    concurrence,
    entanglement_of_formation,
    spin_flip_product,
)
from spinmq.errors import NumericalError


def pair_state(matrix, tau=0.0):
    return PairState(matrix=np.asarray(matrix, dtype=complex), pair=(1, 2), tau=tau)


def bell_projector():
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / np.sqrt(2)
    return np.outer(psi, psi.conj())


def werner(p):
    psi = np.zeros(4, dtype=complex)
    psi[1] = 1 / np.sqrt(2)
    psi[2] = -1 / np.sqrt(2)
    return p * np.outer(psi, psi.conj()) + (1 - p) * np.eye(4) / 4


def random_density(rng):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=2):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_flip_product_of_maximally_mixed():
    r = spin_flip_product(np.eye(4, dtype=complex) / 4)
    assert np.abs(r - np.eye(4) / 16).max() < 1e-15


def test_flip_product_of_polarized_state_vanishes():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0
    assert np.abs(spin_flip_product(rho)).max() == 0


def test_flip_product_fixes_bell_projector():
    rho = bell_projector()
    assert np.abs(spin_flip_product(rho) - rho).max() < 1e-14


def test_bell_state_is_maximally_entangled():
    c = concurrence(pair_state(bell_projector()))
    assert abs(c - 1.0) <= 1e-12
    assert abs(entanglement_of_formation(c) - 1.0) <= 1e-12


def test_diagonal_states_are_separable():
    rng = np.random.default_rng(0)
    for _ in range(10):
        w = rng.random(4)
        assert concurrence(pair_state(np.diag(w / w.sum()).astype(complex))) == 0.0


def test_maximally_mixed_is_separable():
    assert concurrence(pair_state(np.eye(4, dtype=complex) / 4)) == 0.0


def test_werner_crossing():
    for p in np.linspace(0.0, 1.0, 21):
        c = concurrence(pair_state(werner(float(p))))
        expected = max(0.0, (3 * p - 1) / 2)
        assert abs(c - expected) < 1e-10
    assert concurrence(pair_state(werner(1.0 / 3.0))) <= 1e-10
    assert abs(concurrence(pair_state(werner(0.5))) - 0.25) < 1e-10


def test_tiny_concurrence_snaps_to_zero():
    c = concurrence(pair_state(werner(1.0 / 3.0 + 3e-13)))
    assert c == 0.0


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_concurrence_in_unit_interval(seed):
    rho = random_density(np.random.default_rng(seed))
    c = concurrence(pair_state(rho))
    assert 0.0 <= c <= 1.0 + 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng)
    u = np.kron(random_unitary(rng), random_unitary(rng))
    moved = u @ rho @ u.conj().T
    assert abs(concurrence(pair_state(rho)) - concurrence(pair_state(moved))) < 1e-9


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    coher=st.floats(min_value=0.0, max_value=0.5),
)
def test_matches_closed_form_on_cross_diagonal_states(seed, coher):
    rng = np.random.default_rng(seed)
    w = rng.random(4) + 0.05
    w /= w.sum()
    rho = np.diag(w).astype(complex)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    c03 = coher * np.sqrt(w[0] * w[3])
    rho[0, 3] = c03 * phase
    rho[3, 0] = np.conj(rho[0, 3])
    c12 = coher * np.sqrt(w[1] * w[2])
    rho[1, 2] = c12 * phase.conj()
    rho[2, 1] = np.conj(rho[1, 2])
    ours = concurrence(pair_state(rho))
    ref = oracles.xstate_concurrence(rho)
    assert abs(ours - ref) < 1e-10


def test_formation_endpoints():
    assert entanglement_of_formation(0.0) == 0.0
    assert entanglement_of_formation(1.0) == 1.0


def test_formation_known_value():
    ef = entanglement_of_formation(0.6)
    assert abs(ef - 0.4689955935892811) < 1e-12
    assert abs(ef - 0.4690) < 5e-4


def test_formation_is_increasing():
    grid = np.linspace(0.0, 1.0, 101)
    values = [entanglement_of_formation(float(c)) for c in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_formation_domain():
    assert entanglement_of_formation(-1e-13) == 0.0
    assert entanglement_of_formation(1.0 + 1e-13) == 1.0
    with pytest.raises(ValueError):
        entanglement_of_formation(-0.01)
    with pytest.raises(ValueError):
        entanglement_of_formation(1.01)


def test_pair_state_validation():
    good = pair_state(np.eye(4, dtype=complex) / 4)
    good.validate()
    skew = np.eye(4, dtype=complex) / 4
    skew[0, 1] = 0.2
    with pytest.raises(NumericalError, match="Hermitian"):
        pair_state(skew).validate()
    with pytest.raises(NumericalError, match="trace"):
        pair_state(np.eye(4, dtype=complex)).validate()
    with pytest.raises(NumericalError, match="eigenvalue"):
        pair_state(np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex)).validate()


def test_pair_state_requires_4x4():
    with pytest.raises(ValueError):
        pair_state(np.eye(2, dtype=complex)).validate()
    with pytest.raises(ValueError):
        concurrence(np.eye(2, dtype=complex) / 2)


def test_two_spin_evolution_links_modules():
    # strongly polarized two-spin cluster: C = |sin(tau/2)|, J_{+2} = C^2/2
    from spinmq.coherence import integrated_intensities
    from spinmq.dynamics import conjugate, propagator, spectral_decompose
    from spinmq.model import ThermalConfig, build_couplings, double_quantum_hamiltonian, thermal_state
    from spinmq.operators import decompose_by_order, partial_trace_to_pair, total_z_operator

    sf = spectral_decompose(double_quantum_hamiltonian(build_couplings("chain", 2, 1.0)))
    rho0 = thermal_state(2, ThermalConfig("direct", 30.0))
    for tau in np.linspace(0.0, 4 * np.pi, 25):
        u = propagator(sf, float(tau))
        rho = conjugate(u, rho0)
        c = concurrence(pair_state(partial_trace_to_pair(rho, 2, 1, 2), tau=float(tau)))
        assert abs(c - abs(np.sin(tau / 2))) < 1e-6
        parts = decompose_by_order(conjugate(u, total_z_operator(2)), 2)
        j2 = integrated_intensities(rho, parts).intensity(2)
        assert abs(j2 - 0.5 * c**2) < 1e-6
