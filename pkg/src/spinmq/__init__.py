"""Exact-diagonalization dynamics of coherence orders and pair entanglement
in small dipolar-coupled spin-1/2 clusters."""

from ._version import __version__
from .coherence import (
    CoherenceSpectrum,
    PairSpectrum,
    integrated_intensities,
    reduced_intensities,
)
from .dynamics import SpectralForm, propagator, spectral_decompose
from .entanglement import PairState, concurrence, entanglement_of_formation
from .errors import ConfigError, InvariantViolation, NumericalError
from .model import (
    SpinSystem,
    ThermalConfig,
    build_couplings,
    double_quantum_hamiltonian,
    thermal_state,
)
from .operators import (
    OrderDecomposition,
    decompose_by_order,
    magnetizations,
    partial_trace_to_pair,
    single_spin_operator,
    total_z_operator,
)
from .runner import PRESETS, RunConfig, RunResult, emit, preset_config, run

__all__ = [
    "__version__",
    "CoherenceSpectrum",
    "ConfigError",
    "InvariantViolation",
    "NumericalError",
    "OrderDecomposition",
    "PRESETS",
    "PairSpectrum",
    "PairState",
    "RunConfig",
    "RunResult",
    "SpectralForm",
    "SpinSystem",
    "ThermalConfig",
    "build_couplings",
    "concurrence",
    "decompose_by_order",
    "double_quantum_hamiltonian",
    "emit",
    "entanglement_of_formation",
    "integrated_intensities",
    "magnetizations",
    "partial_trace_to_pair",
    "preset_config",
    "propagator",
    "reduced_intensities",
    "run",
    "single_spin_operator",
    "spectral_decompose",
    "thermal_state",
    "total_z_operator",
]
