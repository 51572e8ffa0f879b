"""Experiment orchestration over a tau grid and dataset emission.

One run diagonalizes the double-quantum Hamiltonian once, then sweeps a
uniform tau grid.  Every grid point yields the integrated intensities of
all even coherence orders plus, for each requested spin pair, the reduced
intensities, the concurrence and the entanglement of formation.  Grid
points are independent, so they can be farmed out to worker processes;
rows are gathered back in tau order, which makes the emitted dataset
identical regardless of the worker count.
"""

from __future__ import annotations

import json
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from pathlib import Path

import numpy as np

from ._version import __version__
from .coherence import (
    high_order_pair_residual,
    integrated_intensities,
    reduced_intensities,
)
from .dynamics import SpectralForm, propagator, require_finite, spectral_decompose
from .entanglement import PairState, concurrence, entanglement_of_formation
from .errors import ConfigError, InvariantViolation
from .model import (
    GEOMETRIES,
    ThermalConfig,
    build_couplings,
    double_quantum_hamiltonian,
    thermal_state,
)
from .operators import (
    MAX_SITES,
    decompose_by_order,
    magnetizations,
    order_difference_matrix,
    partial_trace_to_pair,
)

#: Systems and pairs instantiated by the named presets.
PRESETS = {
    "fig1": {"n_spins": 4, "geometry": "chain", "pairs": ((1, 2), (1, 3), (1, 4))},
    "fig2": {"n_spins": 6, "geometry": "ring", "pairs": ((1, 2), (1, 3), (1, 4))},
    "fig3": {"n_spins": 10, "geometry": "chain", "pairs": ((1, 2), (1, 3), (1, 10))},
}

_CONSERVATION_TOL = 1e-10
_SYMMETRY_TOL = 1e-10
_HERMITICITY_TOL = 1e-10
_TRACE_TOL = 1e-10
_ODD_ORDER_TOL = 1e-12
_PAIR_CUTOFF_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    """Complete description of one sweep."""

    n_spins: int
    geometry: str
    d_nn: float = 1.0
    thermal: ThermalConfig = field(default_factory=ThermalConfig)
    tau_max: float = 10.0
    tau_points: int = 500
    pairs: tuple[tuple[int, int], ...] = ()
    emit_orders: tuple[int, ...] | None = None
    preset: str = "custom"
    output_path: str | None = None
    workers: int = 1
    strict: bool = True


@dataclass
class RunResult:
    """Emitted dataset: one row per tau, plus run metadata."""

    metadata: dict
    columns: list[str]
    rows: np.ndarray


def preset_config(name: str, **overrides) -> RunConfig:
    """Instantiate a named preset, optionally overriding individual fields."""
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    settings: dict = dict(PRESETS[name])
    settings.update(overrides)
    return RunConfig(preset=name, **settings)


def default_orders(n_spins: int) -> tuple[int, ...]:
    """Even coherence-order magnitudes emitted by default: 0, 2, ..."""
    k_max = n_spins if n_spins % 2 == 0 else n_spins - 1
    return tuple(range(0, k_max + 1, 2))


def validate_config(config: RunConfig) -> None:
    if not 2 <= config.n_spins <= MAX_SITES:
        raise ConfigError(f"n_spins must be in [2, {MAX_SITES}], got {config.n_spins}")
    if config.geometry not in GEOMETRIES:
        raise ConfigError(f"geometry must be one of {GEOMETRIES}, got {config.geometry!r}")
    if not (np.isfinite(config.d_nn) and config.d_nn > 0):
        raise ConfigError(f"d_nn must be finite and positive, got {config.d_nn}")
    if not (np.isfinite(config.tau_max) and config.tau_max > 0):
        raise ConfigError(f"tau_max must be finite and positive, got {config.tau_max}")
    if config.tau_points < 2:
        raise ConfigError(f"tau_points must be at least 2, got {config.tau_points}")
    if config.workers < 1:
        raise ConfigError(f"workers must be at least 1, got {config.workers}")
    seen = set()
    for pair in config.pairs:
        if len(pair) != 2 or not (1 <= pair[0] < pair[1] <= config.n_spins):
            raise ConfigError(
                f"pair {pair} is invalid; need 1 <= m < n <= {config.n_spins}"
            )
        if pair in seen:
            raise ConfigError(f"pair {pair} requested twice")
        seen.add(pair)
    if config.emit_orders is not None:
        if len(set(config.emit_orders)) != len(config.emit_orders):
            raise ConfigError("emit_orders contains duplicates")
        for k in config.emit_orders:
            if abs(k) > config.n_spins:
                raise ConfigError(f"order {k} exceeds the maximum |k| = {config.n_spins}")


def column_names(config: RunConfig) -> list[str]:
    """CSV column layout: tau, J[k] per order, then the per-pair block."""
    orders = config.emit_orders if config.emit_orders is not None else default_orders(config.n_spins)
    cols = ["tau"] + [f"J[{k}]" for k in orders]
    for m, n in config.pairs:
        lbl = f"{m}-{n}"
        cols += [
            f"Jred[{lbl}][0]",
            f"Jred[{lbl}][+2]",
            f"Jred[{lbl}][-2]",
            f"C[{lbl}]",
            f"EF[{lbl}]",
        ]
    return cols


@dataclass(frozen=True)
class _RunContext:
    """Immutable inputs shared by every grid point."""

    n_spins: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    weights: np.ndarray
    mz: np.ndarray
    pairs: tuple[tuple[int, int], ...]
    orders: tuple[int, ...]
    ref_total: float
    strict: bool


def _check(ctx: _RunContext, ok: bool, message: str) -> None:
    if ok:
        return
    if ctx.strict:
        raise InvariantViolation(message)
    warnings.warn(message, RuntimeWarning, stacklevel=2)


def _compute_row(ctx: _RunContext, tau: float) -> np.ndarray:
    sf = SpectralForm(ctx.eigenvalues, ctx.eigenvectors)
    u = propagator(sf, tau)
    # rho_eq and I_z are diagonal; scaling columns equals conjugation.
    rho_t = (u * ctx.weights) @ u.conj().T
    rhoz_t = (u * ctx.mz) @ u.conj().T
    require_finite(rho_t, f"rho(tau={tau:g})")
    require_finite(rhoz_t, f"rho_z(tau={tau:g})")

    _check(ctx, np.abs(rho_t - rho_t.conj().T).max() <= _HERMITICITY_TOL,
           f"rho(tau={tau:g}) lost Hermiticity")
    _check(ctx, np.abs(rhoz_t - rhoz_t.conj().T).max() <= _HERMITICITY_TOL,
           f"rho_z(tau={tau:g}) lost Hermiticity")
    _check(ctx, abs(complex(np.trace(rho_t)) - 1.0) <= _TRACE_TOL,
           f"rho(tau={tau:g}) trace drifted from 1")
    _check(ctx, abs(complex(np.trace(rhoz_t))) <= _TRACE_TOL,
           f"rho_z(tau={tau:g}) trace drifted from 0")

    odd = order_difference_matrix(ctx.n_spins) % 2 != 0
    _check(ctx, float(np.abs(rhoz_t)[odd].max(initial=0.0)) <= _ODD_ORDER_TOL,
           f"rho_z(tau={tau:g}) grew odd-order content")
    _check(ctx, float(np.abs(rho_t)[odd].max(initial=0.0)) <= _ODD_ORDER_TOL,
           f"rho(tau={tau:g}) grew odd-order content")

    parts = decompose_by_order(rhoz_t, ctx.n_spins)
    spectrum = integrated_intensities(rho_t, parts, tau=tau)
    _check(ctx, abs(spectrum.total() - ctx.ref_total) <= _CONSERVATION_TOL,
           f"sum of intensities at tau={tau:g} drifted from {ctx.ref_total!r}")
    for k in spectrum.orders():
        if k > 0:
            _check(ctx, abs(spectrum.intensity(k) - spectrum.intensity(-k)) <= _SYMMETRY_TOL,
                   f"J[{k}] and J[{-k}] differ at tau={tau:g}")

    row = [tau] + [spectrum.intensity(k) for k in ctx.orders]
    for m, n in ctx.pairs:
        reduced = reduced_intensities(rho_t, parts, m, n, tau=tau)
        _check(ctx, high_order_pair_residual(rho_t, parts, m, n) <= _PAIR_CUTOFF_TOL,
               f"pair ({m},{n}) shows reduced intensity beyond |k|=2 at tau={tau:g}")
        state = PairState(
            matrix=partial_trace_to_pair(rho_t, ctx.n_spins, m, n), pair=(m, n), tau=tau
        )
        if ctx.strict:
            state.validate()
        c = concurrence(state)
        row += [
            reduced.intensity(0),
            reduced.intensity(2),
            reduced.intensity(-2),
            c,
            entanglement_of_formation(c),
        ]
    return np.asarray(row, dtype=float)


_POOL_CONTEXT: _RunContext | None = None


def _set_pool_context(ctx: _RunContext) -> None:
    global _POOL_CONTEXT
    _POOL_CONTEXT = ctx


def _pool_row(tau: float) -> np.ndarray:
    assert _POOL_CONTEXT is not None, "worker used before initialization"
    return _compute_row(_POOL_CONTEXT, tau)


def run(config: RunConfig) -> RunResult:
    """Execute the sweep described by ``config``.

    Raises ConfigError for an invalid description, NumericalError (or its
    InvariantViolation subclass, in strict mode) on numerical failure.
    """
    validate_config(config)
    started = time.perf_counter()

    system = build_couplings(config.geometry, config.n_spins, config.d_nn)
    sf = spectral_decompose(double_quantum_hamiltonian(system))
    rho_eq = thermal_state(config.n_spins, config.thermal)
    weights = np.diag(rho_eq).copy()
    mz = magnetizations(config.n_spins)
    ref_total = float(np.sum(weights.real * mz))
    orders = config.emit_orders if config.emit_orders is not None else default_orders(config.n_spins)

    ctx = _RunContext(
        n_spins=config.n_spins,
        eigenvalues=sf.eigenvalues,
        eigenvectors=sf.eigenvectors,
        weights=weights,
        mz=mz,
        pairs=tuple(tuple(p) for p in config.pairs),
        orders=tuple(orders),
        ref_total=ref_total,
        strict=config.strict,
    )
    taus = np.linspace(0.0, config.tau_max, config.tau_points)

    if config.workers == 1:
        rows = [_compute_row(ctx, float(t)) for t in taus]
    else:
        chunk = max(1, len(taus) // (4 * config.workers))
        with ProcessPoolExecutor(
            max_workers=config.workers,
            mp_context=get_context("spawn"),
            initializer=_set_pool_context,
            initargs=(ctx,),
        ) as pool:
            rows = list(pool.map(_pool_row, [float(t) for t in taus], chunksize=chunk))

    metadata = {
        "tool": "spinmq",
        "tool_version": __version__,
        "preset": config.preset,
        "n_spins": config.n_spins,
        "geometry": config.geometry,
        "d_nn": config.d_nn,
        "thermal_mode": config.thermal.mode,
        "thermal_value": config.thermal.value,
        "b": config.thermal.exponent(config.n_spins),
        "tau_max": config.tau_max,
        "tau_points": config.tau_points,
        "pairs": ",".join(f"{m}-{n}" for m, n in config.pairs),
        "emit_orders": ",".join(str(k) for k in orders),
        "workers": config.workers,
        "strict": config.strict,
        "trace_rho_eq_iz": ref_total,
        "wall_time_s": time.perf_counter() - started,
    }
    return RunResult(metadata=metadata, columns=column_names(config), rows=np.vstack(rows))


def emit(result: RunResult, path: str | Path, fmt: str = "csv") -> list[Path]:
    """Write the dataset to disk; returns the paths written.

    ``csv`` writes the data table (17 significant digits, exact float64
    round trip) plus a companion ``<stem>.meta.json`` metadata file;
    ``json`` writes a single file holding metadata, columns and rows.
    """
    path = Path(path)
    if fmt == "csv":
        lines = [",".join(result.columns)]
        for row in result.rows:
            lines.append(",".join(f"{v:.16e}" for v in row))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        meta_path = path.with_suffix(".meta.json")
        meta_path.write_text(json.dumps(result.metadata, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
        return [path, meta_path]
    if fmt == "json":
        payload = {
            "metadata": result.metadata,
            "columns": result.columns,
            "rows": result.rows.tolist(),
        }
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        return [path]
    raise ConfigError(f"format must be 'csv' or 'json', got {fmt!r}")
