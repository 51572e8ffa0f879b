"""Headless rendering of panel specs to image files.

The renderer is read-only over the CSV: columns are plotted as stored,
with per-curve scale factors applied to the drawn line only. Rendering
the same spec twice produces byte-identical files for a fixed
matplotlib version.
"""

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .panels import PanelSpec


class MissingColumnError(ValueError):
    """A required column is absent from the CSV header."""

    def __init__(self, column: str, csv_path):
        self.column = column
        super().__init__(f"{csv_path} is missing required column '{column}'")


def load_table(csv_path) -> tuple[list[str], np.ndarray]:
    """Header and data rows of a runner CSV.

    A header-only file yields a (0, n_columns) array; a file without
    even a header row is rejected.
    """
    with open(csv_path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{csv_path} is empty, expected a header row") from None
        rows = [[float(field) for field in row] for row in reader if row]
    if not rows:
        return header, np.empty((0, len(header)))
    data = np.array(rows, dtype=float)
    if data.shape[1] != len(header):
        raise ValueError(
            f"{csv_path} has rows of width {data.shape[1]} but {len(header)} "
            f"header fields")
    return header, data


def build_figure(spec: PanelSpec):
    """Matplotlib figure for a panel spec; caller owns closing it."""
    header, data = load_table(spec.csv_path)
    for name in spec.required_columns():
        if name not in header:
            raise MissingColumnError(name, spec.csv_path)
    tau = data[:, header.index("tau")]
    n_panels = len(spec.panels)
    fig, axes = plt.subplots(n_panels, 1, sharex=True,
                             figsize=(6.4, 2.4 * n_panels))
    axes = np.atleast_1d(axes)
    for ax, panel in zip(axes, spec.panels):
        if len(tau):
            for curve in panel.curves:
                values = curve.scale * data[:, header.index(curve.column)]
                ax.plot(tau, values, color=curve.color,
                        linestyle=curve.linestyle, label=curve.label)
            ax.legend(loc="upper right", fontsize="small")
        ax.set_ylabel("intensity / concurrence")
        ax.text(0.02, 0.92, panel.tag, transform=ax.transAxes, va="top")
    axes[-1].set_xlabel(r"$\tau$ (units of $1/d_{nn}$)")
    fig.tight_layout()
    return fig


def render(spec: PanelSpec, out_path, dpi: int = 150) -> Path:
    """Draw the spec and write it to ``out_path``; returns the path."""
    out_path = Path(out_path)
    fig = build_figure(spec)
    try:
        fig.savefig(out_path, dpi=dpi)
    finally:
        plt.close(fig)
    return out_path
