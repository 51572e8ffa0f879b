"""Multi-panel figures from spinmq runner CSV output."""

from .panels import PRESET_NAMES, Curve, Panel, PanelSpec, preset_spec
from .render import MissingColumnError, build_figure, load_table, render

__version__ = "0.1.0"

__all__ = [
    "PRESET_NAMES",
    "Curve",
    "MissingColumnError",
    "Panel",
    "PanelSpec",
    "__version__",
    "build_figure",
    "load_table",
    "preset_spec",
    "render",
]
