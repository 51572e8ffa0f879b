"""Panel layouts for the preset figures.

Each preset describes one three-panel figure drawn from a runner CSV:
one spin pair per panel, with the pair-reduced second-order intensity
(black solid), the integrated second-order intensity (red dashed) and
the pair concurrence (green dotted). Two presets overlay the integrated
intensity of the highest coherence order in their last panel (blue
dash-dotted). Scaling factors stretch small curves to the scale of the
panel and are recorded in the legend label; they are applied at render
time only, so the CSV data stays unscaled.
"""

from dataclasses import dataclass
from pathlib import Path

REDUCED_STYLE = ("black", "-")
INTEGRATED_STYLE = ("red", "--")
CONCURRENCE_STYLE = ("green", ":")
OVERLAY_STYLE = ("blue", "-.")


@dataclass(frozen=True)
class Curve:
    """One line in a panel: a CSV column, its look and its scaling."""

    column: str
    label: str
    color: str
    linestyle: str
    scale: float = 1.0


@dataclass(frozen=True)
class Panel:
    tag: str
    pair: tuple[int, int]
    curves: tuple[Curve, ...]


@dataclass(frozen=True)
class PanelSpec:
    """A full multi-panel figure layout bound to one CSV file."""

    name: str
    csv_path: Path
    panels: tuple[Panel, ...]

    def required_columns(self) -> list[str]:
        needed = {"tau"}
        for panel in self.panels:
            needed.update(curve.column for curve in panel.curves)
        return sorted(needed)


def _scale_suffix(scale: float) -> str:
    if scale == 1.0:
        return ""
    if scale == 1000.0:
        return r" $\times 10^3$"
    return rf" $\times {scale:g}$"


def _panel(tag: str, pair: tuple[int, int], jred_scale: float,
           overlay: Curve | None = None) -> Panel:
    m, n = pair
    curves = [
        Curve(column=f"Jred[{m}-{n}][+2]",
              label=rf"$J_2^{{{m},{n}}}$" + _scale_suffix(jred_scale),
              color=REDUCED_STYLE[0], linestyle=REDUCED_STYLE[1],
              scale=jred_scale),
        Curve(column="J[2]", label=r"$J_2$",
              color=INTEGRATED_STYLE[0], linestyle=INTEGRATED_STYLE[1]),
        Curve(column=f"C[{m}-{n}]", label=rf"$C_{{{m},{n}}}$",
              color=CONCURRENCE_STYLE[0], linestyle=CONCURRENCE_STYLE[1]),
    ]
    if overlay is not None:
        curves.append(overlay)
    return Panel(tag=tag, pair=pair, curves=tuple(curves))


def _fig1(csv_path: Path) -> PanelSpec:
    return PanelSpec("fig1", csv_path, (
        _panel("(a)", (1, 2), 1.0),
        _panel("(b)", (1, 3), 20.0),
        _panel("(c)", (1, 4), 10.0),
    ))


def _fig2(csv_path: Path) -> PanelSpec:
    sixth = Curve(column="J[6]", label=r"$J_6$",
                  color=OVERLAY_STYLE[0], linestyle=OVERLAY_STYLE[1])
    return PanelSpec("fig2", csv_path, (
        _panel("(a)", (1, 2), 1.0),
        _panel("(b)", (1, 3), 20.0),
        _panel("(c)", (1, 4), 10.0, overlay=sixth),
    ))


def _fig3(csv_path: Path) -> PanelSpec:
    tenth = Curve(column="J[10]", label=r"$J_{10}$" + _scale_suffix(1000.0),
                  color=OVERLAY_STYLE[0], linestyle=OVERLAY_STYLE[1],
                  scale=1000.0)
    return PanelSpec("fig3", csv_path, (
        _panel("(a)", (1, 2), 1.0),
        _panel("(b)", (1, 3), 20.0),
        _panel("(c)", (1, 10), 1000.0, overlay=tenth),
    ))


_BUILDERS = {"fig1": _fig1, "fig2": _fig2, "fig3": _fig3}

PRESET_NAMES = tuple(sorted(_BUILDERS))


def preset_spec(name: str, csv_path) -> PanelSpec:
    """Panel layout for a named preset, bound to ``csv_path``."""
    if name not in _BUILDERS:
        raise ValueError(
            f"unknown preset {name!r}; choose one of {', '.join(PRESET_NAMES)}")
    return _BUILDERS[name](Path(csv_path))
