"""Figure specs and rendering for the step-scattering CSV outputs.

Two layouts:
  fig1  2x2 grid of r(t) transition panels (one packet CSV per panel), with
        the r = 1 reference line;
  fig2  two stacked panels, Arg R and |R| versus E/m from one sweep CSV, with
        the |R| = 1 reference line and zone-boundary verticals at v0-1, v0,
        v0+1 read from the CSV metadata.

A figure is first built as a pure-data PlotSpec (series, limits, reference
lines), so re-rendering identical CSVs yields an identical spec; matplotlib
only consumes it.
"""

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .reader import SchemaError, Table, read_table, require_columns

MARGIN = 0.05  # fractional axis padding


@dataclass(frozen=True)
class FigureSpec:
    """What to render: input CSVs, layout, output path."""

    inputs: list[str]
    layout: str  # "fig1" | "fig2"
    out_path: str


@dataclass(frozen=True)
class Panel:
    title: str
    x_label: str
    y_label: str
    series: list[tuple[str, tuple[float, ...], tuple[float, ...]]]
    x_lim: tuple[float, float]
    y_lim: tuple[float, float]
    h_lines: tuple[float, ...] = ()
    v_lines: tuple[float, ...] = ()


@dataclass(frozen=True)
class PlotSpec:
    layout: str
    grid: tuple[int, int]
    panels: list[Panel]
    suptitle: str = ""


def _limits(values, pad_floor: float = 0.0) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    span = max(hi - lo, pad_floor, 1e-12)
    return (lo - MARGIN * span, hi + MARGIN * span)


def _rt_panel(table: Table) -> Panel:
    require_columns(table, ["t", "n1", "n2", "r"])
    t = tuple(table.column("t"))
    r = tuple(table.column("r"))
    title = table.meta.get("zone", table.path).replace("_", " ")
    y_lim = _limits(list(r) + [1.0])
    return Panel(
        title=title,
        x_label="m t",
        y_label="r(t)",
        series=[("r", t, r)],
        x_lim=_limits(t),
        y_lim=y_lim,
        h_lines=(1.0,),
    )


def build_plot_spec(spec: FigureSpec) -> PlotSpec:
    if spec.layout == "fig1":
        if len(spec.inputs) != 4:
            raise SchemaError(f"fig1 needs exactly four r(t) CSVs, got {len(spec.inputs)}")
        panels = [_rt_panel(read_table(path)) for path in spec.inputs]
        return PlotSpec(layout="fig1", grid=(2, 2), panels=panels,
                        suptitle="region-I population ratio r(t)")

    if spec.layout == "fig2":
        if len(spec.inputs) != 1:
            raise SchemaError(f"fig2 needs exactly one sweep CSV, got {len(spec.inputs)}")
        table = read_table(spec.inputs[0])
        require_columns(table, ["e", "zone", "r_mod", "r_arg", "r_arg_unwrapped", "t_mod", "alpha", "d_arg_de"])
        v0 = table.v0
        e = tuple(table.column("e"))
        arg = tuple(table.column("r_arg"))
        mod = tuple(table.column("r_mod"))
        boundaries = tuple(b for b in (v0 - 1.0, v0, v0 + 1.0) if min(e) <= b <= max(e))
        x_lim = _limits(e)
        top = Panel(
            title=f"reflection phase, v0 = {v0:g} m",
            x_label="E/m",
            y_label="Arg R",
            series=[("arg_r", e, arg)],
            x_lim=x_lim,
            y_lim=_limits(arg),
            v_lines=boundaries,
        )
        bottom = Panel(
            title="reflection modulus",
            x_label="E/m",
            y_label="|R|",
            series=[("mod_r", e, mod)],
            x_lim=x_lim,
            y_lim=_limits(list(mod) + [1.0]),
            h_lines=(1.0,),
            v_lines=boundaries,
        )
        return PlotSpec(layout="fig2", grid=(2, 1), panels=[top, bottom])

    raise SchemaError(f"unknown layout {spec.layout!r} (expected fig1 or fig2)")


def render(spec: FigureSpec) -> str:
    """Build the plot spec, draw it, and write the image file."""
    plot = build_plot_spec(spec)
    n_rows, n_cols = plot.grid
    fig, axes = plt.subplots(n_rows, n_cols, figsize=(4.8 * n_cols, 3.2 * n_rows), squeeze=False)
    for panel, ax in zip(plot.panels, axes.ravel()):
        for label, x, y in panel.series:
            ax.plot(x, y, lw=1.2, label=label)
        for y in panel.h_lines:
            ax.axhline(y, color="crimson", lw=0.8, ls="--", alpha=0.8)
        for x in panel.v_lines:
            ax.axvline(x, color="gray", lw=0.8, ls=":", alpha=0.9)
        ax.set_xlim(*panel.x_lim)
        ax.set_ylim(*panel.y_lim)
        ax.set_xlabel(panel.x_label)
        ax.set_ylabel(panel.y_label)
        ax.set_title(panel.title, fontsize=10)
    if plot.suptitle:
        fig.suptitle(plot.suptitle)
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=130)
    plt.close(fig)
    return spec.out_path
