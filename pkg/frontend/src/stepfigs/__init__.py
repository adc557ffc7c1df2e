"""Figure renderer for the diracstep CSV outputs."""

from .figures import FigureSpec, Panel, PlotSpec, build_plot_spec, render
from .reader import SchemaError, Table, read_table

__version__ = "0.1.0"
