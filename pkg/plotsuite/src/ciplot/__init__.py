"""ciplot: publication-style figures from stored simulation run files."""

__version__ = "0.1.0"

from .formats import FigureSpec, FormatError, RunFiles
from .figures import plot_phases, plot_snapshots, render

__all__ = ["FigureSpec", "FormatError", "RunFiles", "plot_phases",
           "plot_snapshots", "render"]
