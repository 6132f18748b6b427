"""Figure rendering for decoder failure-rate sweeps.

Consumes the simulator's CSV output (fixed 16-column schema) and renders one
panel per read count: failure-rate curves over a channel parameter, one line
per codebook, with shaded 95% confidence bands on a log axis.
"""

from .render import FigureSpec, SchemaError, load_rows, render

__version__ = "0.1.0"

__all__ = ["FigureSpec", "SchemaError", "load_rows", "render"]
