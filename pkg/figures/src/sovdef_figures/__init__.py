"""Figure analogues for the sovereign-default uncertainty toolkit,
rendered from its CSV exports."""

from sovdef_figures.render import FIGURE_IDS, FigureSpec, render

__all__ = ["FIGURE_IDS", "FigureSpec", "render"]
__version__ = "0.1.0"
