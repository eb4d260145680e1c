"""Render figures from sovdef CSV exports.

All economics lives in the exporting package; this module only reshapes
columns into axes.  Rendering is deterministic: fixed size, fixed fonts,
no timestamps, so re-running on the same inputs reproduces the image
byte for byte.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

plt.rcParams.update({
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.25,
})

FIGURE_IDS = ("densities", "densities-grid", "path", "dep", "pi")


@dataclass
class FigureSpec:
    figure_id: str
    inputs: list
    output: Path
    labels: dict = field(default_factory=dict)
    shade_threshold: float = 0.5  # default-region shading: P(default) >= threshold
    atoms: bool = False  # honest atom plot instead of connected curves

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}; choose from {FIGURE_IDS}")
        self.inputs = [Path(p) for p in self.inputs]
        self.output = Path(self.output)
        for p in self.inputs:
            if not p.exists():
                raise FileNotFoundError(f"input CSV missing: {p}")


def read_columns(path: Path, required: tuple) -> dict:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"{path}: empty CSV")
    missing = [c for c in required if c not in rows[0]]
    if missing:
        raise ValueError(f"{path}: missing columns {missing}")
    out = {}
    for c in required:
        try:
            out[c] = np.array([float(r[c]) for r in rows])
        except ValueError:
            out[c] = np.array([r[c] for r in rows])
    return out


def render(spec: FigureSpec):
    """Build and save the figure; returns the matplotlib Figure."""
    builder = {
        "densities": _build_densities,
        "densities-grid": _build_densities_grid,
        "path": _build_path,
        "dep": _build_dep,
        "pi": _build_pi,
    }[spec.figure_id]
    fig = builder(spec)
    spec.output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output, metadata={"Software": "sovdef-figures"})
    plt.close(fig)
    return fig


def _shade_default_region(ax, y, p_default, threshold):
    mask = p_default >= threshold
    if not mask.any():
        return
    ax.fill_between(y, 0, 1, where=mask, transform=ax.get_xaxis_transform(),
                    color="0.85", zorder=0, linewidth=0)


def _plot_series(ax, x, y, atoms, **kwargs):
    if atoms:
        markerline, stemline, base = ax.stem(x, y, basefmt=" ")
        plt.setp(markerline, markersize=2.5, color=kwargs.get("color"))
        plt.setp(stemline, linewidth=0.7, color=kwargs.get("color"))
        markerline.set_label(kwargs.get("label"))
    else:
        ax.plot(x, y, linewidth=1.4, **kwargs)


DENSITY_COLUMNS = ("y_next", "pmf_approx", "pmf_distorted", "m", "expected_payoff", "p_default")


def _density_panel(ax_top, ax_bottom, data, spec):
    y = data["y_next"]
    _shade_default_region(ax_top, y, data["p_default"], spec.shade_threshold)
    _plot_series(ax_top, y, data["pmf_approx"], spec.atoms, color="tab:blue", label="approximating")
    _plot_series(ax_top, y, data["pmf_distorted"], spec.atoms, color="tab:red", label="distorted")
    ax_m = ax_top.twinx()
    ax_m.plot(y, data["m"], color="tab:green", linewidth=1.0, linestyle="--", label="distortion m")
    ax_m.set_ylabel("distortion m", color="tab:green")
    ax_m.grid(False)
    ax_top.set_ylabel("conditional probability")
    ax_top.legend(loc="upper left", fontsize=8)
    if ax_bottom is not None:
        _shade_default_region(ax_bottom, y, data["p_default"], spec.shade_threshold)
        ax_bottom.plot(y, data["expected_payoff"], color="tab:purple", linewidth=1.4)
        ax_bottom.set_ylabel("expected bond payoff")
        ax_bottom.set_xlabel(spec.labels.get("x", "next-period endowment"))


def _build_densities(spec: FigureSpec):
    data = read_columns(spec.inputs[0], DENSITY_COLUMNS)
    fig, (ax_top, ax_bottom) = plt.subplots(2, 1, figsize=(7.0, 5.2), sharex=True,
                                            height_ratios=[2.0, 1.0])
    _density_panel(ax_top, ax_bottom, data, spec)
    ax_top.set_title(spec.labels.get("title", "Approximating and distorted one-step densities"))
    fig.tight_layout()
    return fig


def _build_densities_grid(spec: FigureSpec):
    if len(spec.inputs) != 4:
        raise ValueError("densities-grid needs four density CSVs (state-by-state panels)")
    fig, axes = plt.subplots(2, 2, figsize=(9.0, 6.0), sharex=True)
    panel_titles = spec.labels.get(
        "panels", ["low y, low debt", "low y, high debt", "higher y, low debt", "higher y, high debt"]
    )
    for ax, path, title in zip(axes.ravel(), spec.inputs, panel_titles):
        data = read_columns(path, DENSITY_COLUMNS)
        _density_panel(ax, None, data, spec)
        ax.set_title(title, fontsize=9)
    fig.suptitle(spec.labels.get("title", "Distorted densities across states"), fontsize=11)
    fig.tight_layout()
    return fig


PATH_COLUMNS = ("date", "y_level", "spread_pct", "p_default_approx", "p_default_distorted")


def _build_path(spec: FigureSpec):
    data = read_columns(spec.inputs[0], PATH_COLUMNS)
    t = np.arange(data["y_level"].size)
    fig, (ax_top, ax_bottom) = plt.subplots(2, 1, figsize=(8.0, 5.6), sharex=True)
    ax_top.plot(t, data["spread_pct"], color="tab:red", linewidth=1.4, label="model spread (%)")
    ax_top.set_ylabel("annualized spread (%)", color="tab:red")
    ax_y = ax_top.twinx()
    ax_y.plot(t, data["y_level"], color="tab:gray", linewidth=1.2, label="output")
    ax_y.set_ylabel("output level", color="tab:gray")
    ax_y.grid(False)
    ax_top.set_title(spec.labels.get("title", "Observed output path: model spreads and default risk"))
    ax_bottom.plot(t, 100 * data["p_default_approx"], color="tab:blue", linewidth=1.3,
                   label="approximating")
    ax_bottom.plot(t, 100 * data["p_default_distorted"], color="tab:red", linewidth=1.3,
                   label="distorted")
    ax_bottom.set_ylabel("one-step default prob. (%)")
    ax_bottom.set_xlabel("quarter")
    ax_bottom.legend(fontsize=8)
    ticks = t[:: max(1, t.size // 9)]
    ax_bottom.set_xticks(ticks)
    ax_bottom.set_xticklabels([data["date"][i] for i in ticks], rotation=45, fontsize=7)
    fig.tight_layout()
    return fig


def _build_dep(spec: FigureSpec):
    data = read_columns(spec.inputs[0], ("T", "p_A", "p_D", "DEP"))
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(data["T"], data["p_A"], linewidth=1.1, linestyle=":", color="tab:blue", label="p_A")
    ax.plot(data["T"], data["p_D"], linewidth=1.1, linestyle=":", color="tab:red", label="p_D")
    ax.plot(data["T"], data["DEP"], linewidth=1.7, color="black", label="DEP")
    ax.axhline(0.2, color="0.5", linewidth=0.8, linestyle="--")
    ax.set_xlabel("sample length T (quarters)")
    ax.set_ylabel("detection-error probability")
    ax.set_ylim(0.0, 0.55)
    ax.set_title(spec.labels.get("title", "Detection-error probabilities"))
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def _build_pi(spec: FigureSpec):
    data = read_columns(spec.inputs[0], ("T", "pi"))
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(data["T"], data["pi"], linewidth=1.7, color="black")
    ax.axhline(0.05, color="0.5", linewidth=0.8, linestyle="--")
    ax.axhline(0.10, color="0.7", linewidth=0.8, linestyle="--")
    ax.set_xlabel("sample length T (quarters)")
    ax.set_ylabel("rejection probability")
    ax.set_title(spec.labels.get("title", "Quantile-moment uncertainty measure"))
    fig.tight_layout()
    return fig
