"""Matplotlib rendering of report figures to SVG files.

Output is byte-reproducible: the SVG hash salt is pinned and the creation
date is stripped from the metadata, so identical inputs give identical
files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .transition import TransitionCurve

__all__ = ["render_transition_curve"]

_SVG_HASHSALT = "maxaccel"


def render_transition_curve(curve: TransitionCurve, cutoff_log10: float, path: str) -> None:
    """Plot log10 state magnitude against log10 nucleon count, with the cutoff line."""
    plt.rcParams["svg.hashsalt"] = _SVG_HASHSALT
    log_n = np.array([np.log10(s.n_nucleons) for s in curve.samples])
    log_mag = np.array([s.log10_magnitude for s in curve.samples])

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(log_n, log_mag, lw=1.6, color="tab:blue", label="magnitude bound")
    ax.axhline(cutoff_log10, ls="--", lw=1.0, color="tab:red", label="classicality cutoff")
    ax.set_xlabel("log10 nucleon count")
    ax.set_ylabel("log10 |state magnitude|")
    ax.set_title(f"quantum-to-classical transition (alpha={curve.alpha:g})")
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
