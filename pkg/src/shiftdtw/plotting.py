"""Figures written next to the CLI's data output."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .core import BandMask, pairwise_cost_matrix, rotate  # noqa: E402
from .distances import shift_dtw, shift_offsets  # noqa: E402

__all__ = ["plot_benchmark", "plot_clusters", "plot_shift_windows"]

_RC = {
    "axes.labelsize": 9,
    "axes.titlesize": 9,
    "axes.spines.right": False,
    "axes.spines.top": False,
    "font.size": 9,
    "legend.fontsize": 8,
    "legend.frameon": False,
    "lines.linewidth": 1.0,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "savefig.dpi": 150,
    # keep SVG/PDF output byte-stable between runs
    "svg.hashsalt": "shiftdtw",
    "pdf.compression": 0,
}

_METHOD_STYLE = {
    "dtw_full": dict(color="0.2", marker="o"),
    "dtw_banded": dict(color="tab:blue", marker="s"),
    "shiftdtw": dict(color="tab:red", marker="^"),
    "naive_cyclic": dict(color="tab:green", marker="v"),
}


def _save(fig, path):
    path = Path(path)
    metadata = {"Software": None} if path.suffix.lower() == ".png" else {}
    if path.suffix.lower() == ".pdf":
        metadata = {"Creator": None, "Producer": None, "CreationDate": None}
    elif path.suffix.lower() == ".svg":
        metadata = {"Date": None, "Creator": None}
    fig.savefig(path, metadata=metadata, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_benchmark(rows, path):
    """Visited cells (and wall time when measured) against series length, one line per method and radius."""
    with plt.rc_context(_RC):
        timed = any(row.get("wall_time_ns") is not None for row in rows)
        ncols = 2 if timed else 1
        fig, axes = plt.subplots(1, ncols, figsize=(4.2 * ncols, 3.2), squeeze=False)
        series = defaultdict(list)
        for row in rows:
            series[(row["method"], row["r"])].append(row)
        radii = sorted({r for _, r in series})
        dashes = ["-", "--", ":", "-."]
        for (method, r), pts in sorted(series.items()):
            pts = sorted(pts, key=lambda p: p["m"])
            ms = [p["m"] for p in pts]
            style = dict(_METHOD_STYLE.get(method, {}), markersize=3,
                         linestyle=dashes[radii.index(r) % len(dashes)])
            label = method if method == "dtw_full" else f"{method} r={r}"
            if method == "dtw_full" and r != radii[0]:
                label = None  # independent of r; draw once in the legend
            axes[0, 0].plot(ms, [p["visited_cells"] for p in pts], label=label, **style)
            if timed:
                axes[0, 1].plot(ms, [p["wall_time_ns"] / 1e6 for p in pts], **style)
        axes[0, 0].set(xscale="log", yscale="log", xlabel="series length m",
                       ylabel="visited cells")
        axes[0, 0].legend(ncol=1)
        if timed:
            axes[0, 1].set(xscale="log", yscale="log", xlabel="series length m",
                           ylabel="wall time (ms)")
        fig.tight_layout()
        return _save(fig, path)


def plot_clusters(data, result, path):
    """Members of each cluster, rotated by their shift, over the barycenter."""
    with plt.rc_context(_RC):
        k = len(result.barycenters)
        fig, axes = plt.subplots(1, k, figsize=(3.4 * k, 2.6), squeeze=False, sharey=True)
        x = np.arange(data.length)
        for c in range(k):
            ax = axes[0, c]
            members = [i for i, a in enumerate(result.assignments) if a == c]
            for i in members:
                values = data[i].values
                if result.shifts[i]:
                    values = rotate(values, result.shifts[i])
                ax.plot(x, values, color="0.6", linewidth=0.5, alpha=0.7)
            ax.plot(x, result.barycenters[c].values, color="tab:red", linewidth=1.5)
            ax.set_title(f"cluster {c} ({len(members)} series)")
            ax.set_xlabel("t")
        fig.tight_layout()
        return _save(fig, path)


def plot_shift_windows(T, S, r: int, path):
    """Doubled cost matrix with the band of every tested window; the winner is outlined."""
    with plt.rc_context(_RC):
        cost = pairwise_cost_matrix(T, S).cells
        m = cost.shape[0]
        doubled = np.concatenate((cost, cost), axis=0)
        best = shift_dtw(T, S, r).shift
        band = BandMask(r, m).to_array()
        fig, ax = plt.subplots(figsize=(3.2, 5.6))
        ax.imshow(doubled, cmap="Greys", aspect="auto", interpolation="nearest")
        for offset in shift_offsets(m, r):
            overlay = np.full(doubled.shape, np.nan)
            overlay[offset:offset + m][band] = 1.0
            color = "Reds" if offset == best else "Blues"
            ax.imshow(overlay, cmap=color, alpha=0.35 if offset == best else 0.15,
                      vmin=0, vmax=1.2, aspect="auto", interpolation="nearest")
        ax.set(xlabel="j (second series)", ylabel="i (first series, doubled)",
               title=f"tested offsets, r={r}, best={best}")
        fig.tight_layout()
        return _save(fig, path)
