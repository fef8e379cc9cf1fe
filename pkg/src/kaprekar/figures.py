"""Matplotlib renderers for the report path.

Rendered headless (Agg) straight to files, alongside the CSV data they are
drawn from. Each function takes already-computed results; nothing here runs
an analysis.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .census import CycleCensus, DistributionTable

_RC = {
    "figure.figsize": (8.0, 5.0),
    "figure.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def _new_axes():
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
    return fig, ax


def _save(fig, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def save_iteration_bars(row: list[int], base: int, width: int, path: Path | str) -> Path:
    """Bar chart: how many width-N strings need each iteration count."""
    fig, ax = _new_axes()
    xs = list(range(1, len(row) + 1))
    ax.bar(xs, row, color="tab:blue")
    ax.set_xticks(xs)
    ax.set_xlabel("iterations to reach the terminal cycle")
    ax.set_ylabel("digit strings")
    ax.set_title(f"{width}-digit iteration distribution, base {base}")
    return _save(fig, path)


def save_iteration_curves(table: DistributionTable, path: Path | str) -> Path:
    """One line per base: the nearly parallel family of distribution curves."""
    fig, ax = _new_axes()
    cmap = plt.get_cmap("viridis")
    span = max(len(table.bases) - 1, 1)
    for i, (base, row) in enumerate(zip(table.bases, table.rows)):
        trimmed = _trim(row)
        ax.plot(
            range(1, len(trimmed) + 1),
            trimmed,
            color=cmap(i / span),
            linewidth=1.2,
            label=f"base {base}",
        )
    ax.set_xlabel("iterations to reach the terminal cycle")
    ax.set_ylabel("digit strings")
    ax.set_title(f"{table.width}-digit iteration distributions, bases "
                 f"{table.bases[0]}-{table.bases[-1]}")
    if len(table.bases) <= 15:
        ax.legend(fontsize="small", ncol=2)
    return _save(fig, path)


def save_cycle_histogram(census: CycleCensus, path: Path | str) -> Path:
    """Cycle count as a function of cycle length, aggregated over the grid."""
    fig, ax = _new_axes()
    lengths = sorted(census.histogram)
    counts = [census.histogram[n] for n in lengths]
    ax.plot(lengths, counts, marker="o", markersize=3, linewidth=1.0, color="tab:red")
    ax.set_xlabel("cycle length")
    ax.set_ylabel("cycles found")
    ax.set_title("cycle-length census")
    return _save(fig, path)


def _trim(row: tuple[int, ...]) -> list[int]:
    out = list(row)
    while out and out[-1] == 0:
        out.pop()
    return out or [0]
