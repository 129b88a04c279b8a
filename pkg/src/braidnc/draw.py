"""
Chord-diagram rendering of simple elements: punctures on a horizontal line
with nested arcs for each block, written to a file via matplotlib (SVG by
default).
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Arc

from .ncp import NoncrossingPartition


def _block_arcs(block: tuple[int, ...]) -> list[tuple[int, int]]:
    # Consecutive bonds plus the min-max closure arc.
    asc = block[::-1]
    arcs = list(zip(asc, asc[1:]))
    if len(asc) > 2:
        arcs.append((asc[0], asc[-1]))
    return arcs


def chord_diagram(a: NoncrossingPartition, path: str, title: str | None = None) -> str:
    """Render the noncrossing partition and save it; returns the path."""
    n = a.n
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * n), 3.0))
    ax.plot([0.5, n + 0.5], [0, 0], color="black", linewidth=1)
    for i in range(1, n + 1):
        ax.plot([i], [0], marker="o", color="black", markersize=4)
        ax.annotate(str(i), (i, -0.12), ha="center", va="top", fontsize=9)
    for block in a.blocks:
        for lo, hi in _block_arcs(block):
            lo, hi = min(lo, hi), max(lo, hi)
            width = hi - lo
            ax.add_patch(
                Arc(((lo + hi) / 2, 0), width, 0.8 * width, theta1=0, theta2=180,
                    color="tab:blue", linewidth=1.2)
            )
    ax.set_xlim(0, n + 1)
    ax.set_ylim(-0.5, 0.8 * (n - 1) / 2 + 0.5)
    ax.set_aspect("auto")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
