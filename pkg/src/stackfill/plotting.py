"""PNG drawings: (ne, se) heatmaps of generating polynomials and 01-fillings of
polyominoes.  Uses the non-interactive Agg backend."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .polyomino import Filling, GenPoly, chain_stats  # noqa: E402


def heatmap(poly: GenPoly, path: str, title: str = "") -> str:
    """Counts laid out with ne on the x axis and se on the y axis."""
    size = max([max(k) for k in poly] + [0]) + 1
    grid = [[0] * size for _ in range(size)]
    for (u, v), m in poly.items():
        grid[v][u] = m
    fig, ax = plt.subplots(figsize=(4, 4))
    ax.imshow(grid, origin="lower", cmap="viridis")
    for (u, v), m in poly.items():
        if m:
            ax.text(u, v, str(m), ha="center", va="center", fontsize=7, color="white")
    ax.set_xlabel("ne")
    ax.set_ylabel("se")
    ax.set_xticks(range(size))
    ax.set_yticks(range(size))
    ax.set_title(title or f"{poly.total()} fillings" + ("" if poly.is_symmetric() else ", asymmetric"))
    return _save(fig, path)


def draw_filling(fill: Filling, path: str, title: str = "") -> str:
    w, h = fill.shape.width, fill.shape.height
    fig, ax = plt.subplots(figsize=(0.35 * w + 1, 0.35 * h + 1))
    for r, c in fill.shape.cells:
        ax.add_patch(Rectangle((c - 1, r - 1), 1, 1, fill=False, lw=0.6))
    for r, c in fill.ones:
        ax.plot(c - 0.5, r - 0.5, "ko", ms=4)
    ax.set_xlim(-0.1, w + 0.1)
    ax.set_ylim(-0.1, h + 0.1)
    ax.set_aspect("equal")
    ax.axis("off")
    s = chain_stats(fill)
    ax.set_title(title or f"ne={s.ne} se={s.se}", fontsize=8)
    return _save(fig, path)


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
