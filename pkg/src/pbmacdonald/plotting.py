"""Matplotlib figures for the CLI: skyline drawings and sweep summaries."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .bijection import VerificationReport  # noqa: E402
from .fillings import Filling  # noqa: E402


def _draw_filling(ax, T: Filling, title: str = "") -> None:
    for i in range(1, T.n + 1):
        for r in range(0, T.shape[i - 1] + 1):
            face = "#d9d9d9" if r == 0 else "white"
            ax.add_patch(Rectangle((i - 1, r), 1, 1, facecolor=face, edgecolor="black"))
            ax.text(i - 0.5, r + 0.5, str(T.label(i, r)), ha="center", va="center", fontsize=11)
    ax.set_xlim(-0.2, T.n + 0.2)
    ax.set_ylim(-0.2, T.rows + 1.2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=8)


def fillings_figure(fillings, path: str, captions=None, max_panels: int = 48) -> int:
    """Draw up to ``max_panels`` fillings in a grid; returns the number drawn."""
    shown = list(fillings)[:max_panels]
    count = max(1, len(shown))
    cols = min(count, 6)
    rows = math.ceil(count / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.4 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for k, T in enumerate(shown):
        cap = captions[k] if captions else ""
        _draw_filling(axes.flat[k], T, cap)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return len(shown)


def sweep_figure(reports: dict[str, VerificationReport], path: str) -> None:
    """Bar chart of checks and violations per claim."""
    names = list(reports)
    checked = [reports[c].pairs_checked for c in names]
    failed = [len(reports[c].violations) for c in names]
    fig, ax = plt.subplots(figsize=(max(4, 1.3 * len(names)), 3.5))
    xs = range(len(names))
    ax.bar([x - 0.2 for x in xs], checked, width=0.4, label="checked")
    ax.bar([x + 0.2 for x in xs], failed, width=0.4, label="violations", color="tab:red")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names, rotation=20)
    ax.set_yscale("symlog")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
