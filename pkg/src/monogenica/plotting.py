"""Figure rendering for the CLI report path.

Opt-in (``--plot``): every figure is written next to the delimited output,
never shown interactively.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["save_gram_heatmap", "save_decay_curve", "save_residual_chart"]

_FIGSIZE = (6.0, 4.2)


def save_gram_heatmap(labels: list[str], magnitude: np.ndarray, path: str) -> None:
    """Heatmap of |entries| of a Gram matrix on a log color scale."""
    fig, ax = plt.subplots(figsize=(5.4, 4.8))
    floor = 1e-16
    img = ax.imshow(np.log10(np.maximum(np.abs(magnitude), floor)), cmap="viridis")
    ax.set_xticks(range(len(labels)))
    ax.set_yticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_yticklabels(labels, fontsize=6)
    fig.colorbar(img, ax=ax, label="log10 |entry|")
    ax.set_title("Gram matrix")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_decay_curve(levels: list[int], residuals: list[float], path: str) -> None:
    """Truncation-error decay of a series expansion."""
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    positive = [max(r, 1e-18) for r in residuals]
    ax.semilogy(levels, positive, marker="o")
    ax.set_xlabel("truncation degree")
    ax.set_ylabel("L2 residual")
    ax.set_title("Truncation error")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_residual_chart(
    names: list[str], residuals: list[float], tolerances: list[float], path: str
) -> None:
    """Verification residuals against their tolerances."""
    fig, ax = plt.subplots(figsize=(7.0, 0.35 * len(names) + 1.6))
    y = np.arange(len(names))
    ax.barh(y, [max(r, 1e-18) for r in residuals], color="tab:blue", label="residual")
    ax.plot(tolerances, y, "r|", markersize=12, label="tolerance")
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xscale("log")
    ax.invert_yaxis()
    ax.legend(loc="lower right", fontsize=7)
    ax.set_title("Verification residuals")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
