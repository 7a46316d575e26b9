"""Matplotlib rendering for the benchmark report path (file output only)."""

from __future__ import annotations

from .dependence import SuccinctnessRow


def plot_succinctness(rows: list[SuccinctnessRow], path: str) -> None:
    """Render formula-size growth curves to an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [row.n for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [row.depend_nodes for row in rows], "o-", label="conditional (linear)")
    ax.plot(ns, [row.expo_nodes for row in rows], "s-", label="box fragment (exponential)")
    translated = [(row.n, row.dagger_nodes) for row in rows if row.dagger_nodes is not None]
    if translated:
        ax.plot([t[0] for t in translated], [t[1] for t in translated],
                "^--", label="translated conditional")
    ax.set_xlabel("basis atoms n")
    ax.set_ylabel("formula nodes")
    ax.set_yscale("log")
    ax.set_xticks(ns)
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
