"""Figure output for the summary table."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_table(rows: list[dict], path) -> Path:
    """Log-scale bars of constructed |V| beside the matching upper bound.

    Only rows with both numbers are drawn.
    """
    drawn = [r for r in rows if r.get("constructed") is not None and r.get("bound") is not None]
    labels = [f"{r['class']}\nk={r['k']}" for r in drawn]
    built = [float(r["constructed"]) for r in drawn]
    bound = [float(r["bound"]) for r in drawn]

    width = 0.4
    xs = range(len(drawn))
    fig, ax = plt.subplots(figsize=(max(6.0, 0.9 * len(drawn) + 2), 4.5))
    ax.bar([x - width / 2 for x in xs], built, width, label="constructed |V|")
    ax.bar([x + width / 2 for x in xs], bound, width, label="upper bound")
    ax.set_yscale("log")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, fontsize=7, rotation=45, ha="right")
    ax.set_ylabel("vertices")
    if drawn:
        ax.set_title(f"max degree {drawn[0]['delta']}")
    ax.legend()
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out
