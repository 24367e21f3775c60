"""Matplotlib figure rendering for the CLI report paths.

Figures are written to files next to the delimited output; nothing is shown
interactively (Agg backend, import kept local so library users never pay
for it).
"""

from __future__ import annotations


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def exponent_figure(rows: list[tuple[float, float, float]], path: str, cap: float) -> None:
    """One curve per t from (epsilon, t, E) rows."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ts = sorted({t for _, t, _ in rows})
    for t in ts:
        pts = sorted((eps, e) for eps, tt, e in rows if tt == t)
        ax.plot([x for x, _ in pts], [y for _, y in pts], label=f"t = {t:g}")
    ax.set_xlabel(r"rate gap $\varepsilon$")
    ax.set_ylabel("error exponent")
    ax.set_title(f"Concatenation error exponent, C = {cap:g}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def probe_figure(report, path: str) -> None:
    """Scatter of measured (size, ops) with the fitted line, drawn in the
    space the model was fitted in."""
    import numpy as np

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = np.array([x for x, _ in report.points], dtype=float)
    ys = np.array([y for _, y in report.points], dtype=float)
    grid = np.linspace(xs.min(), xs.max(), 200)
    if report.model == "linear":
        ax.plot(grid, report.slope * grid + report.intercept, "--", color="gray")
        ax.set_ylabel("decode ops")
    elif report.model == "exp2":
        ax.plot(grid, 2.0 ** (report.slope * grid + report.intercept), "--", color="gray")
        ax.set_yscale("log", base=2)
        ax.set_ylabel("decode ops (log2 scale)")
    else:  # loglog
        ax.plot(
            grid,
            np.exp(report.slope * np.log(grid) + report.intercept),
            "--",
            color="gray",
        )
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_ylabel("decode ops")
    ax.plot(xs, ys, "o")
    ax.set_xlabel("size")
    ax.set_title(
        f"{report.model} fit: slope {report.slope:.4g}, R^2 = {report.r_squared:.4f}"
    )
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
