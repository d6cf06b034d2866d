"""Matplotlib renderers for the report path.

Figures are written straight to files (Agg backend); the CLI report command
places them next to the delimited output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .landau import LandauSpectrumReport
from .oracle import NumericSpectrumResult


def save_spectrum_figure(report: LandauSpectrumReport, path) -> str:
    """Level diagram: mu_q with von Neumann dimensions, boundary mu_m dashed."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    qs = [lv.q for lv in report.levels]
    mus = [float(lv.mu) for lv in report.levels]
    dims = [float(lv.dim_tau) for lv in report.levels]
    ax.plot(qs, mus, "o-", color="tab:blue", label=r"$\mu_q$")
    for q, mu, dim in zip(qs, mus, dims):
        ax.annotate(f"dim={dim:g}", (q, mu), textcoords="offset points", xytext=(8, -4))
    ax.axhline(
        float(report.boundary_mu),
        ls="--",
        color="tab:red",
        label=r"$\mu_m$ (isolation not certified)",
    )
    ax.set_xlabel("level index q")
    ax.set_ylabel("eigenvalue")
    s = report.surface
    ax.set_title(f"Landau levels: g={s.g}, theta={s.theta}, m={report.m}")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def save_oracle_figure(result: NumericSpectrumResult, path) -> str:
    """Two panels: numeric vs analytic levels, and best relative error per q."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.0, 4.2))
    qs = [b.q for b in result.best]
    ax1.plot(qs, [b.analytic for b in result.best], "k_", ms=22, label="analytic")
    ax1.plot(qs, [b.numeric for b in result.best], "o", color="tab:blue", label="numeric")
    ax1.axhline(result.continuum_edge, ls=":", color="tab:red", label="continuum edge")
    ax1.set_xlabel("level index q")
    ax1.set_ylabel("eigenvalue")
    ax1.set_title(f"radial solver vs closed form (beta={result.beta:g})")
    ax1.legend(loc="best")
    errors = [max(b.rel_error, 1e-16) for b in result.best]
    ax2.bar(qs, errors, color="tab:blue")
    ax2.axhline(result.rel_tol, ls="--", color="tab:red", label="tolerance")
    ax2.set_yscale("log")
    ax2.set_xlabel("level index q")
    ax2.set_ylabel("best relative error")
    ax2.set_title("match quality per level")
    ax2.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)
