"""Report figures rendered to files next to the delimited outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_MARKERS = "os^vDPX*"


def plot_ber_curves(curves: list[tuple[str, list[dict]]], path) -> None:
    """Semilog BER-vs-SNR overlay; one labelled line per curve."""
    plt.figure(figsize=(6.0, 4.2))
    for i, (label, rows) in enumerate(curves):
        live = [row for row in rows if row["ber"] > 0]  # zero BER cannot be log-scaled
        snr = [row["snr_db"] for row in live]
        ber = [row["ber"] for row in live]
        plt.semilogy(snr, ber, _MARKERS[i % len(_MARKERS)] + "-", label=label)
    plt.grid(True, which="both", linestyle="--", linewidth=0.5)
    plt.xlabel(r"$E_b/N_0$ [dB]")
    plt.ylabel("BER")
    plt.legend()
    plt.tight_layout()
    plt.savefig(path, dpi=150)
    plt.close()


def plot_sweep(series: dict[str, list[tuple[int, int]]], xlabel: str, ylabel: str, path) -> None:
    """Scatter/line sweep, e.g. lifting degree versus column count per row count."""
    plt.figure(figsize=(6.0, 4.2))
    for i, (label, points) in enumerate(sorted(series.items())):
        pts = sorted(points)
        plt.plot([x for x, _ in pts], [y for _, y in pts],
                 _MARKERS[i % len(_MARKERS)] + "-", label=label)
    plt.grid(True, linestyle="--", linewidth=0.5)
    plt.xlabel(xlabel)
    plt.ylabel(ylabel)
    plt.legend()
    plt.tight_layout()
    plt.savefig(path, dpi=150)
    plt.close()
