"""Report rendering: delimited tables and matplotlib figures for CLI outputs.

The JSON artifacts stay exact; figures and CSV files are companions for
human inspection, written next to (or instead of) the JSON when requested.
"""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def write_table_csv(table, path: str):
    """Rows: label, dim, one column of exact values per class."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "dim"]
                        + [f"C{i}(size={s},ord={m})"
                           for i, (s, m) in enumerate(zip(table.group.class_sizes,
                                                          table.group.class_orders))])
        for lab, row in zip(table.labels, table.rows):
            writer.writerow([str(lab), int(row.dim())] + [str(v) for v in row.values])


def plot_table(table, path: str):
    """Heatmap of |chi_i(c_j)| with dimensions annotated."""
    mags = np.array([[abs(complex(v)) for v in row.values] for row in table.rows])
    fig, ax = plt.subplots(figsize=(max(4, 0.4 * mags.shape[1]),
                                    max(3, 0.3 * mags.shape[0])))
    im = ax.imshow(mags, cmap="viridis", aspect="auto")
    ax.set_xlabel("conjugacy class")
    ax.set_ylabel("irreducible")
    ax.set_yticks(range(len(table.rows)))
    ax.set_yticklabels([str(lab) for lab in table.labels], fontsize=7)
    ax.set_title(f"|character values| on {table.group.descriptor}")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_search_csv(table, pairs, path: str):
    dims = table.dims
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["small_index", "small_label", "small_dim",
                         "big_index", "big_label", "big_dim", "gap"])
        for i, j in pairs:
            writer.writerow([i, str(table.labels[i]), dims[i],
                             j, str(table.labels[j]), dims[j], dims[j] - dims[i]])


def plot_search(table, pairs, path: str):
    """Scatter of found containment pairs in the (small dim, big dim) plane."""
    dims = table.dims
    fig, ax = plt.subplots(figsize=(5, 4))
    dmax = max(dims) if dims else 1
    ax.plot([0, dmax + 1], [0, dmax + 1], ":", color="gray", linewidth=1,
            label="equal dimensions")
    if pairs:
        xs = [dims[i] for i, _ in pairs]
        ys = [dims[j] for _, j in pairs]
        ax.scatter(xs, ys, s=60, color="crimson", zorder=3,
                   label="contained pair")
    ax.set_xlim(0, dmax + 1)
    ax.set_ylim(0, dmax + 1)
    ax.set_xlabel("dim of contained irreducible")
    ax.set_ylabel("dim of containing irreducible")
    ax.set_title(f"eigenvalue containment pairs on {table.group.descriptor}")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_satake_csv(result, path: str):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "contained"])
        for p, ok in sorted(result.per_prime.items()):
            writer.writerow([p, int(ok)])


def plot_satake(result, tol: float, path: str):
    """Per-prime verdicts with the failing residuals marked against the tolerance."""
    primes = sorted(result.per_prime)
    ok = [p for p in primes if result.per_prime[p]]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.axhline(tol, color="gray", linestyle="--", linewidth=1, label=f"tol={tol:g}")
    if ok:
        ax.scatter(ok, [tol * 0.5] * len(ok), s=8, color="seagreen",
                   label="contained")
    if result.failures:
        xs = [p for p, _ in result.failures]
        ys = [r for _, r in result.failures]
        ax.scatter(xs, ys, s=20, color="crimson", label="failing residual")
    ax.set_yscale("log")
    ax.set_xlabel("prime")
    ax.set_ylabel("matching residual")
    ax.set_title("per-prime containment")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
