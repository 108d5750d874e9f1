"""Figures written next to the delimited reports."""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

DPI = 120


def _save(fig, directory, name):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def plot_selfridge(rows, directory):
    """Searched maximum zero-sum-free size against the triangular-number rule."""
    ps = [r["p"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.step(ps, [r["k_formula"] for r in rows], where="post", color="0.6",
            label="greatest k with k(k+1)/2 < p")
    ax.plot(ps, [r["k_search"] for r in rows], "o", color="C0", label="exhaustive search")
    ax.set_xlabel("p")
    ax.set_ylabel("max |A|, A zero-sum free")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, directory, "selfridge.png")


def plot_acr(rows, directory):
    ps = [r["p"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    lo, hi = min(ps), max(ps)
    xs = [lo + (hi - lo) * k / 200 for k in range(201)]
    ax.plot(xs, [-0.5 + (2 * x - 1.75) ** 0.5 for x in xs], color="0.6", lw=1,
            label=r"$-1/2+\sqrt{2p-7/4}$")
    ax.plot(ps, [r["acr_formula"] for r in rows], "s", mfc="none", color="0.3",
            label="least s, s(s+1)/2 >= p-1")
    ax.plot(ps, [r["acr_search"] for r in rows], "o", ms=4, color="C1", label="exhaustive acr")
    ax.set_xlabel("p")
    ax.set_ylabel("asymmetric critical number")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, directory, "acr.png")


def plot_main_theorem(p, by_size, directory):
    """Smallest |Sigma(A)| and |Sigma*(A)| per size against the lower bounds."""
    ds = [r["d"] for r in by_size]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.plot(ds, [r["bound_sigma"] for r in by_size], "-", color="C0", lw=1, label="bound on |Σ|")
    ax.plot(ds, [r["min_sigma"] for r in by_size], "o", color="C0", label="min |Σ(A)|")
    ax.plot(ds, [r["bound_sigma_star"] for r in by_size], "--", color="C3", lw=1,
            label="bound on |Σ*|")
    ax.plot(ds, [r["min_sigma_star"] for r in by_size], "x", color="C3", label="min |Σ*(A)|")
    ax.set_xlabel("|A|")
    ax.set_ylabel("cardinality")
    ax.set_title(f"asymmetric subsets of Z/{p}Z", fontsize=9)
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, directory, f"main_theorem_p{p}.png")
