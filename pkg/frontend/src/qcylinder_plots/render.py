"""Static figure rendering from qcylinder CSV datasets.

Read-only consumers of the CLI's CSV contracts: every number in a figure
comes from the file.  Schema mismatches and empty data abort with a nonzero
exit before any image is written.

Entry points:
    render_density <csv> <png>
    render_jumps <csv> <png> --alpha <radians>
    render_trajectory <csv> <png>
"""

import argparse
import csv
import math
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

DENSITY_HEADER = ["t", "phi", "l", "p"]
JUMPS_HEADER = ["k", "t_star", "phi_minus", "phi_plus", "l", "delta_phi"]
TRAJECTORY_HEADER = ["t", "phi", "l", "absU"]


class SchemaError(ValueError):
    """CSV header or contents do not match the emitting subcommand's contract."""


def load_csv(path, expected_header):
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise SchemaError(str(exc)) from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if header != expected_header:
            raise SchemaError(f"{path}: header {header} does not match {expected_header}")
        try:
            rows = [[float(x) for x in row] for row in reader if row]
        except ValueError as exc:
            raise SchemaError(f"{path}: non-numeric cell ({exc})") from exc
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    if any(len(row) != len(expected_header) for row in rows):
        raise SchemaError(f"{path}: ragged rows")
    return np.array(rows)


def render_density(csv_path, png_path):
    """Front-view heatmap: phi horizontal, l vertical, color = probability density."""
    data = load_csv(csv_path, DENSITY_HEADER)
    phis = np.unique(data[:, 1])
    ls = np.unique(data[:, 2])
    if len(phis) * len(ls) != len(data):
        raise SchemaError(f"{csv_path}: rows do not form a complete (phi, l) grid")
    grid = data[:, 3].reshape(len(phis), len(ls))
    t = data[0, 0]

    fig, ax = plt.subplots(figsize=(7, 4))
    mesh = ax.pcolormesh(phis, ls, grid.T, cmap="viridis", shading="nearest")
    fig.colorbar(mesh, ax=ax, label="probability density")
    ax.set_xlabel(r"$\varphi$ [rad]")
    ax.set_ylabel(r"$l$")
    ax.set_xlim(0, 2 * math.pi)
    ax.set_title(f"probability density at t = {t:.6g}")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def render_jumps(csv_path, png_path, alpha=None):
    """Jump points on the unrolled cylinder: pre- and post-jump sides styled apart."""
    data = load_csv(csv_path, JUMPS_HEADER)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.scatter(data[:, 2], data[:, 4], s=8, marker="o", alpha=0.6, label=r"$\varphi_-$ (before)")
    ax.scatter(data[:, 3], data[:, 4], s=8, marker="x", alpha=0.6, label=r"$\varphi_+$ (after)")
    if alpha is not None:
        ref = (alpha - math.pi / 2) % (2 * math.pi)
        ax.axvline(ref, color="k", linestyle="--", linewidth=1, label=r"$\alpha - \pi/2$")
    ax.set_xlabel(r"$\varphi$ [rad]")
    ax.set_ylabel(r"$l$")
    ax.set_xlim(0, 2 * math.pi)
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(f"phase-jump points ({len(data)} jumps)")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def render_trajectory(csv_path, png_path):
    """Mean-trajectory polyline (phi(t), l(t)), broken at wraps and jumps."""
    data = load_csv(csv_path, TRAJECTORY_HEADER)
    phi = data[:, 1]
    l = data[:, 2]
    # break the polyline where consecutive angles differ by more than pi/2,
    # so neither the 2pi wrap nor a genuine jump draws a spurious chord
    breaks = np.where(np.abs(np.diff(phi)) > math.pi / 2)[0]
    segments = np.split(np.arange(len(phi)), breaks + 1)

    fig, ax = plt.subplots(figsize=(7, 4))
    for seg in segments:
        if len(seg) > 1:
            ax.plot(phi[seg], l[seg], color="tab:blue", linewidth=0.8)
    ax.set_xlabel(r"$\varphi$ [rad]")
    ax.set_ylabel(r"$l$")
    ax.set_xlim(0, 2 * math.pi)
    ax.set_title("quantum mean trajectory")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def _run(renderer, argv, extra_args=()):
    parser = argparse.ArgumentParser()
    parser.add_argument("csv")
    parser.add_argument("png")
    for name, kwargs in extra_args:
        parser.add_argument(name, **kwargs)
    args = parser.parse_args(argv)
    kwargs = {name.lstrip("-"): getattr(args, name.lstrip("-")) for name, _ in extra_args}
    try:
        renderer(args.csv, args.png, **kwargs)
    except SchemaError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1
    return 0


def main_density(argv=None):
    return _run(render_density, argv)


def main_jumps(argv=None):
    return _run(
        render_jumps,
        argv,
        extra_args=[("--alpha", {"type": float, "help": "coherent-state angle (radians)"})],
    )


def main_trajectory(argv=None):
    return _run(render_trajectory, argv)
