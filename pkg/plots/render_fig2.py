#!/usr/bin/env python3
"""Render the sub/superluminal region map with the threshold curve overlaid.

Inputs: the regionmap grid CSV (pump_R, omega_c, class) and the boundary CSV
(pump_R, omega_c_necessary) written by `lambdaprobe regionmap`.  The
superluminal region is drawn dark; the overlaid curve is the closed-form
threshold, which bottoms out at its minimum coupling strength.

Usage:
    render_fig2.py --in GRID_CSV BOUNDARY_CSV --out IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from figcsv import FigureDataError, load_table, numeric  # noqa: E402


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", nargs=2, required=True,
                        metavar=("GRID_CSV", "BOUNDARY_CSV"))
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)

    grid_path, boundary_path = args.inputs
    try:
        _, grid = load_table(grid_path)
        _, boundary = load_table(boundary_path)
        pump = np.array(numeric(grid, "pump_R", grid_path))
        coupling = np.array(numeric(grid, "omega_c", grid_path))
        if "class" not in grid:
            raise FigureDataError(f"{grid_path}: column 'class' not found")
        labels = np.array(grid["class"])
        curve_r = np.array(numeric(boundary, "pump_R", boundary_path))
        curve_w = np.array(numeric(boundary, "omega_c_necessary", boundary_path))
    except (OSError, FigureDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    r_axis = np.unique(pump)
    w_axis = np.unique(coupling)
    dark = np.zeros((w_axis.size, r_axis.size))
    i = np.searchsorted(r_axis, pump)
    j = np.searchsorted(w_axis, coupling)
    dark[j, i] = (labels == "superluminal").astype(float)

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.pcolormesh(r_axis, w_axis, dark, cmap="Greys", vmin=0.0, vmax=1.4,
                  shading="nearest", rasterized=True)
    inside = (curve_w >= w_axis.min()) & (curve_w <= w_axis.max())
    ax.plot(curve_r[inside], curve_w[inside], "k-", lw=1.5,
            label="threshold coupling")
    k_min = int(np.nanargmin(curve_w))
    ax.plot(curve_r[k_min], curve_w[k_min], "wo", mec="k", ms=6,
            label=f"minimum ({curve_r[k_min]:.2f}, {curve_w[k_min]:.2f})")
    ax.set_xlim(r_axis.min(), r_axis.max())
    ax.set_ylim(w_axis.min(), w_axis.max())
    ax.set_xlabel("pump rate (units of gamma)")
    ax.set_ylabel("coupling Rabi frequency (units of gamma)")
    ax.set_title("superluminal region (dark)")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
