#!/usr/bin/env python3
"""Render dispersion and absorption versus probe detuning, one curve per CSV.

Inputs are `lambdaprobe sweep --preset fig3` outputs (or any detuning sweeps);
curves are labelled by their pinned coupling strength and drawn solid,
dashed, dash-dotted in input order.

Usage:
    render_fig3.py --in CSV [CSV ...] --out IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from figcsv import LINESTYLES, FigureDataError, curve_label, load_table, numeric  # noqa: E402


def render_detuning_sweeps(inputs, out, label_key):
    """Two panels (Re chi, Im chi) versus probe detuning."""
    curves = []
    for path in inputs:
        config, columns = load_table(path)
        curves.append((
            curve_label(config, label_key),
            numeric(columns, "delta_p", path),
            numeric(columns, "chi_re", path),
            numeric(columns, "chi_im", path),
        ))

    fig, (ax_re, ax_im) = plt.subplots(2, 1, figsize=(6.0, 7.0), sharex=True)
    for k, (label, detuning, chi_re, chi_im) in enumerate(curves):
        style = LINESTYLES[k % len(LINESTYLES)]
        ax_re.plot(detuning, chi_re, style, label=label)
        ax_im.plot(detuning, chi_im, style, label=label)
    ax_re.set_ylabel("Re chi (dispersion)")
    ax_im.set_ylabel("Im chi (absorption)")
    ax_im.set_xlabel("probe detuning (units of gamma)")
    ax_re.axhline(0.0, color="0.7", lw=0.6)
    ax_im.axhline(0.0, color="0.7", lw=0.6)
    ax_re.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)


def main(argv=None, label_key="omega_c") -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="CSV")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        render_detuning_sweeps(args.inputs, args.out, label_key)
    except (OSError, FigureDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
