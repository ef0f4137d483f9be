#!/usr/bin/env python3
"""Render the group index versus coupling strength and versus pump rate.

Takes the six `lambdaprobe sweep --preset fig5a/--preset fig5b` CSVs in any
order: files swept over omega_c land in the left panel (curves labelled by
pump rate), files swept over pump_R in the right panel (labelled by
coupling).  Curves are solid, dashed, dash-dotted per panel in input order.

Usage:
    render_fig5.py --in CSV [CSV ...] --out IMAGE
"""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from figcsv import LINESTYLES, FigureDataError, curve_label, load_table, numeric  # noqa: E402

_PANELS = {
    "omega_c": ("coupling Rabi frequency (units of gamma)", "pump_R"),
    "pump_R": ("pump rate (units of gamma)", "omega_c"),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="CSV")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)

    panels = {"omega_c": [], "pump_R": []}
    try:
        for path in args.inputs:
            config, columns = load_table(path)
            variable = config.get("variable", "")
            if variable not in panels:
                raise FigureDataError(
                    f"{path}: not a coupling or pump sweep (variable={variable!r})")
            label_key = _PANELS[variable][1]
            panels[variable].append((
                curve_label(config, label_key),
                numeric(columns, variable, path),
                numeric(columns, "ng_minus_1", path),
            ))
        if not panels["omega_c"] and not panels["pump_R"]:
            raise FigureDataError("no usable sweep files")
    except (OSError, FigureDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    active = [v for v in ("omega_c", "pump_R") if panels[v]]
    fig, axes = plt.subplots(1, len(active), figsize=(5.5 * len(active), 4.2))
    if len(active) == 1:
        axes = [axes]
    for ax, variable in zip(axes, active):
        for k, (label, x, ng) in enumerate(panels[variable]):
            ax.plot(x, ng, LINESTYLES[k % len(LINESTYLES)], label=label)
        ax.axhline(0.0, color="0.7", lw=0.6)
        ax.set_xlabel(_PANELS[variable][0])
        ax.set_ylabel("group index - 1")
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
