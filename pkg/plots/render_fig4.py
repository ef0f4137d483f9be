#!/usr/bin/env python3
"""Render dispersion and absorption versus probe detuning for varied pump rates.

Same layout as render_fig3.py but the curves are labelled by their pinned
pump rate; feed it `lambdaprobe sweep --preset fig4` outputs.

Usage:
    render_fig4.py --in CSV [CSV ...] --out IMAGE
"""

from render_fig3 import main

if __name__ == "__main__":
    raise SystemExit(main(label_key="pump_R"))
