#!/usr/bin/env python3
"""Render the power-decline curve family for several decay constants.

Writes one CSV per decay constant plus a combined SVG overlay; by default
everything lands in ./out_figure.
"""

import argparse
from pathlib import Path

from agiecon import TransitionParams, power_curve
from agiecon.formatting import format_number
from agiecon.svg import line_chart

LAMBDAS = (0.5, 1.0, 2.0, 5.0, 10.0)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out_figure"))
    parser.add_argument("--points", type=int, default=1001)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    curves = []
    for lam in LAMBDAS:
        points = power_curve(TransitionParams(w0=1.0, w_inf=1.0, lam=lam), args.points)
        curves.append((f"lambda={lam:g}", [(p.l_agi, p.p_h) for p in points]))
        rows = ["L_AGI,w_h,w_AGI,P_h"] + [
            f"{format_number(p.l_agi)},{format_number(p.w_h)},"
            f"{format_number(p.w_agi)},{format_number(p.p_h)}"
            for p in points
        ]
        path = args.out / f"power_curve_lambda_{lam:g}.csv"
        path.write_text("\n".join(rows) + "\n")
        print(f"wrote {path}")

    chart = line_chart(
        curves,
        title="Human economic power vs AGI labor share",
        x_label="AGI labor share",
        y_label="human share of labor income",
    )
    svg_path = args.out / "power_decline.svg"
    svg_path.write_text(chart)
    print(f"wrote {svg_path}")


if __name__ == "__main__":
    main()
