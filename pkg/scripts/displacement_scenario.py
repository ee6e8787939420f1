#!/usr/bin/env python3
"""Run one displacement scenario per adoption path and print a summary.

Shows how the human wage, both power indices and the wage bill evolve as
AGI absorbs the labor share, and where each run crosses the collapse
threshold.
"""

import argparse

from agiecon import (
    AdoptionPath,
    ModelIIIParams,
    ScenarioConfig,
    TransitionParams,
    detect_collapse,
    run_scenario,
)

INITIAL = ModelIIIParams(
    A=1.0, K=1.0, K_AGI=1.0, L_h=1.0, L_AGI=0.0,
    alpha=0.3, gamma=0.2, beta1=0.4, beta2=0.0,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--horizon", type=int, default=20)
    parser.add_argument("--growth", type=float, default=0.05)
    parser.add_argument("--threshold", type=float, default=0.5)
    args = parser.parse_args()

    paths = {
        "linear": AdoptionPath.linear(),
        "logistic": AdoptionPath.logistic(k=0.6, t0=args.horizon / 2),
        "exp_saturating": AdoptionPath.exp_saturating(r=0.3),
    }
    for name, path in paths.items():
        cfg = ScenarioConfig(
            horizon=args.horizon,
            initial_model3=INITIAL,
            adoption=path,
            agi_capital_growth=args.growth,
            transition=TransitionParams(w0=1.0, w_inf=1.0, lam=4.0),
            collapse_threshold=args.threshold,
        )
        series = run_scenario(cfg)
        step = detect_collapse(series, args.threshold)
        print(f"== {name} (horizon={args.horizon}, growth={args.growth:g})")
        print("   t      s      w_h   p_h_el  p_h_tr  wage_bill")
        shown = series[:: max(1, args.horizon // 5)]
        if shown[-1].t != series[-1].t:
            shown.append(series[-1])
        for record in shown:
            print(
                f"  {record.t:3d}  {record.s:5.3f}  {record.w_h:7.4f}"
                f"  {record.p_h_elastic:6.4f}  {record.p_h_transition:6.4f}"
                f"  {record.wage_bill:9.4f}"
            )
        crossing = "never" if step is None else f"step {step}"
        print(f"   wage collapse below {args.threshold:g} * w_h(0): {crossing}\n")


if __name__ == "__main__":
    main()
