#!/usr/bin/env python3
"""Sweep the EM field-tensor invariance residual over regulator and step.

Writes a plot-ready CSV (epsilon, h, field_residual, transport_residual) for
a fixed random map/pair so the ladder extrapolation and the h-saturation are
visible.

Usage: python scripts/sweep_em_residuals.py [--seed N] [--out sweep.csv]
"""

import argparse
import csv
import sys

import numpy as np

from confvac import AcceleratedFrameForm, interval, verify_em_invariance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20250)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    while True:
        alpha = rng.uniform(-0.5, 0.5, 4)
        if np.linalg.norm(alpha) > 0.5:
            continue
        form = AcceleratedFrameForm(alpha, rng.uniform(0.5, 2.0))
        x, xp = rng.uniform(-1, 1, (2, 4))
        if form.denominator(x) < 0.25 or form.denominator(xp) < 0.25:
            continue
        if interval(x, xp) > -0.4:
            continue
        break

    rows = [("epsilon", "h", "field_residual", "transport_residual")]
    for eps in (1e-1, 3e-2, 1e-2, 3e-3):
        for h in (1e-3, 3e-4, 1e-4):
            rep = verify_em_invariance(form, x, xp, epsilon=eps, h=h)
            rows.append((eps, h, rep.field_residual, rep.transport_residual))
            print(f"eps={eps:8.1e} h={h:8.1e}  field={rep.field_residual:.3e}  "
                  f"transport={rep.transport_residual:.3e}")

    if args.out:
        with open(args.out, "w", newline="") as fh:
            csv.writer(fh).writerows(rows)
        print("wrote", args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
