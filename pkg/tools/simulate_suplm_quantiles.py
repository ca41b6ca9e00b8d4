#!/usr/bin/env python3
"""Regenerate the frozen quantile table used for supLM p-values.

Simulates sup over t in [trim, 1-trim] of ||B0(t)||^2 / (t (1-t)) for a
k-dimensional Brownian bridge B0 on a uniform grid, and writes the
empirical upper quantiles to src/loret/_suplm_table.py.

Usage: python tools/simulate_suplm_quantiles.py [--reps 100000] [--steps 1000]
"""

import argparse
import pathlib

import numpy as np

TRIMS = (0.05, 0.10, 0.15, 0.20, 0.25)
MAX_K = 15
SURVIVAL = (
    0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.25, 0.2, 0.15,
    0.1, 0.075, 0.05, 0.04, 0.03, 0.025, 0.02, 0.015,
    0.01, 0.0075, 0.005, 0.004, 0.003, 0.002, 0.0015, 0.001, 0.0005,
)


def simulate(reps, steps, seed):
    rng = np.random.default_rng(seed)
    t = np.arange(1, steps) / steps
    denom = (t * (1.0 - t)).astype(np.float32)
    masks = {trim: (t >= trim) & (t <= 1.0 - trim) for trim in TRIMS}
    sups = {trim: np.empty((reps, MAX_K), dtype=np.float32) for trim in TRIMS}
    batch = 500
    done = 0
    while done < reps:
        b = min(batch, reps - done)
        incr = rng.standard_normal((b, steps, MAX_K), dtype=np.float32)
        incr /= np.sqrt(np.float32(steps))
        w = np.cumsum(incr, axis=1)
        bridge = w[:, :-1, :] - t[None, :, None].astype(np.float32) * w[:, -1:, :]
        sq = np.cumsum(bridge**2, axis=2)  # cumulative over components -> all k
        q = sq / denom[None, :, None]
        for trim, mask in masks.items():
            sups[trim][done:done + b] = q[:, mask, :].max(axis=1)
        done += b
        if done % 10000 == 0:
            print(f"  {done}/{reps}")
    return sups


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=100000)
    ap.add_argument("--steps", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20260810)
    args = ap.parse_args()

    sups = simulate(args.reps, args.steps, args.seed)
    out = pathlib.Path(__file__).resolve().parents[1] / "src/loret/_suplm_table.py"
    lines = [
        '"""Frozen Monte Carlo quantiles of the trimmed supLM limit process.',
        "",
        f"Generated by tools/simulate_suplm_quantiles.py with reps={args.reps},",
        f"steps={args.steps}, seed={args.seed}. Do not edit by hand.",
        '"""',
        "",
        f"SURVIVAL = {tuple(SURVIVAL)!r}",
        "",
        "QUANTILES = {",
    ]
    for trim in TRIMS:
        lines.append(f"    {trim}: {{")
        for k in range(1, MAX_K + 1):
            qs = np.quantile(
                sups[trim][:, k - 1].astype(np.float64),
                [1.0 - s for s in SURVIVAL],
            )
            vals = ", ".join(f"{v:.4f}" for v in qs)
            lines.append(f"        {k}: ({vals}),")
        lines.append("    },")
    lines.append("}")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
