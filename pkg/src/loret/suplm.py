"""P-values for the trimmed supLM parameter-instability statistic.

The reference distribution is sup over t in [trim, 1-trim] of
||B0(t)||^2 / (t(1-t)) for a k-dimensional Brownian bridge B0. Its
upper quantiles are tabulated in ``_suplm_table`` (frozen Monte Carlo,
100000 paths on a 1000-step grid; regenerate with
tools/simulate_suplm_quantiles.py). P-values interpolate the table
log-linearly in the statistic; beyond the table an exponential tail
fitted to the outermost grid points is used, matching the e^{-u/2}
decay of the limit distribution.

Tabulated trims are {0.05, 0.10, 0.15, 0.20, 0.25}; a requested trim
snaps to the nearest tabulated one.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._suplm_table import QUANTILES, SURVIVAL

_TAIL_POINTS = 8
MAX_K = max(next(iter(QUANTILES.values())).keys())


@lru_cache(maxsize=None)
def _interp_data(k, trim):
    trims = sorted(QUANTILES)
    nearest = min(trims, key=lambda t: abs(t - trim))
    if k not in QUANTILES[nearest]:
        raise ValueError(
            f"supLM table covers 1..{MAX_K} parameters, requested {k}"
        )
    q = np.asarray(QUANTILES[nearest][k], dtype=np.float64)
    logp = np.log(np.asarray(SURVIVAL, dtype=np.float64))
    # exponential tail log p = a + b u fitted on the last grid points
    u = q[-_TAIL_POINTS:]
    lp = logp[-_TAIL_POINTS:]
    b, a = np.polyfit(u, lp, 1)
    return q, logp, float(a), float(min(b, -1e-6))


def suplm_pvalue(stat, k, trim=0.1):
    """Survival probability of the trimmed supLM limit at ``stat``."""
    if stat <= 0.0:
        return 1.0
    q, logp, a, b = _interp_data(int(k), float(trim))
    if stat <= q[0]:
        # linear between (0, 1) and the first tabulated quantile
        frac = stat / q[0]
        return float(1.0 + frac * (np.exp(logp[0]) - 1.0))
    if stat >= q[-1]:
        return float(np.exp(max(a + b * stat, -700.0)))
    lp = np.interp(stat, q, logp)
    return float(np.exp(lp))
