"""Deterministic scalar maximization: coarse grid followed by golden section."""

from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(f, lo, hi, tol=1e-10):
    """Maximize a unimodal ``f`` on [lo, hi] to an interval width of ``tol``.

    Returns ``(x, f(x))`` for the best point evaluated.
    """
    lo, hi = min(lo, hi), max(lo, hi)
    h = hi - lo
    if h <= tol:
        x = 0.5 * (lo + hi)
        return x, f(x)
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = lo + INV_PHI2 * h
    d = lo + INV_PHI * h
    fc = f(c)
    fd = f(d)
    for _ in range(n):
        if fc > fd:
            hi, d, fd = d, c, fc
            h *= INV_PHI
            c = lo + INV_PHI2 * h
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            h *= INV_PHI
            d = lo + INV_PHI * h
            fd = f(d)
    return (c, fc) if fc > fd else (d, fd)


def grid_golden_max(f, lo, hi, n_grid=128, tol=1e-10):
    """Grid search over [lo, hi] then golden-section refinement.

    The grid guards against picking a secondary local maximum; the bracket
    handed to the golden search is the pair of grid cells around the best
    grid point.
    """
    xs = np.linspace(lo, hi, n_grid)
    vals = [f(float(x)) for x in xs]
    i = int(np.argmax(vals))
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, n_grid - 1)])
    x, fx = golden_section_max(f, a, b, tol)
    if vals[i] > fx:
        return float(xs[i]), vals[i]
    return x, fx
