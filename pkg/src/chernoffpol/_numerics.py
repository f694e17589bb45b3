"""Scalar search routines shared by the overlap minimizer and the crossing finder."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from chernoffpol.errors import NumericalError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f: Callable[[float], float], lo: float, hi: float,
                   tol: float = 1e-10, max_iter: int = 200) -> tuple[float, float, int]:
    """Minimize a unimodal ``f`` on ``[lo, hi]``.

    Returns ``(x_min, f_min, n_evals)``. Stops once the bracket is narrower
    than ``tol``.
    """
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    n = 2
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        n += 1
    else:
        raise NumericalError(f"golden-section search did not reach tol={tol} in {max_iter} steps")
    if fc <= fd:
        return c, fc, n
    return d, fd, n


def grid_golden_min(f: Callable[[float], float], n_grid: int = 11,
                    tol: float = 1e-10) -> tuple[float, float, int]:
    """Minimize ``f`` on [0, 1] by a uniform grid followed by golden-section refinement.

    The grid includes both endpoints, and the endpoints stay candidates for
    the final minimum, so a minimizer sitting on the boundary is found
    exactly rather than approached from inside.
    """
    grid = np.linspace(0.0, 1.0, n_grid)
    values = [f(float(s)) for s in grid]
    i = int(np.argmin(values))
    lo = float(grid[max(i - 1, 0)])
    hi = float(grid[min(i + 1, n_grid - 1)])
    x, fx, n = golden_section(f, lo, hi, tol=tol)
    best = min(
        [(fx, x), (values[0], 0.0), (values[-1], 1.0), (values[i], float(grid[i]))],
        key=lambda t: t[0],
    )
    return best[1], best[0], n + n_grid


def bisect(f: Callable[[float], float], lo: float, hi: float,
           xtol: float = 1e-8, max_iter: int = 200) -> tuple[float, tuple[float, float]]:
    """Root of ``f`` on ``[lo, hi]`` by bisection; returns the midpoint and final bracket."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo, (lo, lo)
    if fhi == 0.0:
        return hi, (hi, hi)
    if np.sign(flo) == np.sign(fhi):
        raise NumericalError(
            f"no sign change on [{lo}, {hi}]: f(lo)={flo:.6g}, f(hi)={fhi:.6g}")
    for _ in range(max_iter):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid, (mid, mid)
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    else:
        raise NumericalError(f"bisection did not reach xtol={xtol} in {max_iter} steps")
    return 0.5 * (lo + hi), (lo, hi)
