"""Chernoff quantum degree of polarization.

The degree is 1 - max over unpolarized sigma of min over s of
Tr(rho**s sigma**(1-s)). The outer maximum runs over the sector weights pi
of sigma = sum_N pi_N P_N/(N+1). The inner min is always taken first for a
fixed candidate (max-min order, never swapped).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from chernoffpol._numerics import grid_golden_min
from chernoffpol.discrimination import CLIP_REL, N_GRID, S_TOL, SOverlapResult, minimize_s_overlap, support_power
from chernoffpol.states import (
    BellDiagonalParams,
    DensityOperator,
    UnpolarizedSpec,
    unpolarized_state,
)

STEP_START = 0.25
STEP_MIN = 1e-5


@dataclass(frozen=True)
class PolarizationResult:
    degree: float
    best_pi: UnpolarizedSpec
    s_star: float
    diagnostics: dict = field(default_factory=dict)


def _inner(rho: DensityOperator, pi: np.ndarray) -> SOverlapResult:
    sigma = unpolarized_state(rho.basis, UnpolarizedSpec(tuple(pi)))
    return minimize_s_overlap(rho, sigma)


def _normalized(pi: np.ndarray) -> np.ndarray:
    pi = np.clip(pi, 0.0, None)
    return pi / pi.sum()


def degree_chernoff(rho: DensityOperator) -> PolarizationResult:
    """Degree of polarization by direct max-min optimization.

    Only sectors carrying weight in ``rho`` get nonzero pi. For a single
    support sector the optimum is that vertex (pi_N**(1-s) <= 1). Otherwise
    candidates are the uniform weights, every vertex and the sector weights
    of ``rho``; the best is refined by pairwise mass transfers on the simplex
    with step halving from 0.25 down to 1e-5. The outer objective is concave
    in pi (a minimum of concave functions), so local refinement reaches the
    global maximum.
    """
    n_sectors = rho.basis.n_max + 1
    support = rho.op.support_sectors()
    diag = {"outer_evaluations": 0, "inner_evaluations": 0, "refinement_levels": 0}

    def evaluate(pi):
        res = _inner(rho, pi)
        diag["outer_evaluations"] += 1
        diag["inner_evaluations"] += res.evaluations
        return res

    def vertex(n):
        pi = np.zeros(n_sectors)
        pi[n] = 1.0
        return pi

    if len(support) == 1:
        best_pi = vertex(support[0])
        best = evaluate(best_pi)
    else:
        uniform = np.zeros(n_sectors)
        uniform[support] = 1.0 / len(support)
        own = np.zeros(n_sectors)
        own[support] = rho.sector_weights()[support]
        candidates = [uniform, _normalized(own)] + [vertex(n) for n in support]
        scored = [(evaluate(c), c) for c in candidates]
        best, best_pi = max(scored, key=lambda t: t[0].q_star)

        step = STEP_START
        while step >= STEP_MIN:
            diag["refinement_levels"] += 1
            improved = True
            while improved:
                improved = False
                trial_best = None
                for i, j in permutations(support, 2):
                    h = min(step, best_pi[i])
                    if h <= 0.0:
                        continue
                    trial = best_pi.copy()
                    trial[i] -= h
                    trial[j] += h
                    res = evaluate(_normalized(trial))
                    if res.q_star > best.q_star and (trial_best is None or res.q_star > trial_best[0].q_star):
                        trial_best = (res, _normalized(trial))
                if trial_best is not None:
                    best, best_pi = trial_best
                    improved = True
            step /= 2.0

    degree = min(max(1.0 - best.q_star, 0.0), 1.0)
    return PolarizationResult(
        degree=degree,
        best_pi=UnpolarizedSpec(tuple(best_pi)),
        s_star=best.s_star,
        diagnostics=diag,
    )


def min_overlap_bell_diagonal(p: BellDiagonalParams) -> SOverlapResult:
    """min over s of (1/4)**(1-s) (alpha**s + beta**s + gamma**s + delta**s)."""
    w = np.array(p.as_tuple())
    w[w <= CLIP_REL * w.max()] = 0.0

    def q(s: float) -> float:
        return float(0.25 ** (1.0 - s) * support_power(w, s).sum())

    s, val, n = grid_golden_min(q, n_grid=N_GRID, tol=S_TOL)
    return SOverlapResult(q_star=val, s_star=s, evaluations=n)


def degree_chernoff_bell_diagonal(p: BellDiagonalParams) -> float:
    return min(max(1.0 - min_overlap_bell_diagonal(p).q_star, 0.0), 1.0)
