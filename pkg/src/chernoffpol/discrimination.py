"""Two-state discrimination: s-overlap, quantum Chernoff bound, trace norm, k-copy error.

Fractional powers act on the spectrum of each sector block. Zero eigenvalues
follow the support convention: 0**s == 0 for every s in [0, 1], including
s == 0, so that rho**0 is the projector onto the support of rho. Spectrum
values below ``CLIP_REL`` times the largest eigenvalue count as exact zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from chernoffpol._numerics import grid_golden_min
from chernoffpol.errors import InfiniteExponent, ValidationError
from chernoffpol.fock_space import SectorOperator
from chernoffpol.states import DensityOperator

CLIP_REL = 1e-12
S_TOL = 1e-10
N_GRID = 11
ORTHOGONAL_TOL = 1e-14
MAX_TENSOR_DIM = 256


@dataclass(frozen=True)
class SOverlapResult:
    q_star: float
    s_star: float
    evaluations: int


def _spectrum(rho: DensityOperator) -> list[tuple[np.ndarray, np.ndarray]]:
    """Clipped eigenpairs of every sector block."""
    pairs = [np.linalg.eigh(b) for b in rho.blocks]
    top = max(float(w.max()) for w, _ in pairs)
    cut = CLIP_REL * top
    return [(np.where(w > cut, w, 0.0), v) for w, v in pairs]


def support_power(w: np.ndarray, s: float) -> np.ndarray:
    """Elementwise w**s with 0**s := 0 for all s (support convention)."""
    out = np.zeros_like(w)
    pos = w > 0.0
    out[pos] = w[pos] ** s
    return out


def _same_basis(rho: DensityOperator, zeta: DensityOperator):
    if rho.basis != zeta.basis:
        raise ValidationError(
            f"basis mismatch: n_max={rho.basis.n_max} vs n_max={zeta.basis.n_max}")


def overlap_function(rho: DensityOperator, zeta: DensityOperator):
    """Return ``s -> Tr(rho**s zeta**(1-s))``.

    Both spectra are decomposed once. With rho = sum_i l_i |u_i><u_i| and
    zeta = sum_j m_j |v_j><v_j| the trace is sum_ij l_i**s m_j**(1-s) |<u_i|v_j>|**2,
    summed over sectors where both states have weight.
    """
    _same_basis(rho, zeta)
    terms = []
    for (lam, u), (mu, v) in zip(_spectrum(rho), _spectrum(zeta)):
        keep_l, keep_m = lam > 0, mu > 0
        if not keep_l.any() or not keep_m.any():
            continue
        overlap = np.abs(u[:, keep_l].conj().T @ v[:, keep_m]) ** 2
        terms.append((lam[keep_l], mu[keep_m], overlap))

    def q(s: float) -> float:
        return float(sum(support_power(l, s) @ w @ support_power(m, 1.0 - s) for l, m, w in terms))

    return q


def _check_s(s: float):
    if not 0.0 <= s <= 1.0:
        raise ValidationError(f"s must lie in [0, 1], got {s!r}")


def s_overlap(rho: DensityOperator, zeta: DensityOperator, s: float) -> float:
    _check_s(s)
    return overlap_function(rho, zeta)(s)


def minimize_s_overlap(rho: DensityOperator, zeta: DensityOperator) -> SOverlapResult:
    """min over s in [0, 1] of Tr(rho**s zeta**(1-s)).

    s -> ln Q_s is convex, so a grid-seeded golden-section search finds the
    global minimum; the endpoints are evaluated explicitly.
    """
    q = overlap_function(rho, zeta)
    s, val, n = grid_golden_min(q, n_grid=N_GRID, tol=S_TOL)
    return SOverlapResult(q_star=max(val, 0.0), s_star=s, evaluations=n)


def chernoff_bound(rho: DensityOperator, zeta: DensityOperator) -> float:
    """xi_QCB = -ln min_s Tr(rho**s zeta**(1-s)).

    Raises :class:`InfiniteExponent` when the supports are orthogonal.
    """
    res = minimize_s_overlap(rho, zeta)
    if res.q_star <= ORTHOGONAL_TOL:
        raise InfiniteExponent("orthogonal supports: infinite exponent")
    # q_star can exceed 1 by round-off for identical states
    return max(-math.log(res.q_star), 0.0)


def trace_norm(op: SectorOperator) -> float:
    """Sum of absolute eigenvalues of a Hermitian sector operator."""
    if not op.is_hermitian(1e-12):
        raise ValidationError("trace_norm needs a Hermitian operator")
    return float(sum(np.abs(np.linalg.eigvalsh(b)).sum() for b in op.blocks))


def _restricted(rho: DensityOperator, sectors: list[int]) -> np.ndarray:
    blocks = [rho.blocks[n] for n in sectors]
    dim = sum(b.shape[0] for b in blocks)
    out = np.zeros((dim, dim), dtype=complex)
    o = 0
    for b in blocks:
        d = b.shape[0]
        out[o:o + d, o:o + d] = b
        o += d
    return out


def p_min_k(rho: DensityOperator, zeta: DensityOperator, k: int) -> float:
    """Minimal error for telling rho from zeta with k copies, equal priors.

    Both states are restricted to the union of their support sectors before
    the Kronecker powers are formed; the tensor dimension is capped at
    ``MAX_TENSOR_DIM`` (k <= 4 for states living in the three-photon sector).
    """
    _same_basis(rho, zeta)
    if int(k) != k or k < 1:
        raise ValidationError(f"copies must be an integer >= 1, got {k!r}")
    sectors = sorted(set(rho.op.support_sectors()) | set(zeta.op.support_sectors()))
    a, b = _restricted(rho, sectors), _restricted(zeta, sectors)
    if a.shape[0] ** k > MAX_TENSOR_DIM:
        raise ValidationError(
            f"memory guard: {a.shape[0]}**{k} exceeds the tensor dimension cap {MAX_TENSOR_DIM}")
    ak = reduce(np.kron, [a] * k)
    bk = reduce(np.kron, [b] * k)
    diff = ak - bk
    norm = float(np.abs(np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))).sum())
    return min(max(0.5 * (1.0 - 0.5 * norm), 0.0), 0.5)
