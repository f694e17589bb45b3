"""Concurrence of three-photon Bell-diagonal states.

The four-dimensional three-photon sector is read as two logical qubits via
|3,0> -> |00>, |2,1> -> |01>, |1,2> -> |10>, |0,3> -> |11>, which sends the
Psi/Phi states onto the usual two-qubit Bell states.
"""

from __future__ import annotations

import numpy as np

from chernoffpol._numerics import bisect
from chernoffpol.errors import ValidationError
from chernoffpol.states import BELL_SECTOR, BellDiagonalParams, DensityOperator, _check_range

# logical index of each sector-3 basis vector |3-j, j>, j = 0..3
LOGICAL_QUBIT_MAP = {(3, 0): 0b00, (2, 1): 0b01, (1, 2): 0b10, (0, 3): 0b11}

_SPIN_FLIP = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def concurrence_bell_diagonal(p: BellDiagonalParams) -> float:
    """max{0, l1 - l2 - l3 - l4} with the weights sorted descending, i.e. max{0, 2 l1 - 1}."""
    return max(0.0, 2.0 * max(p.as_tuple()) - 1.0)


def concurrence_werner(a: float) -> float:
    _check_range("a", a, 0.0, 1.0)
    if a <= 1.0 / 3.0:
        return 0.0
    return (3.0 * a - 1.0) / 2.0


def _x_threshold() -> float:
    root, _ = bisect(lambda x: x ** 3 + x ** 2 + x - 1.0, 0.0, 1.0, xtol=1e-14)
    return root


# where the largest x-family weight reaches 1/2
X_THRESHOLD = _x_threshold()


def concurrence_x_family(x: float) -> float:
    _check_range("x", x, -1.0, 1.0)
    if x > X_THRESHOLD:
        return (-1.0 + x + x * x + x * x * x) / 2.0
    if x < -X_THRESHOLD:
        return (-1.0 - x + x * x - x * x * x) / 2.0
    return 0.0


def to_two_qubit(rho: DensityOperator, atol: float = 1e-12) -> np.ndarray:
    """The three-photon block of ``rho`` as a 4x4 logical two-qubit matrix."""
    n_max = rho.basis.n_max
    if n_max < BELL_SECTOR:
        raise ValidationError(f"state has no three-photon sector (n_max={n_max})")
    outside = [n for n in rho.op.support_sectors(atol) if n != BELL_SECTOR]
    if outside:
        raise ValidationError(f"support outside the three-photon sector: sectors {outside}")
    perm = [LOGICAL_QUBIT_MAP[(BELL_SECTOR - j, j)] for j in range(BELL_SECTOR + 1)]
    out = np.zeros((4, 4), dtype=complex)
    out[np.ix_(perm, perm)] = rho.blocks[BELL_SECTOR]
    return out


def wootters_concurrence(rho: DensityOperator) -> float:
    """Wootters concurrence of a state supported in the three-photon sector.

    Uses the Hermitian form sqrt(rho) rho~ sqrt(rho), which has the same
    spectrum as rho rho~.
    """
    r = to_two_qubit(rho)
    tilde = _SPIN_FLIP @ r.conj() @ _SPIN_FLIP
    w, v = np.linalg.eigh(r)
    sq = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    m = sq @ tilde @ sq
    ev = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    mu = np.sort(np.sqrt(np.clip(ev, 0.0, None)))[::-1]
    return float(max(0.0, mu[0] - mu[1] - mu[2] - mu[3]))
