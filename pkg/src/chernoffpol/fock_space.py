"""Truncated two-mode (H, V) Fock space organized by total photon number.

Every operator used here conserves the total photon number N, so operators
are stored as one (N+1)x(N+1) block per sector. Inside sector N the basis is
ordered by descending horizontal count: |N,0>, |N-1,1>, ..., |0,N>.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from chernoffpol.errors import ValidationError

DEFAULT_N_MAX = 6
HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class FockBasis:
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise ValidationError(f"n_max must be a non-negative integer, got {self.n_max!r}")

    @property
    def sector_dims(self) -> list[int]:
        return [n + 1 for n in range(self.n_max + 1)]

    @property
    def dim(self) -> int:
        return (self.n_max + 1) * (self.n_max + 2) // 2

    def offset(self, n: int) -> int:
        """Position of the first basis vector of sector ``n`` in the flat ordering."""
        return n * (n + 1) // 2

    def index(self, k: int, n: int) -> int:
        """Flat index of |k, n-k>: ``k`` horizontal photons out of ``n``."""
        if not 0 <= k <= n <= self.n_max:
            raise ValidationError(f"|{k},{n - k}> is outside the basis with n_max={self.n_max}")
        return self.offset(n) + (n - k)

    def labels(self) -> list[tuple[int, int]]:
        return [(n - j, j) for n in range(self.n_max + 1) for j in range(n + 1)]


class SectorOperator:
    """Operator on a :class:`FockBasis` stored as per-sector blocks.

    Blocks are copied on construction and marked read-only.
    """

    __slots__ = ("basis", "blocks")

    def __init__(self, basis: FockBasis, blocks: Sequence[np.ndarray]):
        if len(blocks) != basis.n_max + 1:
            raise ValidationError(
                f"block count must equal n_max+1={basis.n_max + 1}, got {len(blocks)}")
        frozen = []
        for n, b in enumerate(blocks):
            b = np.array(b, dtype=complex)
            if b.shape != (n + 1, n + 1):
                raise ValidationError(f"sector {n} block must be {n + 1}x{n + 1}, got {b.shape}")
            b.flags.writeable = False
            frozen.append(b)
        self.basis = basis
        self.blocks = tuple(frozen)

    @classmethod
    def zeros(cls, basis: FockBasis) -> SectorOperator:
        return cls(basis, [np.zeros((d, d)) for d in basis.sector_dims])

    @classmethod
    def identity(cls, basis: FockBasis) -> SectorOperator:
        return cls(basis, [np.eye(d) for d in basis.sector_dims])

    @classmethod
    def from_dense(cls, basis: FockBasis, matrix: np.ndarray, atol: float = 1e-12) -> SectorOperator:
        """Split a dense matrix into sector blocks; any inter-sector coupling is rejected."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (basis.dim, basis.dim):
            raise ValidationError(f"dense matrix must be {basis.dim}x{basis.dim}, got {matrix.shape}")
        mask = np.zeros(matrix.shape, dtype=bool)
        blocks = []
        for n in range(basis.n_max + 1):
            sl = slice(basis.offset(n), basis.offset(n) + n + 1)
            mask[sl, sl] = True
            blocks.append(matrix[sl, sl])
        leak = np.abs(matrix[~mask]).max(initial=0.0)
        if leak > atol:
            raise ValidationError(f"sector conservation violated: inter-sector entry of size {leak:.3g}")
        return cls(basis, blocks)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.basis.dim, self.basis.dim), dtype=complex)
        for n, b in enumerate(self.blocks):
            o = self.basis.offset(n)
            out[o:o + n + 1, o:o + n + 1] = b
        return out

    def _check(self, other: SectorOperator):
        if self.basis != other.basis:
            raise ValidationError(
                f"basis mismatch: n_max={self.basis.n_max} vs n_max={other.basis.n_max}")

    def __add__(self, other: SectorOperator) -> SectorOperator:
        self._check(other)
        return SectorOperator(self.basis, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: SectorOperator) -> SectorOperator:
        self._check(other)
        return SectorOperator(self.basis, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self) -> SectorOperator:
        return SectorOperator(self.basis, [-b for b in self.blocks])

    def __mul__(self, scalar: complex) -> SectorOperator:
        return SectorOperator(self.basis, [scalar * b for b in self.blocks])

    __rmul__ = __mul__

    def __matmul__(self, other: SectorOperator) -> SectorOperator:
        self._check(other)
        return SectorOperator(self.basis, [a @ b for a, b in zip(self.blocks, other.blocks)])

    def dag(self) -> SectorOperator:
        return SectorOperator(self.basis, [b.conj().T for b in self.blocks])

    def trace(self) -> complex:
        return complex(sum(np.trace(b) for b in self.blocks))

    def conjugate_by(self, unitary: SectorOperator) -> SectorOperator:
        """U A U^dagger."""
        return unitary @ self @ unitary.dag()

    def max_abs(self) -> float:
        return max(float(np.abs(b).max()) for b in self.blocks)

    def is_hermitian(self, atol: float = HERMITIAN_TOL) -> bool:
        return all(np.abs(b - b.conj().T).max() <= atol for b in self.blocks)

    def support_sectors(self, atol: float = 1e-12) -> list[int]:
        return [n for n, b in enumerate(self.blocks) if np.abs(b).max() > atol]

    def embed(self, n_max: int) -> SectorOperator:
        """Same operator on a larger truncation, zero on the added sectors."""
        if n_max < self.basis.n_max:
            raise ValidationError(f"cannot embed n_max={self.basis.n_max} into smaller n_max={n_max}")
        extra = [np.zeros((n + 1, n + 1)) for n in range(self.basis.n_max + 1, n_max + 1)]
        return SectorOperator(FockBasis(n_max), list(self.blocks) + extra)

    def allclose(self, other: SectorOperator, atol: float = 1e-12) -> bool:
        self._check(other)
        return all(np.allclose(a, b, rtol=0.0, atol=atol) for a, b in zip(self.blocks, other.blocks))

    def __repr__(self) -> str:
        return f"SectorOperator(n_max={self.basis.n_max})"


@dataclass(frozen=True)
class EulerAngles:
    phi: float = 0.0
    theta: float = 0.0
    psi: float = 0.0


def _raising_block(n: int) -> np.ndarray:
    """a_H^dagger a_V restricted to sector n (moves one photon from V to H)."""
    block = np.zeros((n + 1, n + 1))
    # column j is |n-j, j>; a_H^dag a_V maps it to sqrt((n-j+1) j) |n-j+1, j-1>
    for j in range(1, n + 1):
        block[j - 1, j] = np.sqrt((n - j + 1) * j)
    return block


def stokes_operators(basis: FockBasis) -> tuple[SectorOperator, SectorOperator, SectorOperator]:
    """The Stokes operators S1, S2, S3 as Hermitian sector operators.

    S1 = a_H^dag a_V + a_H a_V^dag, S2 = -i (a_H^dag a_V - a_H a_V^dag),
    S3 = a_H^dag a_H - a_V^dag a_V.
    """
    s1, s2, s3 = [], [], []
    for n in range(basis.n_max + 1):
        up = _raising_block(n)
        s1.append(up + up.T)
        s2.append(-1j * (up - up.T))
        s3.append(np.diag([n - 2.0 * j for j in range(n + 1)]))
    return SectorOperator(basis, s1), SectorOperator(basis, s2), SectorOperator(basis, s3)


def _expm_hermitian(h: np.ndarray, t: float) -> np.ndarray:
    """exp(-i t h) for Hermitian h."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def polarization_unitary(basis: FockBasis, angles: EulerAngles) -> SectorOperator:
    """exp(-i phi S3/2) exp(-i theta S2/2) exp(-i psi S3/2), built per sector."""
    _, s2, s3 = stokes_operators(basis)
    blocks = []
    for n in range(basis.n_max + 1):
        d3 = np.diag(s3.blocks[n]).real
        left = np.exp(-0.5j * angles.phi * d3)
        right = np.exp(-0.5j * angles.psi * d3)
        mid = _expm_hermitian(s2.blocks[n], 0.5 * angles.theta)
        blocks.append(left[:, None] * mid * right[None, :])
    return SectorOperator(basis, blocks)


def projector_sector(basis: FockBasis, n: int) -> SectorOperator:
    """Projector onto the n-photon sector."""
    if not 0 <= n <= basis.n_max:
        raise ValidationError(f"sector {n} outside 0..{basis.n_max}")
    return SectorOperator(
        basis, [np.eye(d) if m == n else np.zeros((d, d)) for m, d in enumerate(basis.sector_dims)])
