"""State constructors: Bell-type three-photon states, Werner and x families, unpolarized states."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, NamedTuple, Sequence

import numpy as np

from chernoffpol.errors import ValidationError
from chernoffpol.fock_space import (
    DEFAULT_N_MAX,
    FockBasis,
    SectorOperator,
    projector_sector,
)

STATE_TOL = 1e-12
BELL_SECTOR = 3


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Positive, unit-trace, Hermitian :class:`SectorOperator`."""

    op: SectorOperator

    def __post_init__(self):
        if not self.op.is_hermitian(STATE_TOL):
            raise ValidationError("hermiticity violated: block differs from its adjoint by > 1e-12")
        tr = self.op.trace()
        if abs(tr - 1.0) >= STATE_TOL:
            raise ValidationError(f"unit trace violated: Tr = {tr.real:.15g}")
        lowest = min(float(np.linalg.eigvalsh(b).min()) for b in self.op.blocks)
        if lowest < -STATE_TOL:
            raise ValidationError(f"positivity violated: eigenvalue {lowest:.3g} < -1e-12")

    @property
    def basis(self) -> FockBasis:
        return self.op.basis

    @property
    def blocks(self) -> tuple[np.ndarray, ...]:
        return self.op.blocks

    def purity(self) -> float:
        return float(sum(np.vdot(b, b).real for b in self.op.blocks))

    def sector_weights(self) -> np.ndarray:
        """Probability of finding N photons, for every sector N."""
        return np.array([np.trace(b).real for b in self.op.blocks])

    def transform(self, unitary: SectorOperator) -> DensityOperator:
        """U rho U^dagger, re-symmetrized to remove round-off asymmetry."""
        m = self.op.conjugate_by(unitary)
        return DensityOperator(SectorOperator(m.basis, [0.5 * (b + b.conj().T) for b in m.blocks]))

    def embed(self, n_max: int) -> DensityOperator:
        return DensityOperator(self.op.embed(n_max))


@dataclass(frozen=True)
class BellDiagonalParams:
    """Weights of |Phi+>, |Phi->, |Psi+>, |Psi-> in a Bell-diagonal state."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValidationError(f"{name} must lie in [0, 1], got {v!r}")
        total = self.alpha + self.beta + self.gamma + self.delta
        if abs(total - 1.0) > STATE_TOL:
            raise ValidationError(f"normalization violated: alpha+beta+gamma+delta = {total!r}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)


@dataclass(frozen=True)
class UnpolarizedSpec:
    """Sector weights pi_N of an unpolarized state, indexed by photon number."""

    pi: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(float(p) for p in self.pi))
        if not self.pi:
            raise ValidationError("pi must have at least one entry")
        if any(p < 0.0 for p in self.pi):
            raise ValidationError(f"non-negativity violated: pi = {self.pi}")
        if abs(sum(self.pi) - 1.0) > STATE_TOL:
            raise ValidationError(f"normalization violated: sum(pi) = {sum(self.pi)!r}")

    @classmethod
    def vertex(cls, n: int, n_max: int) -> UnpolarizedSpec:
        return cls(tuple(1.0 if m == n else 0.0 for m in range(n_max + 1)))


class BellBasis(NamedTuple):
    psi_plus: np.ndarray
    psi_minus: np.ndarray
    phi_plus: np.ndarray
    phi_minus: np.ndarray


def bell_basis(basis: FockBasis) -> BellBasis:
    """The four three-photon Bell-type vectors as flat state vectors on ``basis``.

    Psi+- = (|3,0> +- |0,3>)/sqrt2 and Phi+- = (|2,1> +- |1,2>)/sqrt2.
    """
    if basis.n_max < BELL_SECTOR:
        raise ValidationError(f"Bell-type basis needs n_max >= 3, got {basis.n_max}")

    def ket(k):
        v = np.zeros(basis.dim, dtype=complex)
        v[basis.index(k, BELL_SECTOR)] = 1.0
        return v

    r = 1.0 / math.sqrt(2.0)
    return BellBasis(
        psi_plus=r * (ket(3) + ket(0)),
        psi_minus=r * (ket(3) - ket(0)),
        phi_plus=r * (ket(2) + ket(1)),
        phi_minus=r * (ket(2) - ket(1)),
    )


def bell_diagonal_state(basis: FockBasis, p: BellDiagonalParams) -> DensityOperator:
    bb = bell_basis(basis)
    sl = slice(basis.offset(BELL_SECTOR), basis.offset(BELL_SECTOR) + BELL_SECTOR + 1)
    block = np.zeros((4, 4), dtype=complex)
    for w, v in zip((p.alpha, p.beta, p.gamma, p.delta),
                    (bb.phi_plus, bb.phi_minus, bb.psi_plus, bb.psi_minus)):
        u = v[sl]
        block += w * np.outer(u, u.conj())
    blocks = [np.zeros((d, d)) for d in basis.sector_dims]
    blocks[BELL_SECTOR] = block
    return DensityOperator(SectorOperator(basis, blocks))


def _check_range(name: str, value: float, lo: float, hi: float):
    if not (lo <= value <= hi):
        raise ValidationError(f"{name} must lie in [{lo:g}, {hi:g}], got {value!r}")


def werner_params(a: float) -> BellDiagonalParams:
    """a |Psi-><Psi-| + (1-a) P_3/4 written as Bell-diagonal weights."""
    _check_range("a", a, 0.0, 1.0)
    w = (1.0 - a) / 4.0
    return BellDiagonalParams(w, w, w, (3.0 * a + 1.0) / 4.0)


def x_family_params(x: float) -> BellDiagonalParams:
    _check_range("x", x, -1.0, 1.0)
    x2, x3 = x * x, x * x * x
    weights = (
        (1.0 - x + x2 - x3) / 4.0,
        (1.0 - x - x2 + x3) / 4.0,
        (1.0 + x - x2 - x3) / 4.0,
        (1.0 + x + x2 + x3) / 4.0,
    )
    # near x = +-1 two weights vanish and may come out as -1e-17
    return BellDiagonalParams(*(max(w, 0.0) for w in weights))


def unpolarized_state(basis: FockBasis, spec: UnpolarizedSpec) -> DensityOperator:
    """sum_N pi_N P_N / (N+1)."""
    if len(spec.pi) != basis.n_max + 1:
        raise ValidationError(
            f"length mismatch: pi has {len(spec.pi)} entries, basis needs {basis.n_max + 1}")
    return DensityOperator(SectorOperator(
        basis, [p / (n + 1) * np.eye(n + 1) for n, p in enumerate(spec.pi)]))


def werner_state(a: float, basis: FockBasis | None = None) -> DensityOperator:
    return bell_diagonal_state(basis or FockBasis(), werner_params(a))


def x_family_state(x: float, basis: FockBasis | None = None) -> DensityOperator:
    return bell_diagonal_state(basis or FockBasis(), x_family_params(x))


def pure_state(basis: FockBasis, vector: np.ndarray) -> DensityOperator:
    v = np.asarray(vector, dtype=complex)
    v = v / np.linalg.norm(v)
    return DensityOperator(SectorOperator.from_dense(basis, np.outer(v, v.conj())))


def sector_maximally_mixed(basis: FockBasis, n: int = BELL_SECTOR) -> DensityOperator:
    return DensityOperator(projector_sector(basis, n) * (1.0 / (n + 1)))


# JSON state specification

def _field(spec: dict, key: str) -> Any:
    if key not in spec:
        raise ValidationError(f"state spec of type {spec.get('type')!r} is missing field {key!r}")
    return spec[key]


def _real(spec: dict, key: str) -> float:
    v = _field(spec, key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"field {key!r} must be a number, got {v!r}")
    return float(v)


def state_from_spec(spec: dict, n_max: int | None = None) -> DensityOperator:
    """Build a state from its JSON description.

    Supported types: ``bell_diagonal``, ``werner``, ``x_family``,
    ``unpolarized`` and ``dense``. An optional ``n_max`` field (or argument)
    selects the truncation for the parametric types.
    """
    if not isinstance(spec, dict):
        raise ValidationError(f"state spec must be a JSON object, got {type(spec).__name__}")
    kind = spec.get("type")
    if kind in ("bell_diagonal", "werner", "x_family"):
        basis = FockBasis(int(spec.get("n_max", n_max or DEFAULT_N_MAX)))
        if kind == "bell_diagonal":
            p = BellDiagonalParams(*(_real(spec, k) for k in ("alpha", "beta", "gamma", "delta")))
        elif kind == "werner":
            p = werner_params(_real(spec, "a"))
        else:
            p = x_family_params(_real(spec, "x"))
        return bell_diagonal_state(basis, p)
    if kind == "unpolarized":
        pi = _field(spec, "pi")
        if not isinstance(pi, list) or not pi:
            raise ValidationError("field 'pi' must be a non-empty list of weights")
        target = int(spec.get("n_max", n_max if n_max is not None else len(pi) - 1))
        if target + 1 < len(pi):
            raise ValidationError(
                f"length mismatch: pi has {len(pi)} entries, basis needs {target + 1}")
        padded = [float(p) for p in pi] + [0.0] * (target + 1 - len(pi))
        return unpolarized_state(FockBasis(target), UnpolarizedSpec(tuple(padded)))
    if kind == "dense":
        basis = FockBasis(int(_field(spec, "n_max")))
        raw = _field(spec, "blocks")
        if not isinstance(raw, list) or len(raw) != basis.n_max + 1:
            raise ValidationError(f"block count must equal n_max+1={basis.n_max + 1}")
        try:
            blocks = [np.array([[complex(re, im) for re, im in row] for row in b]) for b in raw]
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"blocks must be nested [re, im] pairs: {exc}") from None
        return DensityOperator(SectorOperator(basis, blocks))
    raise ValidationError(
        f"unknown state type {kind!r}; expected bell_diagonal, werner, x_family, unpolarized or dense")


def state_to_dense_spec(rho: DensityOperator) -> dict:
    return {
        "type": "dense",
        "n_max": rho.basis.n_max,
        "blocks": [[[[z.real, z.imag] for z in row] for row in b.tolist()] for b in rho.blocks],
    }


def load_state(path: str | Path, n_max: int | None = None) -> DensityOperator:
    try:
        spec = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from None
    return state_from_spec(spec, n_max=n_max)


def common_basis(states: Sequence[DensityOperator]) -> list[DensityOperator]:
    """Embed states into the largest truncation among them."""
    n_max = max(s.basis.n_max for s in states)
    return [s if s.basis.n_max == n_max else s.embed(n_max) for s in states]
