"""Chernoff quantum degree of polarization and concurrence for two-mode photonic states."""

from chernoffpol.errors import InfiniteExponent, NumericalError, ValidationError
from chernoffpol.fock_space import (
    EulerAngles,
    FockBasis,
    SectorOperator,
    polarization_unitary,
    projector_sector,
    stokes_operators,
)
from chernoffpol.states import (
    BellDiagonalParams,
    DensityOperator,
    UnpolarizedSpec,
    bell_basis,
    bell_diagonal_state,
    unpolarized_state,
    werner_params,
    x_family_params,
)
from chernoffpol.discrimination import (
    SOverlapResult,
    chernoff_bound,
    minimize_s_overlap,
    p_min_k,
    s_overlap,
    trace_norm,
)
from chernoffpol.polarization import (
    PolarizationResult,
    degree_chernoff,
    degree_chernoff_bell_diagonal,
)
from chernoffpol.entanglement import (
    concurrence_bell_diagonal,
    concurrence_werner,
    concurrence_x_family,
    wootters_concurrence,
)

__version__ = "0.1.0"
