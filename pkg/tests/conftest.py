import numpy as np
import pytest
from hypothesis import strategies as st

from chernoffpol.fock_space import EulerAngles, FockBasis
from chernoffpol.states import BellDiagonalParams


@pytest.fixture
def basis():
    return FockBasis(6)


@pytest.fixture
def rng():
    return np.random.default_rng(20181231)


def random_bell_params(rng) -> BellDiagonalParams:
    w = rng.dirichlet(np.ones(4))
    w[-1] = 1.0 - w[:-1].sum()
    return BellDiagonalParams(*(float(max(v, 0.0)) for v in w))


def random_angles(rng) -> EulerAngles:
    return EulerAngles(*rng.uniform(-2 * np.pi, 2 * np.pi, size=3))


@st.composite
def bell_params(draw, min_weight=0.0):
    raw = [draw(st.floats(min_value=min_weight, max_value=1.0)) for _ in range(4)]
    total = sum(raw)
    if total == 0.0:
        raw, total = [1.0, 0.0, 0.0, 0.0], 1.0
    w = [v / total for v in raw]
    w[3] = max(1.0 - w[0] - w[1] - w[2], 0.0)
    return BellDiagonalParams(*w)


euler_angles = st.builds(
    EulerAngles,
    st.floats(-10.0, 10.0), st.floats(-10.0, 10.0), st.floats(-10.0, 10.0),
)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
