import pytest

from magnongate.core.addressing import ChainLayout
from magnongate.core.coupling import CouplingParams
from magnongate.core.dispersion import DispersionModel, ZeemanModel

PAPER_N0 = 0.2  # n(0)/N = 0.01 with N = 20


@pytest.fixture
def paper_model():
    return DispersionModel(C=0.0, J=50.0, j1=0.2)


@pytest.fixture
def paper_params():
    return CouplingParams(gamma_n=4.3, A_par=100.0, N=20, r_ij=10)


@pytest.fixture
def paper_zeeman():
    return ZeemanModel(gap=50.0, g=2.0)


@pytest.fixture
def paper_layout():
    return ChainLayout(a=1.0, H0=100.0, G=0.01, qubit_positions=(0, 10, 20, 30), chain_extent=(0, 100))
