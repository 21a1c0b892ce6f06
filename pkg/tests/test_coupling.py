import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magnongate.core import coupling as coupling_module
from magnongate.core.coupling import (CouplingParams, MagnonPopulations, conditional_field, coupling_vs_distance,
                                      dipolar_coupling, lattice_sum, range_function_general, range_function_k0)
from magnongate.core.dispersion import DispersionModel
from magnongate.core.errors import DomainException, SingularityException
from magnongate.core.quantities import kelvin_to_hz

from conftest import PAPER_N0

PAPER_W_HZ = 15.0e3
# 2 (4.3e8 Hz)^2 0.01 / (kB/h * 50 K * 0.198 * 20) * 16.5
PAPER_W_EXACT_HZ = 14789.7


def direct_lattice_sum(N, r):
    total = 0.0
    for n in range(1, N + 1):
        k = n * math.pi / N
        total += math.cos(k * r) / (math.cos(k) - 1)
    return total


def test_paper_benchmark(paper_model, paper_params):
    started = time.perf_counter()
    coupling = range_function_k0(paper_model, PAPER_N0, paper_params)
    assert time.perf_counter() - started < 1.0
    assert 0.9 * PAPER_W_HZ <= abs(coupling) <= 1.1 * PAPER_W_HZ
    assert coupling == pytest.approx(PAPER_W_EXACT_HZ, rel=1e-4)


def test_lattice_sum_spot_values():
    assert lattice_sum(20, 10) == pytest.approx(16.5, abs=1e-3)
    assert lattice_sum(20, 10) == pytest.approx(direct_lattice_sum(20, 10), rel=1e-12)
    assert lattice_sum(2, 0) == pytest.approx(direct_lattice_sum(2, 0), abs=1e-12)


def test_lattice_sum_two_sites_by_hand():
    # n = 1: cos(0) / (cos(pi/2) - 1) = -1; n = 2: 1 / (cos(pi) - 1) = -1/2
    assert lattice_sum(2, 0) == pytest.approx(-1.5, abs=1e-12)
    # n = 1: cos(pi/2) / (0 - 1) = 0; n = 2: cos(pi) / (-2) = 1/2
    assert lattice_sum(2, 1) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize('N', [2, 4, 7, 20, 33, 64])
def test_lattice_sum_matches_quadratic_closed_form(N):
    for r in range(N + 1):
        expected = -(2 * N ** 2 + 1) / 6 + N * r - r ** 2 / 2 + (0.5 if r % 2 else 0.0)
        assert lattice_sum(N, r) == pytest.approx(expected, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize('N', [2, 3, 20, 64, 501])
def test_lattice_sum_terms_are_finite(N):
    for r in (0, 1, N // 2, N):
        assert math.isfinite(lattice_sum(N, r))
        assert lattice_sum(N, r) == lattice_sum(N, -r)


def test_range_function_k0_switched_off(paper_model, paper_params):
    assert range_function_k0(paper_model, 0.0, paper_params) == 0.0


def test_range_function_k0_rejects_negative_population(paper_model, paper_params):
    with pytest.raises(DomainException):
        range_function_k0(paper_model, -0.1, paper_params)


def test_range_function_general_without_magnons(paper_model, paper_params):
    assert range_function_general(paper_model, MagnonPopulations.from_mapping({}, 20), paper_params) == 0.0


def test_range_function_general_with_uniform_populations(paper_model, paper_params):
    pops = MagnonPopulations(tuple([0.3] * 21))
    assert range_function_general(paper_model, pops, paper_params) == pytest.approx(0.0, abs=1e-6)


def test_range_function_general_rejects_mismatched_grid(paper_model, paper_params):
    with pytest.raises(DomainException):
        range_function_general(paper_model, MagnonPopulations.k0(0.2, 16), paper_params)


def test_range_function_general_degenerate_pairs(monkeypatch, paper_model):
    params = CouplingParams(gamma_n=4.3, A_par=100.0, N=3, r_ij=1)
    # a grid whose last two wave numbers coincide
    monkeypatch.setattr(coupling_module, 'wave_numbers', lambda N: np.array([0.0, 1.0, 2.0, 2.0]))
    equal = MagnonPopulations((0.2, 0.0, 0.1, 0.1))
    assert math.isfinite(range_function_general(paper_model, equal, params))
    with pytest.raises(SingularityException):
        range_function_general(paper_model, MagnonPopulations((0.2, 0.0, 0.1, 0.0)), params)


def test_populations_reject_negative_occupation():
    with pytest.raises(DomainException):
        MagnonPopulations((0.1, -0.1, 0.0))
    with pytest.raises(DomainException):
        MagnonPopulations.from_mapping({5: 1.0}, 4)


def test_coupling_params_invariants():
    with pytest.raises(DomainException):
        CouplingParams(gamma_n=4.3, A_par=100.0, N=1, r_ij=0)
    with pytest.raises(DomainException):
        CouplingParams(gamma_n=-4.3, A_par=100.0, N=20, r_ij=0)
    with pytest.raises(DomainException):
        CouplingParams(gamma_n=4.3, A_par=100.0, N=20, r_ij=-1)


def test_general_and_k0_forms_agree_on_full_grid(paper_model):
    started = time.perf_counter()
    for N in (4, 8, 16, 20, 32, 64):
        for r in range(N + 1):
            params = CouplingParams(gamma_n=4.3, A_par=100.0, N=N, r_ij=r)
            for n0 in (0.01, 0.2, 1.0):
                general = range_function_general(paper_model, MagnonPopulations.k0(n0, N), params)
                closed = range_function_k0(paper_model, n0, params)
                assert general == pytest.approx(closed, rel=1e-12)
    assert time.perf_counter() - started < 10.0


def test_coupling_vs_distance(paper_model, paper_params):
    rows = coupling_vs_distance(paper_model, PAPER_N0, paper_params, 20)
    assert [r for r, _ in rows] == list(range(21))
    assert dict(rows)[10] == range_function_k0(paper_model, PAPER_N0, paper_params)
    prefactor = 2 * (4.3e8) ** 2 * 0.01 / (kelvin_to_hz(50.0) * 0.198 * 20)
    assert dict(rows)[0] == pytest.approx(prefactor * direct_lattice_sum(20, 0), rel=1e-9)


def test_coupling_vs_distance_switched_off(paper_model, paper_params):
    assert all(coupling == 0.0 for _, coupling in coupling_vs_distance(paper_model, 0.0, paper_params, 20))


def test_conditional_field_splits_target_doublet_by_w():
    h_sn = conditional_field(PAPER_W_EXACT_HZ, 4.3)
    assert 2 * 4.3 * h_sn * 1e6 == pytest.approx(PAPER_W_EXACT_HZ, rel=1e-12)


def test_dipolar_coupling_of_protons_three_angstrom_apart():
    # (mu0/4pi) h (42.6 MHz/T)^2 / (3 A)^3 ~ 4.5 kHz, the same order as the benchmark
    assert dipolar_coupling(4.3, 3.0e-10) == pytest.approx(4.54e3, rel=1e-2)


sizes = st.sampled_from([4, 8, 16, 20, 32])
populations = st.floats(min_value=1e-3, max_value=10)


@settings(max_examples=100, deadline=None)
@given(sizes, st.integers(min_value=0, max_value=64), populations)
def test_k0_coupling_is_linear_in_population(N, r, n0):
    model = DispersionModel(C=0.0, J=50.0, j1=0.2)
    params = CouplingParams(gamma_n=4.3, A_par=100.0, N=N, r_ij=r)
    assert range_function_k0(model, 2 * n0, params) == 2 * range_function_k0(model, n0, params)


@settings(max_examples=100, deadline=None)
@given(sizes, st.integers(min_value=0, max_value=64), populations,
       st.floats(min_value=1, max_value=500), st.floats(min_value=0.05, max_value=1.9))
def test_k0_coupling_is_inverse_in_exchange(N, r, n0, J, j1):
    params = CouplingParams(gamma_n=4.3, A_par=100.0, N=N, r_ij=r)
    single = range_function_k0(DispersionModel(C=0.0, J=J, j1=j1), n0, params)
    double = range_function_k0(DispersionModel(C=0.0, J=2 * J, j1=j1), n0, params)
    assert double == pytest.approx(single / 2, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(sizes, st.integers(min_value=0, max_value=64),
       st.lists(st.floats(min_value=0, max_value=5), min_size=33, max_size=33))
def test_general_coupling_is_even_in_separation(N, r, occupations):
    model = DispersionModel(C=1.0, J=50.0, j1=0.2)
    params = CouplingParams(gamma_n=4.3, A_par=100.0, N=N, r_ij=r)
    pops = MagnonPopulations(tuple(occupations[:N + 1]))
    forward = range_function_general(model, pops, params, separation=r)
    backward = range_function_general(model, pops, params, separation=-r)
    assert backward == pytest.approx(forward, rel=1e-12)
