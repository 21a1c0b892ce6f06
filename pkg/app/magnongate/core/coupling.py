"""
Suhl-Nakamura range function W_ij of the longitudinal coupling H_SN = W_ij I_i^z I_j^z.

The general form takes arbitrary magnon populations on the grid k_n = n pi / N (n = 0..N):

    W = (gamma_n A / N)^2 sum_{k != k'} (n_k - n_k') / (eps_k' - eps_k) cos((k - k') r)

With only k = 0 populated it reduces to the closed form

    W = 2 (gamma_n A)^2 (n0 / N) / (J (j1 - j1^3/4) N) * sum_{n=1..N} cos(k_n r) / (cos(k_n) - 1)

Both return the signed value in Hz.
"""
import logging
import math

from dataclasses import dataclass, replace
from typing import List, Mapping, Optional, Tuple

import numpy as np

from scipy import constants

from .dispersion import DispersionModel, wave_numbers
from .errors import DomainException, SingularityException
from .quantities import DEFAULT_CONSTANTS, HZ_PER_MHZ, ConstantsTable, field_to_nuclear_frequency, require_finite

_logger = logging.getLogger(__name__)

# (MHz/kOe) -> (Hz/T)
HZ_PER_TESLA_PER_MHZ_PER_KOE = 1.0e7


@dataclass(frozen=True)
class CouplingParams:
    gamma_n: float
    A_par: float
    N: int
    r_ij: int

    def __post_init__(self):
        if not math.isfinite(self.gamma_n) or self.gamma_n <= 0:
            raise DomainException(f"coupling.gamma_n must be finite and positive, got {self.gamma_n}")
        if not math.isfinite(self.A_par) or self.A_par <= 0:
            raise DomainException(f"coupling.A_par must be finite and positive, got {self.A_par}")
        if int(self.N) != self.N or self.N < 2:
            raise DomainException(f"coupling.N must be an integer >= 2, got {self.N}")
        if int(self.r_ij) != self.r_ij or self.r_ij < 0:
            raise DomainException(f"coupling.r_ij must be a non-negative integer, got {self.r_ij}")

    @property
    def hyperfine_frequency(self) -> float:
        """gamma_n A_par in Hz."""
        return field_to_nuclear_frequency(self.A_par, self.gamma_n) * HZ_PER_MHZ


@dataclass(frozen=True)
class MagnonPopulations:
    occupations: Tuple[float, ...]

    def __post_init__(self):
        for n, value in enumerate(self.occupations):
            if not math.isfinite(value) or value < 0:
                raise DomainException(f"Occupation of band index {n} must be finite and >= 0, got {value}")

    @classmethod
    def from_mapping(cls, occupations: Mapping[int, float], N: int) -> 'MagnonPopulations':
        """Populations on the grid n = 0..N; indices absent from the mapping are empty."""
        values = [0.0] * (N + 1)
        for n, value in occupations.items():
            if not 0 <= n <= N:
                raise DomainException(f"Band index {n} is outside the grid 0..{N}")
            values[n] = float(value)
        return cls(tuple(values))

    @classmethod
    def k0(cls, n0: float, N: int) -> 'MagnonPopulations':
        """Only the k = 0 mode is occupied, as under microwave pumping."""
        return cls.from_mapping({0: n0}, N)

    @property
    def grid_size(self) -> int:
        return len(self.occupations) - 1


def _phase(delta_k: float, r: int) -> float:
    """cos(delta_k r), even in both arguments."""
    return math.cos(abs(delta_k * r))


def lattice_sum(N: int, r: int) -> float:
    """
    Dimensionless sum over n = 1..N of cos(k_n r) / (cos(k_n) - 1), with k_n = n pi / N.
    :param N: The number of sites in the packet, >= 2.
    :param r: The separation in lattice units.
    :return: The sum.
    """
    if N < 2:
        raise DomainException(f"The packet needs at least 2 sites, got N={N}")
    k = wave_numbers(N)
    cos_k = np.cos(k)
    return math.fsum(_phase(k[n], r) / (cos_k[n] - cos_k[0]) for n in range(1, N + 1))


def range_function_general(model: DispersionModel, pops: MagnonPopulations, params: CouplingParams,
                           separation: Optional[int] = None, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    W_ij from arbitrary populations on the grid k_n = n pi / N.
    :param model: The dispersion model.
    :param pops: The magnon populations, one per band index 0..N.
    :param params: The coupling parameters.
    :param separation: Signed separation overriding params.r_ij.
    :param table: The constants table.
    :return: The coupling in Hz.
    """
    N = params.N
    if pops.grid_size != N:
        raise DomainException(f"Populations are defined on a grid of N={pops.grid_size}, the packet has N={N}")
    r = params.r_ij if separation is None else separation

    coefficient = model.band_coefficient_hz(table)
    if coefficient == 0:
        raise SingularityException("The band coefficient J (j1 - j1^3/4) is zero")

    occupations = np.array(pops.occupations, dtype=float)
    k = wave_numbers(N)
    cos_k = np.cos(k)

    # eps_k' - eps_k = coefficient * (cos k' - cos k); C cancels.
    denominators = cos_k[np.newaxis, :] - cos_k[:, np.newaxis]
    degenerate = denominators == 0
    np.fill_diagonal(degenerate, False)
    population_gap = occupations[:, np.newaxis] - occupations[np.newaxis, :]
    if np.any(degenerate & (population_gap != 0)):
        raise SingularityException("Degenerate magnon energies carry unequal populations")

    excluded = denominators == 0
    phases = np.array([[_phase(k_row - k_column, r) for k_column in k] for k_row in k])
    with np.errstate(divide='ignore', invalid='ignore'):
        kernel = np.where(excluded, 0.0, phases / np.where(excluded, 1.0, denominators))

    # The kernel is antisymmetric, so the pair sum collapses to 2 sum_k n_k sum_k' kernel[k, k'].
    row_sums = np.array([math.fsum(row) for row in kernel])
    pair_sum = 2 * math.fsum(occupations * row_sums)
    return (params.hyperfine_frequency / N) ** 2 / coefficient * pair_sum


def range_function_k0(model: DispersionModel, n0: float, params: CouplingParams,
                      table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    W_ij when the microwave populates only the k = 0 magnons.
    :param model: The dispersion model.
    :param n0: The k = 0 occupation n(0).
    :param params: The coupling parameters.
    :param table: The constants table.
    :return: The coupling in Hz.
    """
    n0 = require_finite('n0', n0)
    if n0 < 0:
        raise DomainException(f"n0 must be non-negative, got {n0}")
    coefficient = model.band_coefficient_hz(table)
    if coefficient == 0:
        raise SingularityException("The band coefficient J (j1 - j1^3/4) is zero")
    N = params.N
    return (2 * params.hyperfine_frequency ** 2 * (n0 / N) / (coefficient * N)) * lattice_sum(N, params.r_ij)


def coupling_vs_distance(model: DispersionModel, n0: float, params: CouplingParams, r_max: int,
                         table: ConstantsTable = DEFAULT_CONSTANTS) -> List[Tuple[int, float]]:
    """
    W_ij for every separation r = 0..r_max, ordered by r.
    :return: A list of (r, W in Hz).
    """
    if r_max < 0:
        raise DomainException(f"r_max must be non-negative, got {r_max}")
    if r_max > params.N:
        _logger.warning(f"r_max={r_max} exceeds the packet size N={params.N}")
    rows = []
    for r in range(r_max + 1):
        at_r = replace(params, r_ij=r)
        rows.append((r, range_function_k0(model, n0, at_r, table)))
    return rows


def conditional_field(coupling: float, gamma_n: float) -> float:
    """
    Field h_SN in kOe whose +/- sign follows the control qubit, for a coupling W in Hz.
    The target doublet splits by W, i.e. by 2 gamma_n h_SN.
    """
    coupling = require_finite('W', coupling)
    if gamma_n <= 0:
        raise DomainException(f"gamma_n must be positive, got {gamma_n}")
    return abs(coupling) / HZ_PER_MHZ / (2 * gamma_n)


def dipolar_coupling(gamma_n: float, distance: float) -> float:
    """
    Dipolar coupling constant (mu0 / 4 pi) h gamma_n^2 / r^3 between two like nuclei.
    :param gamma_n: gamma/(2 pi) in MHz/kOe.
    :param distance: The internuclear distance in m.
    :return: The coupling in Hz.
    """
    if gamma_n <= 0 or distance <= 0:
        raise DomainException(f"gamma_n and distance must be positive, got {gamma_n} and {distance}")
    gamma_hz_per_tesla = gamma_n * HZ_PER_TESLA_PER_MHZ_PER_KOE
    return constants.mu_0 / (4 * math.pi) * constants.h * gamma_hz_per_tesla ** 2 / distance ** 3
