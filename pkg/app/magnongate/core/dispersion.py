"""
Magnon band of the spin ladder and the Zeeman-split triplet levels of the k = 0 magnon.

The band keeps only the leading cosine term
eps(k_n) = C + J (j1 - j1^3/4) cos(k_n), with k_n = n pi / N.
Triplet levels follow E_m(H) = gap + m g muB H, so the |1,-1> branch descends with field.
"""
import logging
import math

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DomainException, NoSolutionException, OutOfRangeException
from .quantities import DEFAULT_CONSTANTS, ConstantsTable, electron_zeeman_frequency, kelvin_to_hz, require_finite

_logger = logging.getLogger(__name__)

TRIPLET_BRANCHES = (-1, 0, 1)


@dataclass(frozen=True)
class DispersionModel:
    C: float
    J: float
    j1: float

    def __post_init__(self):
        for name in ('C', 'J', 'j1'):
            require_finite(f"dispersion.{name}", getattr(self, name))
        if self.J <= 0:
            raise DomainException(f"dispersion.J must be positive, got {self.J}")
        if not 0 < self.j1 < 2:
            raise DomainException(f"dispersion.j1 must lie in (0, 2), got {self.j1}")

    @property
    def band_coefficient(self) -> float:
        """J (j1 - j1^3/4) in K."""
        return self.J * (self.j1 - self.j1 ** 3 / 4)

    def band_coefficient_hz(self, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
        return kelvin_to_hz(self.band_coefficient, table)


@dataclass(frozen=True)
class ZeemanModel:
    gap: float
    g: float = DEFAULT_CONSTANTS.default_g

    def __post_init__(self):
        if not math.isfinite(self.gap) or self.gap <= 0:
            raise DomainException(f"zeeman.gap must be finite and positive, got {self.gap}")
        if not math.isfinite(self.g) or self.g <= 0:
            raise DomainException(f"zeeman.g must be finite and positive, got {self.g}")


def wave_numbers(N: int) -> np.ndarray:
    """Grid k_n = n pi / N for n = 0..N."""
    if N < 2:
        raise DomainException(f"The packet needs at least 2 sites, got N={N}")
    return np.pi * np.arange(N + 1) / N


def magnon_energy(model: DispersionModel, n: int, N: int, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Energy of the magnon with wave number k_n = n pi / N.
    :param model: The dispersion model.
    :param n: The band index, 0 <= n <= N.
    :param N: The number of sites in the packet.
    :param table: The constants table.
    :return: The energy in Hz.
    """
    if N < 2:
        raise DomainException(f"The packet needs at least 2 sites, got N={N}")
    if not 0 <= n <= N:
        raise DomainException(f"Band index n={n} is outside 0..{N}")
    return kelvin_to_hz(model.C + model.band_coefficient * math.cos(n * math.pi / N), table)


def band_energies(model: DispersionModel, N: int, table: ConstantsTable = DEFAULT_CONSTANTS) -> np.ndarray:
    """Energies in Hz of the whole grid n = 0..N."""
    return np.array([magnon_energy(model, n, N, table) for n in range(N + 1)])


def band_extrema(model: DispersionModel, table: ConstantsTable = DEFAULT_CONSTANTS) -> Tuple[float, float, float]:
    """
    Bottom, top and width of the band.
    :return: (min energy, max energy, bandwidth), all in Hz.
    """
    coefficient = model.band_coefficient
    return (kelvin_to_hz(model.C - coefficient, table),
            kelvin_to_hz(model.C + coefficient, table),
            kelvin_to_hz(2 * coefficient, table))


def _check_branch(m: int):
    if m not in TRIPLET_BRANCHES:
        raise DomainException(f"Triplet quantum number must be one of {TRIPLET_BRANCHES}, got {m}")


def triplet_level(zeeman: ZeemanModel, m: int, field: float, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Energy of the |1 m> triplet above the singlet ground state.
    :param zeeman: The gap and g-factor.
    :param m: The triplet quantum number (-1, 0 or +1).
    :param field: The field in kOe, >= 0.
    :param table: The constants table.
    :return: The energy in Hz.
    """
    _check_branch(m)
    field = require_finite('field', field)
    if field < 0:
        raise DomainException(f"The field must be non-negative, got {field} kOe")
    return kelvin_to_hz(zeeman.gap, table) + m * electron_zeeman_frequency(field, zeeman.g, table)


def resonance_field(zeeman: ZeemanModel, m: int, nu: float, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Field at which a microwave of frequency nu drives the singlet to |1 m>.
    :param zeeman: The gap and g-factor.
    :param m: The branch, -1 or +1.
    :param nu: The microwave frequency in Hz.
    :param table: The constants table.
    :return: The field in kOe.
    """
    _check_branch(m)
    if m == 0:
        raise NoSolutionException("The |1 0> branch does not depend on the field")
    nu = require_finite('microwave frequency', nu)
    if nu <= 0:
        raise DomainException(f"The microwave frequency must be positive, got {nu} Hz")
    field = (nu - kelvin_to_hz(zeeman.gap, table)) / (m * electron_zeeman_frequency(1.0, zeeman.g, table))
    if field < 0:
        raise OutOfRangeException(f"The |1 {m}> branch reaches {nu} Hz only at a negative field ({field} kOe)")
    return field
