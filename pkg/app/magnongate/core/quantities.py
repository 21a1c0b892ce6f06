"""
Physical constants and the unit conversions shared by the physics modules.

Energies are ordinary frequencies in Hz, never angular frequencies. Gyromagnetic
ratios are gamma/(2 pi) in MHz/kOe, fields are in kOe and temperatures in K.
"""
import math

from dataclasses import dataclass

from scipy import constants

from .errors import DomainException

OE_PER_KOE = 1000.0
HZ_PER_MHZ = 1.0e6
TESLA_PER_OE = 1.0e-4


@dataclass(frozen=True)
class ConstantsTable:
    kB_over_h: float
    muB_over_h: float
    default_g: float

    def __post_init__(self):
        for name in ('kB_over_h', 'muB_over_h', 'default_g'):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise DomainException(f"ConstantsTable.{name} must be finite and positive, got {value}")


DEFAULT_CONSTANTS = ConstantsTable(
    kB_over_h=constants.k / constants.h,
    muB_over_h=constants.physical_constants['Bohr magneton in Hz/T'][0] * TESLA_PER_OE,
    default_g=2.0,
)


def require_finite(name: str, value: float) -> float:
    """
    Return the value as float, rejecting NaN and infinities.
    :param name: The quantity name used in the error message.
    :param value: The value to check.
    :return: The value converted to float.
    """
    value = float(value)
    if not math.isfinite(value):
        raise DomainException(f"{name} must be finite, got {value}")
    return value


def kelvin_to_hz(temperature: float, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Convert an energy quoted as a temperature into an ordinary frequency.
    :param temperature: The temperature in K.
    :param table: The constants table.
    :return: The frequency in Hz.
    """
    return require_finite('temperature', temperature) * table.kB_over_h


def field_to_nuclear_frequency(field: float, gamma_n: float) -> float:
    """
    Nuclear resonance frequency gamma_n * H.
    :param field: The field in kOe.
    :param gamma_n: The nuclear gyromagnetic ratio gamma/(2 pi) in MHz/kOe.
    :return: The frequency in MHz.
    """
    field = require_finite('field', field)
    gamma_n = require_finite('gamma_n', gamma_n)
    if gamma_n <= 0:
        raise DomainException(f"gamma_n must be positive, got {gamma_n}")
    return gamma_n * field


def electron_zeeman_frequency(field: float, g: float, table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """Zeeman frequency g * muB/h * H in Hz for a field in kOe."""
    return g * table.muB_over_h * require_finite('field', field) * OE_PER_KOE
