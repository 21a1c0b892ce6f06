"""
Field-gradient addressing of qubits and of the magnon excitation region.

The field is linear along the chain, H(x) = H0 + G x a, so positions, NMR lines and the
|1,-1> resonance map one-to-one onto each other.
"""
import logging
import math

from dataclasses import dataclass
from typing import List, Tuple

from .dispersion import ZeemanModel, resonance_field, triplet_level
from .errors import DomainException, NoSolutionException, OutOfRangeException
from .quantities import (DEFAULT_CONSTANTS, ConstantsTable, electron_zeeman_frequency, field_to_nuclear_frequency,
                         require_finite)

_logger = logging.getLogger(__name__)

EXCITED_BRANCH = -1


@dataclass(frozen=True)
class ChainLayout:
    a: float
    H0: float
    G: float
    qubit_positions: Tuple[int, ...]
    chain_extent: Tuple[int, int]

    def __post_init__(self):
        for name in ('a', 'H0', 'G'):
            require_finite(f"layout.{name}", getattr(self, name))
        if self.a <= 0:
            raise DomainException(f"layout.a must be positive, got {self.a}")
        low, high = self.chain_extent
        if low > high:
            raise DomainException(f"layout.chain_extent must be ordered, got {self.chain_extent}")
        positions = list(self.qubit_positions)
        if any(second <= first for first, second in zip(positions, positions[1:])):
            raise DomainException(f"layout.qubit_positions must be strictly increasing, got {positions}")
        if positions and (positions[0] < low or positions[-1] > high):
            raise DomainException(f"layout.qubit_positions must lie within {self.chain_extent}, got {positions}")

    @property
    def gradient_per_site(self) -> float:
        """G a in kOe per lattice site."""
        return self.G * self.a

    def qubit_position(self, qubit: int) -> int:
        if not 0 <= qubit < len(self.qubit_positions):
            raise DomainException(f"Qubit index {qubit} is outside 0..{len(self.qubit_positions) - 1}")
        return self.qubit_positions[qubit]


@dataclass(frozen=True)
class LocalFields:
    h_tr: float
    h_SN: float

    def __post_init__(self):
        require_finite('h_tr', self.h_tr)
        require_finite('h_SN', self.h_SN)
        if self.h_SN < 0:
            raise DomainException(f"h_SN is a magnitude and must be >= 0, got {self.h_SN}")


def local_field(layout: ChainLayout, x: float) -> float:
    """
    Field at position x.
    :param layout: The chain layout.
    :param x: The position in lattice units.
    :return: The field in kOe.
    """
    x = require_finite('position', x)
    low, high = layout.chain_extent
    if not low <= x <= high:
        raise DomainException(f"Position {x} is outside the chain {layout.chain_extent}")
    return layout.H0 + layout.G * x * layout.a


def target_frequencies(layout: ChainLayout, target: int, fields: LocalFields, gamma_n: float) -> Tuple[float, float]:
    """
    NMR lines of the target for the two states of the control qubit.
    :return: (omega_plus, omega_minus) in MHz.
    """
    centre = field_to_nuclear_frequency(local_field(layout, layout.qubit_position(target)) + fields.h_tr, gamma_n)
    split = gamma_n * fields.h_SN
    return centre + split, centre - split


def target_spectrum(layout: ChainLayout, target: int, fields: LocalFields, gamma_n: float,
                    control_saturated: bool) -> List[Tuple[float, float]]:
    """
    Target lines during the microwave irradiation.
    A saturated control averages h_SN to zero and leaves a single line shifted by gamma_n h_tr.
    :return: A list of (frequency in MHz, weight).
    """
    if control_saturated:
        bare = field_to_nuclear_frequency(local_field(layout, layout.qubit_position(target)), gamma_n)
        return [(bare + gamma_n * fields.h_tr, 1.0)]
    omega_plus, omega_minus = target_frequencies(layout, target, fields, gamma_n)
    return [(omega_plus, 0.5), (omega_minus, 0.5)]


def excitation_position(layout: ChainLayout, zeeman: ZeemanModel, nu: float,
                        table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Position where a microwave of frequency nu excites the |1,-1> magnons.
    :param layout: The chain layout.
    :param zeeman: The gap and g-factor.
    :param nu: The microwave frequency in Hz.
    :param table: The constants table.
    :return: The position in lattice units.
    """
    if layout.G == 0:
        raise NoSolutionException("A uniform field cannot select an excitation position")
    low, high = layout.chain_extent
    try:
        field = resonance_field(zeeman, EXCITED_BRANCH, nu, table)
    except OutOfRangeException:
        raise OutOfRangeException(f"The microwave frequency {nu} Hz is not resonant anywhere on the chain")
    x = (field - layout.H0) / layout.gradient_per_site
    if not low <= x <= high:
        raise OutOfRangeException(f"The microwave frequency {nu} Hz is resonant at x={x}, outside {layout.chain_extent}")
    return x


def excitation_frequency(layout: ChainLayout, zeeman: ZeemanModel, x: float,
                         table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """Microwave frequency in Hz resonant with the |1,-1> branch at position x."""
    return triplet_level(zeeman, EXCITED_BRANCH, local_field(layout, x), table)


def resolvability_margin(layout: ChainLayout, gamma_n: float, linewidth: float) -> List[Tuple[Tuple[int, int], float]]:
    """
    Frequency separation of adjacent qubits in units of the NMR linewidth.
    A pair is resolvable when its margin exceeds 1.
    :param linewidth: The linewidth in MHz.
    :return: A list of ((qubit, qubit + 1), margin).
    """
    if len(layout.qubit_positions) < 2:
        raise DomainException("Resolvability needs at least two qubits")
    if not linewidth > 0:
        raise DomainException(f"The linewidth must be positive, got {linewidth}")
    margins = []
    for qubit, (first, second) in enumerate(zip(layout.qubit_positions, layout.qubit_positions[1:])):
        margin = abs(gamma_n * layout.gradient_per_site * (second - first)) / linewidth
        margins.append(((qubit, qubit + 1), margin))
    return margins


def confinement_margin(layout: ChainLayout, zeeman: ZeemanModel, packet_length: float, T_s: float,
                       table: ConstantsTable = DEFAULT_CONSTANTS) -> float:
    """
    Heuristic confinement figure: Zeeman mismatch across the packet over the lifetime linewidth 1/T_s.
    Values much larger than 1 mean the gradient keeps the packet in place.
    """
    if packet_length < 1:
        raise DomainException(f"The packet length must be >= 1 site, got {packet_length}")
    if not T_s > 0:
        raise DomainException(f"T_s must be positive, got {T_s}")
    mismatch = abs(electron_zeeman_frequency(layout.gradient_per_site * packet_length, zeeman.g, table))
    return mismatch / (1 / T_s)


def estimate_triplet_field(A_par: float, n0: float, N: int) -> float:
    """
    Heuristic packet field h_tr ~ A_par (n0 / N) in kOe.
    Not a measured value: h_tr is meant to be read off the saturated-control spectrum.
    """
    if N < 1 or n0 < 0 or not math.isfinite(A_par):
        raise DomainException(f"Cannot estimate h_tr from A_par={A_par}, n0={n0}, N={N}")
    return A_par * (n0 / N)
