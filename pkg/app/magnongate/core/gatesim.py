"""
Two-qubit state-vector simulation of the controlled-NOT pulse sequence.

Conventions
-----------
- Basis |control target> ordered |00>, |01>, |10>, |11>; 0 is spin up (I_z = +1/2), 1 is spin down.
- Spin operators are S = sigma / 2 and a rotation by `angle` about axis n is exp(-i angle n.S).
  A pi/2 pulse about -X takes the target |0> to (|0> + i|1>)/sqrt(2), i.e. onto +Y.
- Free evolution happens in the doubly rotating frame under the Zeeman-sign Hamiltonian
  H = -2 pi (W I_z^c I_z^t + delta_c I_z^c + delta_t I_z^t), propagated as exp(-i H tau).
  For W > 0 and the control up the target turns from +Y towards +X, with the control down towards -X;
  a negative W reverses both turns.
- Pulses are instantaneous unless a finite Rabi frequency is given; finite pulses are exponentiated
  together with the free Hamiltonian.
"""
import logging
import math

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from scipy import optimize
from scipy.linalg import expm

from .errors import DomainException, NoSolutionException
from .quantities import require_finite

_logger = logging.getLogger(__name__)

CONTROL = 0
TARGET = 1
QUBITS = {'control': CONTROL, 'target': TARGET}

BASIS_LABELS = ('00', '01', '10', '11')
UNITARITY_TOLERANCE = 1e-9

SPIN_OPERATORS = {
    'X': np.array([[0, 1], [1, 0]], dtype=complex) / 2,
    'Y': np.array([[0, -1j], [1j, 0]], dtype=complex) / 2,
    'Z': np.array([[1, 0], [0, -1]], dtype=complex) / 2,
}
SPIN_PROJECTIONS = np.array([0.5, -0.5])

IDEAL_CNOT = np.array([[1, 0, 0, 0],
                       [0, 1, 0, 0],
                       [0, 0, 0, 1],
                       [0, 0, 1, 0]], dtype=complex)


@dataclass(frozen=True)
class GateHamiltonian:
    W: float
    delta_c: float = 0.0
    delta_t: float = 0.0

    def __post_init__(self):
        for name in ('W', 'delta_c', 'delta_t'):
            require_finite(f"gate.{name}", getattr(self, name))

    def diagonal_energies(self) -> np.ndarray:
        """W m_c m_t + delta_c m_c + delta_t m_t in Hz over the four basis states."""
        m_c, m_t = np.meshgrid(SPIN_PROJECTIONS, SPIN_PROJECTIONS, indexing='ij')
        return (self.W * m_c * m_t + self.delta_c * m_c + self.delta_t * m_t).ravel()

    def matrix(self) -> np.ndarray:
        """Rotating-frame Hamiltonian in rad/s."""
        return np.diag(-2 * math.pi * self.diagonal_energies()).astype(complex)


@dataclass(frozen=True)
class Rotation:
    qubit: int
    axis: str
    angle: float


@dataclass(frozen=True)
class FreeEvolution:
    duration: float


Event = Union[Rotation, FreeEvolution]


@dataclass(frozen=True)
class PulseSequence:
    events: Tuple[Event, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for index, event in enumerate(self.events):
            if isinstance(event, FreeEvolution):
                if not math.isfinite(event.duration) or event.duration <= 0:
                    raise DomainException(f"Event {index}: free evolution needs a positive duration, got {event.duration}")
            elif isinstance(event, Rotation):
                if not math.isfinite(event.angle):
                    raise DomainException(f"Event {index}: rotation angle must be finite, got {event.angle}")
                _axis_operator(event.axis)
                _check_qubit(event.qubit)
            else:
                raise DomainException(f"Event {index}: unknown event {event!r}")

    def __len__(self):
        return len(self.events)


@dataclass(frozen=True)
class RegisterState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if amplitudes.shape != (4,):
            raise DomainException(f"A two-qubit register has 4 amplitudes, got shape {amplitudes.shape}")
        if abs(np.vdot(amplitudes, amplitudes).real - 1) > 1e-12:
            raise DomainException("The register state is not normalized")
        object.__setattr__(self, 'amplitudes', amplitudes)

    @classmethod
    def basis(cls, label: str) -> 'RegisterState':
        if label not in BASIS_LABELS:
            raise DomainException(f"Unknown basis state |{label}>")
        amplitudes = np.zeros(4, dtype=complex)
        amplitudes[BASIS_LABELS.index(label)] = 1
        return cls(amplitudes)

    @classmethod
    def product_state(cls, control: np.ndarray, target: np.ndarray) -> 'RegisterState':
        return cls(np.kron(control, target))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _check_qubit(qubit: int):
    if qubit not in (CONTROL, TARGET):
        raise DomainException(f"Qubit must be {CONTROL} (control) or {TARGET} (target), got {qubit}")


def _axis_operator(axis: str) -> np.ndarray:
    """Spin operator along a signed axis such as '-X'."""
    if not isinstance(axis, str) or len(axis) != 2 or axis[0] not in '+-' or axis[1] not in SPIN_OPERATORS:
        raise DomainException(f"Axis must be one of +X, -X, +Y, -Y, +Z, -Z, got {axis!r}")
    sign = 1 if axis[0] == '+' else -1
    return sign * SPIN_OPERATORS[axis[1]]


def _on_qubit(operator: np.ndarray, qubit: int) -> np.ndarray:
    identity = np.eye(2, dtype=complex)
    return np.kron(operator, identity) if qubit == CONTROL else np.kron(identity, operator)


def rotation_matrix(axis: str, angle: float) -> np.ndarray:
    """exp(-i angle n.S) = cos(angle/2) - 2i sin(angle/2) n.S for a unit axis."""
    return math.cos(angle / 2) * np.eye(2, dtype=complex) - 2j * math.sin(angle / 2) * _axis_operator(axis)


def rotation_unitary(qubit: int, axis: str, angle: float) -> np.ndarray:
    _check_qubit(qubit)
    return _on_qubit(rotation_matrix(axis, require_finite('angle', angle)), qubit)


def free_unitary(hamiltonian: GateHamiltonian, tau: float) -> np.ndarray:
    """Diagonal propagator exp(+i 2 pi tau E) with E the diagonal energies in Hz."""
    tau = require_finite('tau', tau)
    if tau < 0:
        raise DomainException(f"The free-evolution time must be >= 0, got {tau}")
    return np.diag(np.exp(2j * math.pi * tau * hamiltonian.diagonal_energies()))


def finite_pulse_unitary(qubit: int, axis: str, angle: float, hamiltonian: GateHamiltonian,
                         rabi_frequency: float) -> np.ndarray:
    """
    Pulse of constant Rabi frequency (Hz) lasting |angle| / (2 pi rabi), with the coupling and
    detunings acting during the pulse.
    """
    if not rabi_frequency > 0:
        raise DomainException(f"The Rabi frequency must be positive, got {rabi_frequency}")
    _check_qubit(qubit)
    duration = abs(angle) / (2 * math.pi * rabi_frequency)
    drive = 2 * math.pi * rabi_frequency * math.copysign(1.0, angle) * _on_qubit(_axis_operator(axis), qubit)
    return expm(-1j * (drive + hamiltonian.matrix()) * duration)


def apply_rotation(state: RegisterState, qubit: int, axis: str, angle: float) -> RegisterState:
    """
    Rotate one qubit of the register.
    :param state: The register state.
    :param qubit: CONTROL or TARGET.
    :param axis: One of +X, -X, +Y, -Y, +Z, -Z.
    :param angle: The rotation angle in rad.
    :return: The rotated state.
    """
    return RegisterState(rotation_unitary(qubit, axis, angle) @ state.amplitudes)


def free_evolve(state: RegisterState, hamiltonian: GateHamiltonian, tau: float) -> RegisterState:
    """Evolve the register for tau seconds without pulses."""
    return RegisterState(free_unitary(hamiltonian, tau) @ state.amplitudes)


def free_evolution_time(coupling: float) -> float:
    """Time 1/(2|W|) for the target to turn by +/-90 degrees in the XY plane."""
    coupling = require_finite('W', coupling)
    if coupling == 0:
        raise NoSolutionException("A zero coupling cannot produce a controlled-NOT gate")
    return 1 / (2 * abs(coupling))


def cn_sequence(coupling: float, tau: Optional[float] = None) -> PulseSequence:
    """
    Controlled-NOT program: pi/2 about -X on the target, free evolution for 1/(2|W|),
    pi/2 about -Y on the target.

    A negative W turns the target the other way round the XY plane, so the last pulse is
    taken about +Y; the control then still flips the target only when it is |1>.
    :param coupling: The coupling W in Hz.
    :param tau: Free-evolution time in s overriding 1/(2|W|).
    :return: The pulse sequence.
    """
    quarter_turn = free_evolution_time(coupling)
    if tau is None:
        tau = quarter_turn
    last_axis = '-Y' if coupling > 0 else '+Y'
    return PulseSequence((
        Rotation(TARGET, '-X', math.pi / 2),
        FreeEvolution(tau),
        Rotation(TARGET, last_axis, math.pi / 2),
    ))


def sequence_unitary(sequence: PulseSequence, hamiltonian: GateHamiltonian,
                     rabi_frequency: Optional[float] = None) -> np.ndarray:
    """
    Propagator of a pulse sequence, later events multiplying from the left.
    :param sequence: The pulse sequence.
    :param hamiltonian: The coupling and detunings during free evolution.
    :param rabi_frequency: Finite-pulse Rabi frequency in Hz; None for instantaneous pulses.
    :return: The 4x4 unitary.
    """
    unitary = np.eye(4, dtype=complex)
    for event in sequence.events:
        if isinstance(event, FreeEvolution):
            step = free_unitary(hamiltonian, event.duration)
        elif rabi_frequency is None:
            step = rotation_unitary(event.qubit, event.axis, event.angle)
        else:
            step = finite_pulse_unitary(event.qubit, event.axis, event.angle, hamiltonian, rabi_frequency)
        unitary = step @ unitary
    return unitary


def run_sequence(state: RegisterState, sequence: PulseSequence, hamiltonian: GateHamiltonian,
                 rabi_frequency: Optional[float] = None) -> RegisterState:
    return RegisterState(sequence_unitary(sequence, hamiltonian, rabi_frequency) @ state.amplitudes)


def _check_unitary(name: str, unitary: np.ndarray):
    unitary = np.asarray(unitary, dtype=complex)
    if unitary.shape != (4, 4):
        raise DomainException(f"{name} must be a 4x4 matrix, got shape {unitary.shape}")
    if np.linalg.norm(unitary.conj().T @ unitary - np.eye(4)) > UNITARITY_TOLERANCE:
        raise DomainException(f"{name} is not unitary")
    return unitary


def truth_table(unitary: np.ndarray) -> Dict[str, Dict[str, float]]:
    """
    Output probabilities |<out|U|in>|^2 for every computational basis input.
    :return: A mapping input label -> (output label -> probability).
    """
    unitary = _check_unitary('U', unitary)
    probabilities = np.abs(unitary) ** 2
    return {
        label_in: {label_out: float(probabilities[row, column]) for row, label_out in enumerate(BASIS_LABELS)}
        for column, label_in in enumerate(BASIS_LABELS)
    }


def _local_z(angles: np.ndarray) -> np.ndarray:
    """Diagonal of Rz(a) x Rz(b) for angles (a, b)."""
    control, target = angles
    phases_c = np.exp(-0.5j * control * np.array([1, -1]))
    phases_t = np.exp(-0.5j * target * np.array([1, -1]))
    return np.kron(phases_c, phases_t)


def _overlap(u_sim: np.ndarray, u_ideal: np.ndarray, angles: np.ndarray) -> float:
    pre, post = _local_z(angles[:2]), _local_z(angles[2:])
    corrected = post[:, np.newaxis] * u_sim * pre[np.newaxis, :]
    return abs(np.trace(u_ideal.conj().T @ corrected)) ** 2 / 16


def gate_fidelity(u_sim: np.ndarray, u_ideal: np.ndarray = IDEAL_CNOT, optimize_local_z: bool = False) -> float:
    """
    Gate fidelity |Tr(U_ideal^dagger U_sim)|^2 / 16.

    With optimize_local_z the fidelity is maximized over Z rotations of both qubits before and after
    U_sim: a grid scan over the four angles followed by a BFGS polish of the best grid point.
    The global phase never matters because only the modulus of the trace enters.
    """
    u_sim = _check_unitary('U_sim', u_sim)
    u_ideal = _check_unitary('U_ideal', u_ideal)
    raw = _overlap(u_sim, u_ideal, np.zeros(4))
    if not optimize_local_z:
        return min(raw, 1.0)

    grid = np.linspace(0, 2 * math.pi, 8, endpoint=False)
    best_angles, best = np.zeros(4), raw
    for angles in product(grid, repeat=4):
        value = _overlap(u_sim, u_ideal, np.array(angles))
        if value > best:
            best_angles, best = np.array(angles), value
    result = optimize.minimize(lambda angles: 1 - _overlap(u_sim, u_ideal, angles), best_angles,
                               method='BFGS', options={'gtol': 1e-12})
    best = max(best, 1 - float(result.fun))
    _logger.debug(f"Local-Z optimized fidelity {best} (raw {raw})")
    return min(best, 1.0)


def schmidt_coefficients(state: RegisterState) -> np.ndarray:
    """Schmidt coefficients of the control|target split, largest first."""
    return np.linalg.svd(state.amplitudes.reshape(2, 2), compute_uv=False)


def truth_table_rows(unitary: np.ndarray) -> List[Tuple[str, List[float]]]:
    table = truth_table(unitary)
    return [(label_in, [table[label_in][label_out] for label_out in BASIS_LABELS]) for label_in in BASIS_LABELS]
