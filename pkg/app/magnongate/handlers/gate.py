import logging

from typing import Any, List, Sequence

from .base import CommandHandler
from ..core.gatesim import GateHamiltonian, PulseSequence, cn_sequence, gate_fidelity, sequence_unitary, truth_table_rows

_logger = logging.getLogger(__name__)


class GateHandler(CommandHandler):
    header = ('in_state', 'p00', 'p01', 'p10', 'p11')

    def gate_coupling(self) -> float:
        coupling = self.scenario.gate.W
        if coupling is None:
            coupling = self.coupling()
            _logger.info(f"Gate uses the computed coupling W = {coupling} Hz")
        return coupling

    def build_sequence(self, coupling: float) -> PulseSequence:
        tau = self.option('tau')
        if tau is not None:
            _logger.info(f"Free-evolution time overridden: tau = {tau} s")
        return cn_sequence(coupling, tau)

    def build_rows(self) -> List[Sequence[Any]]:
        gate = self.scenario.gate
        coupling = self.gate_coupling()
        sequence = self.build_sequence(coupling)
        hamiltonian = GateHamiltonian(W=coupling, delta_c=gate.delta_c, delta_t=gate.delta_t)
        rabi_frequency = gate.rabi_frequency if gate.pulse_mode == 'finite' else None
        unitary = sequence_unitary(sequence, hamiltonian, rabi_frequency)

        optimized = gate_fidelity(unitary, optimize_local_z=True)
        raw = gate_fidelity(unitary)
        _logger.info(f"CN gate with {gate.pulse_mode} pulses: optimized fidelity {optimized}, raw {raw}")
        rows: List[Sequence[Any]] = [(label, *probabilities) for label, probabilities in truth_table_rows(unitary)]
        rows.append(('fidelity', optimized, raw, None, None))
        return rows
