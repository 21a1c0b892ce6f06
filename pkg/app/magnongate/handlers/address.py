import logging

from typing import Any, List, Sequence

from .base import CommandHandler
from ..core.addressing import (LocalFields, confinement_margin, estimate_triplet_field, excitation_frequency,
                               local_field, resolvability_margin, target_frequencies)
from ..core.coupling import conditional_field

_logger = logging.getLogger(__name__)


class AddressHandler(CommandHandler):
    header = ('qubit', 'position', 'field_kOe', 'omega_plus_mhz', 'omega_minus_mhz')

    def local_fields(self) -> LocalFields:
        """Scenario h_tr and h_SN, falling back to the packet estimate and to the field implied by W."""
        address = self.scenario.address
        coupling = self.scenario.coupling
        h_tr = address.h_tr
        if h_tr is None:
            h_tr = estimate_triplet_field(coupling.A_par, self.populated_n0(), coupling.N)
            _logger.info(f"h_tr not set, heuristic estimate A_par n0/N = {h_tr} kOe")
        h_SN = address.h_SN
        if h_SN is None:
            h_SN = conditional_field(self.coupling(), coupling.gamma_n)
            _logger.info(f"h_SN not set, using W/(2 gamma_n) = {h_SN} kOe")
        return LocalFields(h_tr=h_tr, h_SN=h_SN)

    def log_diagnostics(self):
        layout = self.scenario.layout
        address = self.scenario.address
        gamma_n = self.scenario.coupling.gamma_n
        if len(layout.qubit_positions) >= 2:
            for pair, margin in resolvability_margin(layout, gamma_n, address.linewidth):
                status = 'resolvable' if margin > 1 else 'NOT resolvable'
                _logger.info(f"Qubits {pair}: resolvability margin {margin} ({status})")
            midpoint = (layout.qubit_positions[0] + layout.qubit_positions[1]) / 2
            nu = excitation_frequency(layout, self.scenario.zeeman, midpoint)
            _logger.info(f"Microwave for a packet centred at x={midpoint}: {nu} Hz")
        margin = confinement_margin(layout, self.scenario.zeeman, address.packet_length, self.scenario.pump.params.T_s)
        _logger.info(f"Confinement margin over {address.packet_length} sites: {margin}")

    def build_rows(self) -> List[Sequence[Any]]:
        layout = self.scenario.layout
        gamma_n = self.scenario.coupling.gamma_n
        fields = self.local_fields()
        self.log_diagnostics()
        rows = []
        for qubit, position in enumerate(layout.qubit_positions):
            omega_plus, omega_minus = target_frequencies(layout, qubit, fields, gamma_n)
            rows.append((qubit, position, local_field(layout, position), omega_plus, omega_minus))
        return rows
