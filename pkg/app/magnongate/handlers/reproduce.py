import logging

from typing import Any, List, Sequence

from .base import CommandHandler
from ..core.coupling import dipolar_coupling
from ..core.gatesim import free_evolution_time
from ..core.pump import steady_state_population

_logger = logging.getLogger(__name__)

REFERENCE_COUPLING_HZ = 15.0e3
DIPOLAR_DISTANCE_M = 3.0e-10


class ReproduceHandler(CommandHandler):
    header = ('quantity', 'computed', 'reference', 'unit')

    def populated_n0(self) -> float:
        """The benchmark always runs at the steady state W_ex T_s; --n0 does not apply."""
        if self.option('n0') is not None:
            _logger.warning(f"Ignoring --n0={self.option('n0')}: the benchmark uses the scenario steady state")
        return steady_state_population(self.scenario.pump.params)

    def build_rows(self) -> List[Sequence[Any]]:
        coupling_params = self.scenario.coupling
        n0 = self.populated_n0()
        coupling = self.coupling()
        deviation = (abs(coupling) - REFERENCE_COUPLING_HZ) / REFERENCE_COUPLING_HZ
        _logger.info(f"Benchmark W_ij = {coupling} Hz against {REFERENCE_COUPLING_HZ} Hz ({deviation:+.2%})")
        return [
            ('W_ij', coupling, REFERENCE_COUPLING_HZ, 'Hz'),
            ('W_ij_abs', abs(coupling), REFERENCE_COUPLING_HZ, 'Hz'),
            ('n0_over_N', n0 / coupling_params.N, 0.01, ''),
            ('dipolar_3A', dipolar_coupling(coupling_params.gamma_n, DIPOLAR_DISTANCE_M), None, 'Hz'),
            ('gate_time', free_evolution_time(coupling), None, 's'),
        ]
