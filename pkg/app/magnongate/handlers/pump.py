import logging

from typing import Any, List, Sequence

from .base import CommandHandler
from ..core.pump import coupling_schedule, evolve_population, steady_state_population, switch_off_time

_logger = logging.getLogger(__name__)


class PumpHandler(CommandHandler):
    header = ('t_s', 'n0', 'W_hz')

    def build_rows(self) -> List[Sequence[Any]]:
        pump = self.scenario.pump
        T_s = pump.params.T_s
        _logger.info(f"Steady state n0 = {steady_state_population(pump.params)}, "
                     f"1% switch-off time {switch_off_time(T_s, 0.01)} s")
        trace = evolve_population(pump.n0_init, pump.schedule, T_s, pump.samples_per_segment)
        return coupling_schedule(trace, self.scenario.dispersion, self.scenario.coupling)
