import logging

from typing import Any, List, Sequence

from .base import CommandHandler
from ..core.coupling import coupling_vs_distance

_logger = logging.getLogger(__name__)


class CouplingHandler(CommandHandler):
    header = ('r', 'W_hz', 'W_abs_hz')

    def build_rows(self) -> List[Sequence[Any]]:
        r = self.scenario.coupling.r_ij
        coupling = self.coupling()
        _logger.info(f"W_ij at r={r}: {coupling} Hz")
        return [(r, coupling, abs(coupling))]


class SweepHandler(CommandHandler):
    header = ('r', 'W_hz', 'W_abs_hz')

    def build_rows(self) -> List[Sequence[Any]]:
        r_max = self.option('r_max', self.scenario.coupling.N)
        rows = coupling_vs_distance(self.scenario.dispersion, self.populated_n0(), self.scenario.coupling, r_max)
        return [(r, coupling, abs(coupling)) for r, coupling in rows]
