import logging

from typing import Any, List, Sequence

import numpy as np

from .base import CommandHandler
from ..core.dispersion import TRIPLET_BRANCHES, band_extrema, magnon_energy, triplet_level

_logger = logging.getLogger(__name__)


class DispersionHandler(CommandHandler):
    header = ('n', 'k_over_pi', 'energy_hz')

    def build_rows(self) -> List[Sequence[Any]]:
        model = self.scenario.dispersion
        N = self.scenario.coupling.N
        low, high, width = band_extrema(model)
        _logger.info(f"Band from {low} Hz to {high} Hz, bandwidth {width} Hz")
        return [(n, n / N, magnon_energy(model, n, N)) for n in range(N + 1)]


class LevelsHandler(CommandHandler):
    header = ('H_kOe', 'E_m_minus1_hz', 'E_m0_hz', 'E_m_plus1_hz')

    def build_rows(self) -> List[Sequence[Any]]:
        zeeman = self.scenario.zeeman
        grid = self.scenario.levels
        fields = np.linspace(grid.field_min, grid.field_max, grid.field_steps).tolist()
        return [(field, *(triplet_level(zeeman, m, field) for m in TRIPLET_BRANCHES)) for field in fields]
