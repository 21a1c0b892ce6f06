import csv
import logging

from argparse import Namespace
from typing import Any, List, Optional, Sequence, TextIO

from ..core.coupling import range_function_k0
from ..core.pump import steady_state_population
from ..core.scenario import Scenario

_logger = logging.getLogger(__name__)

FLOAT_FORMAT = '.17g'


class HandlerNotFoundException(Exception):
    """Exception raised when no handler is registered for a subcommand."""
    def __init__(self, message="Handler not found for this subcommand"):
        self.message = message
        super().__init__(self.message)


def format_value(value: Any) -> str:
    """Render a CSV cell; floats keep 17 significant digits so they round-trip exactly."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    return str(value)


class CommandHandler:
    header: Sequence[str] = ()

    def __init__(self, scenario: Scenario, options: Namespace):
        """
        Initialize the handler with the scenario and the command-line overrides.
        :param scenario: The validated scenario.
        :param options: Parsed command-line options (r_max, n0, tau, ...).
        """
        self.scenario = scenario
        self.options = options

    def option(self, name: str, default: Any = None) -> Any:
        value = getattr(self.options, name, None)
        return default if value is None else value

    def populated_n0(self) -> float:
        """k = 0 occupation: the --n0 override, else the steady state W_ex T_s."""
        n0 = self.option('n0')
        if n0 is None:
            n0 = steady_state_population(self.scenario.pump.params)
            _logger.info(f"Steady-state k=0 population n0 = W_ex T_s = {n0}")
        return n0

    def coupling(self) -> float:
        """W_ij in Hz at the scenario separation for the populated n0."""
        return range_function_k0(self.scenario.dispersion, self.populated_n0(), self.scenario.coupling)

    def build_rows(self) -> List[Sequence[Any]]:
        """
        This method should be overridden by subclasses to compute the table of the subcommand.
        :return: A list of rows matching `header`.
        """
        raise NotImplementedError("Subclasses should implement this method.")

    def save_into_destination(self, rows: List[Sequence[Any]], stream: TextIO):
        """
        Write the header and the rows as CSV.
        :param rows: The rows built by the handler.
        :param stream: The open text stream receiving the table.
        """
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.header)
        for row in rows:
            writer.writerow([format_value(value) for value in row])

    def run(self, stream: TextIO, out_path: Optional[str] = None) -> int:
        rows = self.build_rows()
        if out_path:
            with open(out_path, 'w', newline='') as f:
                self.save_into_destination(rows, f)
            _logger.info(f"Wrote {len(rows)} rows to {out_path}")
        else:
            self.save_into_destination(rows, stream)
        return len(rows)
