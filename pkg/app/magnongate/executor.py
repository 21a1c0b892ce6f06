import logging
import sys

from argparse import Namespace
from typing import Optional, TextIO

from .core.errors import ConfigurationException, DomainException
from .core.scenario import Scenario
from .handlers.address import AddressHandler
from .handlers.base import HandlerNotFoundException
from .handlers.coupling import CouplingHandler, SweepHandler
from .handlers.dispersion import DispersionHandler, LevelsHandler
from .handlers.gate import GateHandler
from .handlers.pump import PumpHandler
from .handlers.reproduce import ReproduceHandler

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

COMMAND_HANDLERS = {
    'dispersion': DispersionHandler,
    'levels': LevelsHandler,
    'coupling': CouplingHandler,
    'sweep': SweepHandler,
    'pump': PumpHandler,
    'address': AddressHandler,
    'gate': GateHandler,
    'reproduce': ReproduceHandler,
}


class Simulation:

    def __init__(self, scenario: Scenario, options: Namespace):
        """
        Initialize the Simulation with a validated scenario and the command-line options.
        :param scenario: The scenario every subcommand computes on.
        :param options: Parsed command-line options.
        """
        self.scenario = scenario
        self.options = options

    def run_command(self, command: str, stream: Optional[TextIO] = None) -> int:
        """
        Run one subcommand and emit its table.
        :param command: The subcommand name (e.g. 'coupling', 'gate').
        :param stream: The stream receiving the CSV when no --out path is given.
        :return: The process exit code.
        """
        stream = sys.stdout if stream is None else stream
        try:
            _logger.info(f"Running '{command}' on scenario '{self.scenario.name}'...")
            handler_class = COMMAND_HANDLERS.get(command)
            if handler_class is None:
                raise HandlerNotFoundException(f"There is no handler for the subcommand {command}!")
            handler = handler_class(self.scenario, self.options)
            count = handler.run(stream, getattr(self.options, 'out', None))
            _logger.info(f"'{command}' complete: {count} rows.")
            return EXIT_OK
        except HandlerNotFoundException as e:
            _logger.error(str(e))
            return EXIT_USAGE_ERROR
        except ConfigurationException as e:
            _logger.error(f"Configuration error during '{command}': {e.message}")
            return EXIT_USAGE_ERROR
        except DomainException as e:
            _logger.error(f"Domain error during '{command}': {e.message}")
            return EXIT_DOMAIN_ERROR
        except OSError as e:
            _logger.error(f"Cannot write the '{command}' table: {e}")
            return EXIT_USAGE_ERROR
