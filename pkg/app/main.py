import argparse
import configparser
import logging
import os
import sys

from typing import List, Optional

from magnongate.core.errors import ConfigurationException
from magnongate.core.scenario import ScenarioReader, read_configs
from magnongate.executor import COMMAND_HANDLERS, EXIT_USAGE_ERROR, Simulation

LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'

_logger = logging.getLogger('magnongate')


def setup_logging(configs: configparser.ConfigParser):
    """
    Setup logging configuration.
    :param configs: The scenario configs; [settings] holds log_level and an optional log_file.
    """
    log_file = configs.get('settings', 'log_file', fallback='').strip()
    log_level = configs.get('settings', 'log_level', fallback='info').upper()
    level = getattr(logging, log_level, logging.INFO)
    formatter = logging.Formatter(LOG_FORMAT)

    # Drop handlers from a previous run in the same process
    for handler in list(_logger.handlers):
        _logger.removeHandler(handler)
        handler.close()

    # Console handler writes to stderr, stdout carries the CSV
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    _logger.addHandler(console_handler)

    if log_file:
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        _logger.addHandler(file_handler)

    _logger.setLevel(level)
    _logger.propagate = False
    _logger.info(f"Logging initialized: {log_file or 'console'} at level {log_level}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='magnongate',
        description='Magnon-mediated inter-qubit coupling and CN-gate simulation.')
    parser.add_argument('command', choices=sorted(COMMAND_HANDLERS), help='computation to run')
    parser.add_argument('--config', default='paper', help="scenario file, or a built-in scenario name (default: paper)")
    parser.add_argument('--out', help='write the CSV table to this path instead of stdout')
    parser.add_argument('--format', default='csv', choices=['csv'], help='output format')
    parser.add_argument('--r-max', dest='r_max', type=int, help='largest separation of the sweep (default: N)')
    parser.add_argument('--n0', type=float, help='k=0 magnon occupation (default: W_ex T_s)')
    parser.add_argument('--tau', type=float, help='gate free-evolution time in s (default: 1/(2W))')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the simulation toolkit.
    :param argv: Command-line arguments without the program name.
    :return: The exit code.
    """
    options = build_parser().parse_args(argv)

    # reproduce always runs the built-in benchmark scenario
    config_name = 'paper' if options.command == 'reproduce' else options.config
    try:
        configs = read_configs(config_name)
        setup_logging(configs)
        scenario = ScenarioReader(configs, name=config_name).read()
    except ConfigurationException as e:
        logging.getLogger('magnongate').error(f"Failed to load scenario '{config_name}': {e.message}")
        return EXIT_USAGE_ERROR

    simulation = Simulation(scenario, options)
    return simulation.run_command(options.command)


if __name__ == "__main__":
    sys.exit(main())
