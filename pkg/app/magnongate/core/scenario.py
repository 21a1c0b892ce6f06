import logging
import os

from configparser import ConfigParser, Error as ConfigParserError, NoOptionError, NoSectionError
from dataclasses import dataclass
from typing import Optional, Tuple

from .addressing import ChainLayout
from .coupling import CouplingParams
from .dispersion import DispersionModel, ZeemanModel
from .errors import ConfigurationException, DomainException
from .pump import DriveSchedule, PumpParams

_logger = logging.getLogger(__name__)

SCENARIOS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), 'scenarios')
BUILTIN_SCENARIOS = {
    'paper': os.path.join(SCENARIOS_DIR, 'paper.conf'),
}

PULSE_MODES = ('ideal', 'finite')


@dataclass(frozen=True)
class PumpSettings:
    params: PumpParams
    schedule: DriveSchedule
    n0_init: float
    samples_per_segment: int


@dataclass(frozen=True)
class AddressSettings:
    h_tr: Optional[float]
    h_SN: Optional[float]
    linewidth: float
    packet_length: int


@dataclass(frozen=True)
class LevelGrid:
    field_min: float
    field_max: float
    field_steps: int


@dataclass(frozen=True)
class GateSettings:
    W: Optional[float]
    delta_c: float
    delta_t: float
    pulse_mode: str
    rabi_frequency: float


@dataclass(frozen=True)
class Scenario:
    name: str
    dispersion: DispersionModel
    zeeman: ZeemanModel
    levels: LevelGrid
    coupling: CouplingParams
    pump: PumpSettings
    layout: ChainLayout
    address: AddressSettings
    gate: GateSettings


def read_configs(filename: str) -> ConfigParser:
    """
    Read a scenario file, accepting the name of a built-in scenario as well as a path.
    :param filename: A path or a built-in scenario name (e.g. 'paper').
    :return: The parsed configuration.
    """
    path = BUILTIN_SCENARIOS.get(filename, filename)
    if not os.path.isfile(path):
        raise ConfigurationException(f"Scenario file '{filename}' was not found")
    configs = ConfigParser()
    try:
        configs.read(path)
    except ConfigParserError as e:
        raise ConfigurationException(f"Scenario file '{filename}' is malformed: {e}")
    return configs


class ScenarioReader:

    def __init__(self, configs: ConfigParser, name: str = 'scenario'):
        """
        Initialize the reader over a parsed scenario file.
        :param configs: The parsed configuration.
        :param name: The scenario name used in log lines.
        """
        self.configs = configs
        self.name = name

    def _get(self, getter, section: str, option: str, **kwargs):
        try:
            return getter(section, option, **kwargs)
        except NoSectionError as e:
            _logger.error(f"Configuration error: section '{section}' not found: {e}")
            raise ConfigurationException(f"Missing section [{section}]")
        except NoOptionError as e:
            _logger.error(f"Configuration error: missing option in section '{section}': {e}")
            raise ConfigurationException(f"Missing option {section}.{option}")
        except ValueError as e:
            raise ConfigurationException(f"Invalid value for {section}.{option}: {e}")

    def get_float(self, section: str, option: str, **kwargs) -> float:
        return self._get(self.configs.getfloat, section, option, **kwargs)

    def get_int(self, section: str, option: str, **kwargs) -> int:
        return self._get(self.configs.getint, section, option, **kwargs)

    def get_str(self, section: str, option: str, **kwargs) -> str:
        return self._get(self.configs.get, section, option, **kwargs)

    def get_optional_float(self, section: str, option: str) -> Optional[float]:
        value = self.get_str(section, option, fallback='').strip()
        if not value:
            return None
        try:
            return float(value)
        except ValueError as e:
            raise ConfigurationException(f"Invalid value for {section}.{option}: {e}")

    def get_int_list(self, section: str, option: str, **kwargs) -> Tuple[int, ...]:
        value = self.get_str(section, option, **kwargs)
        try:
            return tuple(int(item) for item in value.split(',') if item.strip())
        except ValueError as e:
            raise ConfigurationException(f"Invalid integer list for {section}.{option}: {e}")

    def get_schedule(self, section: str, option: str) -> DriveSchedule:
        value = self.get_str(section, option)
        segments = []
        for item in value.split(','):
            if not item.strip():
                continue
            try:
                duration, w_ex = item.split(':')
                segments.append((float(duration), float(w_ex)))
            except ValueError:
                raise ConfigurationException(f"Invalid schedule segment '{item.strip()}' in {section}.{option}, "
                                             f"expected duration:W_ex")
        return DriveSchedule(tuple(segments))

    def read(self) -> Scenario:
        """
        Build every module block of the scenario, validating their invariants.
        :return: The scenario.
        """
        try:
            return self._read()
        except DomainException as e:
            raise ConfigurationException(f"Scenario '{self.name}': {e.message}")

    def _read(self) -> Scenario:
        dispersion = DispersionModel(C=self.get_float('dispersion', 'C'),
                                     J=self.get_float('dispersion', 'J'),
                                     j1=self.get_float('dispersion', 'j1'))
        zeeman = ZeemanModel(gap=self.get_float('zeeman', 'gap'),
                             g=self.get_float('zeeman', 'g', fallback=2.0))
        levels = LevelGrid(field_min=self.get_float('zeeman', 'field_min', fallback=0.0),
                           field_max=self.get_float('zeeman', 'field_max', fallback=400.0),
                           field_steps=self.get_int('zeeman', 'field_steps', fallback=41))
        if levels.field_steps < 2 or levels.field_max <= levels.field_min or levels.field_min < 0:
            raise ConfigurationException("zeeman.field_min/field_max/field_steps do not describe a field grid")
        coupling = CouplingParams(gamma_n=self.get_float('coupling', 'gamma_n'),
                                  A_par=self.get_float('coupling', 'A_par'),
                                  N=self.get_int('coupling', 'N'),
                                  r_ij=self.get_int('coupling', 'r_ij'))
        pump = PumpSettings(params=PumpParams(W_ex=self.get_float('pump', 'W_ex'),
                                              T_s=self.get_float('pump', 'T_s')),
                            schedule=self.get_schedule('pump', 'schedule'),
                            n0_init=self.get_float('pump', 'n0_init', fallback=0.0),
                            samples_per_segment=self.get_int('pump', 'samples_per_segment', fallback=50))
        extent = self.get_int_list('layout', 'chain_extent')
        if len(extent) != 2:
            raise ConfigurationException(f"layout.chain_extent needs two values, got {extent}")
        layout = ChainLayout(a=self.get_float('layout', 'a'),
                             H0=self.get_float('layout', 'H0'),
                             G=self.get_float('layout', 'G'),
                             qubit_positions=self.get_int_list('layout', 'qubit_positions'),
                             chain_extent=(extent[0], extent[1]))
        address = AddressSettings(h_tr=self.get_optional_float('layout', 'h_tr'),
                                  h_SN=self.get_optional_float('layout', 'h_SN'),
                                  linewidth=self.get_float('layout', 'linewidth', fallback=0.1),
                                  packet_length=self.get_int('layout', 'packet_length', fallback=coupling.N))
        gate = GateSettings(W=self.get_optional_float('gate', 'W'),
                            delta_c=self.get_float('gate', 'delta_c', fallback=0.0),
                            delta_t=self.get_float('gate', 'delta_t', fallback=0.0),
                            pulse_mode=self.get_str('gate', 'pulse_mode', fallback='ideal'),
                            rabi_frequency=self.get_float('gate', 'rabi_frequency', fallback=1.0e6))
        if gate.pulse_mode not in PULSE_MODES:
            raise ConfigurationException(f"gate.pulse_mode must be one of {PULSE_MODES}, got '{gate.pulse_mode}'")

        _logger.info(f"Loaded scenario '{self.name}'")
        return Scenario(name=self.name, dispersion=dispersion, zeeman=zeeman, levels=levels, coupling=coupling,
                        pump=pump, layout=layout, address=address, gate=gate)


def load_scenario(filename: str) -> Scenario:
    """
    Read and validate a scenario file or a built-in scenario.
    :param filename: A path or a built-in scenario name.
    :return: The scenario.
    """
    return ScenarioReader(read_configs(filename), name=filename).read()
