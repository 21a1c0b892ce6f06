"""
k = 0 magnon population under microwave drive.

dn0/dt = W_ex - n0 / T_s is solved exactly on every constant-drive segment:
n0(t) = W_ex T_s + (n0_start - W_ex T_s) exp(-t / T_s).
"""
import logging
import math

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .coupling import CouplingParams, range_function_k0
from .dispersion import DispersionModel
from .errors import DomainException
from .quantities import require_finite

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PumpParams:
    W_ex: float
    T_s: float

    def __post_init__(self):
        if not math.isfinite(self.W_ex) or self.W_ex < 0:
            raise DomainException(f"pump.W_ex must be finite and >= 0, got {self.W_ex}")
        if not math.isfinite(self.T_s) or self.T_s <= 0:
            raise DomainException(f"pump.T_s must be finite and positive, got {self.T_s}")


@dataclass(frozen=True)
class DriveSchedule:
    segments: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        for index, (duration, w_ex) in enumerate(self.segments):
            if not math.isfinite(duration) or duration <= 0:
                raise DomainException(f"Schedule segment {index} needs a positive duration, got {duration}")
            if not math.isfinite(w_ex) or w_ex < 0:
                raise DomainException(f"Schedule segment {index} needs W_ex >= 0, got {w_ex}")

    @classmethod
    def constant(cls, duration: float, w_ex: float) -> 'DriveSchedule':
        return cls(((float(duration), float(w_ex)),))

    @property
    def total_duration(self) -> float:
        return math.fsum(duration for duration, _ in self.segments)


@dataclass(frozen=True)
class PopulationTrace:
    times: np.ndarray
    populations: np.ndarray

    def __iter__(self):
        return iter(zip(self.times.tolist(), self.populations.tolist()))

    def __len__(self):
        return len(self.times)


def steady_state_population(params: PumpParams) -> float:
    """n0 = W_ex T_s, where excitation and relaxation balance."""
    return params.W_ex * params.T_s


def relax(n0_start: float, w_ex: float, T_s: float, elapsed):
    """
    Closed-form population after `elapsed` seconds of constant drive w_ex.
    :param elapsed: A time or an array of times since the segment start.
    """
    target = w_ex * T_s
    elapsed = np.asarray(elapsed, dtype=float)
    return np.where(elapsed == 0, n0_start, target + (n0_start - target) * np.exp(-elapsed / T_s))


def evolve_population(n0_init: float, schedule: DriveSchedule, T_s: float,
                      samples_per_segment: int = 50) -> PopulationTrace:
    """
    Population trace over a piecewise-constant drive schedule.
    :param n0_init: The k = 0 occupation at t = 0.
    :param schedule: The drive segments (duration s, W_ex 1/s).
    :param T_s: The magnon lifetime in s.
    :param samples_per_segment: Number of samples per segment, the segment start included.
    :return: The trace, ending with a sample at the end of the last segment.
    """
    n0_init = require_finite('n0_init', n0_init)
    if n0_init < 0:
        raise DomainException(f"n0_init must be non-negative, got {n0_init}")
    if not math.isfinite(T_s) or T_s <= 0:
        raise DomainException(f"T_s must be finite and positive, got {T_s}")
    if samples_per_segment < 1:
        raise DomainException(f"samples_per_segment must be >= 1, got {samples_per_segment}")

    times: List[float] = []
    populations: List[float] = []
    start, n0 = 0.0, n0_init
    for duration, w_ex in schedule.segments:
        offsets = np.arange(samples_per_segment) * (duration / samples_per_segment)
        times.extend((start + offsets).tolist())
        populations.extend(np.atleast_1d(relax(n0, w_ex, T_s, offsets)).tolist())
        n0 = float(relax(n0, w_ex, T_s, duration))
        start += duration
    times.append(start)
    populations.append(n0)
    _logger.debug(f"Evolved {len(schedule.segments)} drive segments up to t={start} s, final n0={n0}")
    return PopulationTrace(np.array(times), np.array(populations))


def coupling_schedule(trace: PopulationTrace, model: DispersionModel,
                      params: CouplingParams) -> List[Tuple[float, float, float]]:
    """
    Map a population trace through the k = 0 range function.
    :return: A list of (t in s, n0, W in Hz).
    """
    if np.any(trace.populations < 0):
        raise DomainException("The population trace contains negative occupations")
    return [(t, n0, range_function_k0(model, n0, params)) for t, n0 in trace]


def switch_off_time(T_s: float, fraction: float) -> float:
    """Time after the drive is shut off for n0 to fall to `fraction` of its value."""
    if not 0 < fraction < 1:
        raise DomainException(f"fraction must lie in (0, 1), got {fraction}")
    return T_s * math.log(1 / fraction)
