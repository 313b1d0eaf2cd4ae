"""Seeded Monte Carlo referee for classical strategies and the quantum family.

Randomness comes from numpy's PCG64 bit generator seeded with the 64-bit
config seed, so a report is reproducible across platforms and numpy versions
that keep PCG64's stream stable.  Each round the referee draws (x, y)
uniformly; quantum answers are sampled from the exact joint distribution of
the measurement family rather than from a state-vector simulation.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Union

import numpy as np

from nlgames.classical import JointStrategy, evaluate_strategy
from nlgames.game import INPUTS, GameTable
from nlgames.quantum import AngleSet, joint_distribution, success_probability

Mode = Union[JointStrategy, AngleSet]


@dataclass(frozen=True)
class SimulationConfig:
    game: GameTable
    mode: Mode
    rounds: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError(f"rounds must be >= 1, got {self.rounds}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class SimulationReport:
    wins: int
    rounds: int
    empirical_rate: float
    expected_rate: float
    standard_error: float
    z_score: float

    def to_dict(self) -> dict:
        return asdict(self)


def run(config: SimulationConfig) -> SimulationReport:
    rng = np.random.Generator(np.random.PCG64(config.seed))
    n = config.rounds
    inputs = rng.integers(0, 4, size=n)  # index 2x + y
    mask = config.game.mask

    if isinstance(config.mode, JointStrategy):
        s = config.mode
        # per input: cell index 2a + b of the strategy's answer
        answer = np.array([2 * a + b for a, b in (s.outputs(x, y) for x, y in INPUTS)])
        cells = answer[inputs]
        expected = float(evaluate_strategy(config.game, s))
    elif isinstance(config.mode, AngleSet):
        probs = np.array([joint_distribution(config.mode, x, y) for x, y in INPUTS])
        cdf = np.cumsum(probs, axis=1)
        u = rng.random(n)
        cells = (u[:, None] >= cdf[inputs, :3]).sum(axis=1)
        expected = success_probability(config.game, config.mode)
    else:
        raise TypeError(f"mode must be a JointStrategy or AngleSet, got {type(config.mode).__name__}")

    win_bits = (mask >> (4 * inputs + cells)) & 1
    wins = int(win_bits.sum())
    rate = wins / n
    se = math.sqrt(max(0.0, expected * (1 - expected)) / n)
    if se > 0:
        z = (rate - expected) / se
    else:
        z = 0.0 if rate == expected else math.copysign(math.inf, rate - expected)
    return SimulationReport(wins, n, rate, expected, se, z)
