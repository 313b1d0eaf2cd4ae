"""Deterministic classical strategies and the exact classical optimum."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from nlgames.game import INPUTS, GameLike, as_mask, bit_index


class PlayerRule(enum.Enum):
    """Map from a player's input bit to an output bit.

    Values are the (output on 0, output on 1) pair, which is also the column
    pair of the strategy table: ordering members by value gives row order.
    """

    ConstZero = (0, 0)
    Identity = (0, 1)
    Negation = (1, 0)
    ConstOne = (1, 1)

    def __call__(self, bit: int) -> int:
        return self.value[bit]

    @property
    def constant(self) -> bool:
        return self.value[0] == self.value[1]

    def text(self, var: str) -> str:
        return {"ConstZero": "0", "ConstOne": "1", "Identity": var, "Negation": "!" + var}[self.name]


RULES: tuple[PlayerRule, ...] = tuple(sorted(PlayerRule, key=lambda r: r.value))


@dataclass(frozen=True, slots=True)
class JointStrategy:
    alice: PlayerRule
    bob: PlayerRule

    def outputs(self, x: int, y: int) -> tuple[int, int]:
        return self.alice(x), self.bob(y)

    def __str__(self) -> str:
        return f"a={self.alice.text('x')}, b={self.bob.text('y')}"

    @property
    def play_mask(self) -> int:
        """Bits of the 4 (input, output) cells this strategy produces."""
        return sum(1 << bit_index(x, y, *self.outputs(x, y)) for x, y in INPUTS)


# strategy-table row order: alice varies slower
STRATEGIES: tuple[JointStrategy, ...] = tuple(JointStrategy(a, b) for a in RULES for b in RULES)
_PLAY_MASKS = tuple(s.play_mask for s in STRATEGIES)


_RULE_TEXT = {
    "a": {"0": PlayerRule.ConstZero, "1": PlayerRule.ConstOne, "x": PlayerRule.Identity, "!x": PlayerRule.Negation},
    "b": {"0": PlayerRule.ConstZero, "1": PlayerRule.ConstOne, "y": PlayerRule.Identity, "!y": PlayerRule.Negation},
}


def parse_strategy(text: str) -> JointStrategy:
    """Parse ``"a=0, b=!y"``; ``~`` is accepted for negation."""
    fields = dict.fromkeys("ab")
    for part in filter(None, (p.strip() for p in text.replace("~", "!").split(","))):
        m = re.fullmatch(r"([ab])\s*=\s*(\S+)", part)
        if not m or m.group(2) not in _RULE_TEXT[m.group(1)]:
            raise ValueError(f"bad strategy component {part!r}; expected a=0|1|x|!x, b=0|1|y|!y")
        fields[m.group(1)] = _RULE_TEXT[m.group(1)][m.group(2)]
    if fields["a"] is None or fields["b"] is None:
        raise ValueError(f"strategy {text!r} must set both a and b")
    return JointStrategy(fields["a"], fields["b"])


def wins(game: GameLike, s: JointStrategy) -> int:
    """Number of inputs (out of 4) the strategy wins."""
    return bin(as_mask(game) & s.play_mask).count("1")


def evaluate_strategy(game: GameLike, s: JointStrategy) -> Fraction:
    return Fraction(wins(game, s), 4)


@dataclass(frozen=True)
class ClassicalResult:
    max_probability: Fraction
    maximizers: tuple[JointStrategy, ...]


def classical_max_wins(mask: int) -> int:
    """Best number of inputs won; the hot path used by the scanner."""
    return max(bin(mask & p).count("1") for p in _PLAY_MASKS)


def classical_max(game: GameLike) -> ClassicalResult:
    m = as_mask(game)
    counts = [bin(m & p).count("1") for p in _PLAY_MASKS]
    best = max(counts)
    return ClassicalResult(
        Fraction(best, 4), tuple(s for s, c in zip(STRATEGIES, counts) if c == best)
    )


class StrategyGroup(enum.Enum):
    Constant = 1
    InputDependent = 2
    MixedAliceDependent = 3
    MixedBobDependent = 4


def group_of(s: JointStrategy) -> StrategyGroup:
    if s.alice.constant and s.bob.constant:
        return StrategyGroup.Constant
    if not s.alice.constant and not s.bob.constant:
        return StrategyGroup.InputDependent
    if not s.alice.constant:
        return StrategyGroup.MixedAliceDependent
    return StrategyGroup.MixedBobDependent


def strategies_winning_both(
    game: GameLike, input1: Sequence[int], input2: Sequence[int]
) -> list[JointStrategy]:
    """Strategies whose answers win on both given inputs, in table order."""
    i1, i2 = tuple(input1), tuple(input2)
    if i1 == i2:
        raise ValueError("the two inputs must differ")
    m = as_mask(game)
    out = []
    for s in STRATEGIES:
        if all(m >> bit_index(x, y, *s.outputs(x, y)) & 1 for x, y in (i1, i2)):
            out.append(s)
    return out
