"""Binary-input binary-output two-party games as 16-bit win tables.

A game is stored as a mask of *winning* outcomes.  Bit ``8x + 4y + 2a + b`` is
set iff answering ``(a, b)`` on input ``(x, y)`` wins.  In boolean-function
terms the game is ``f(x, y, a, b)`` with ``f == 0`` meaning a win, so the mask
is the complement of f's truth table.  Each input owns one nibble, with input
``(x, y)`` at bits ``4 * (2x + y)`` .. ``4 * (2x + y) + 3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

INPUTS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
OUTCOMES: tuple[tuple[int, int], ...] = INPUTS

FULL_MASK = 0xFFFF
VARIABLES = "xyab"
# variable -> bit weight inside the 4-bit index x y a b
_VAR_BIT = {"x": 8, "y": 4, "a": 2, "b": 1}


def bit_index(x: int, y: int, a: int, b: int) -> int:
    return 8 * x + 4 * y + 2 * a + b


@dataclass(frozen=True, slots=True)
class GameTable:
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= FULL_MASK:
            raise ValueError(f"mask must fit in 16 bits, got {self.mask!r}")

    def __int__(self) -> int:
        return self.mask

    @property
    def hex(self) -> str:
        return format_mask(self.mask)

    def nibble(self, x: int, y: int) -> int:
        return (self.mask >> (4 * (2 * x + y))) & 0xF

    @classmethod
    def from_winners(cls, table: dict[tuple[int, int], list[tuple[int, int]]]) -> "GameTable":
        """Build a game from ``{(x, y): [(a, b), ...]}``; missing inputs have no winners."""
        mask = 0
        for (x, y), outs in table.items():
            for a, b in outs:
                mask |= 1 << bit_index(x, y, a, b)
        return cls(mask)


GameLike = Union[GameTable, int]


def as_mask(game: GameLike) -> int:
    return game.mask if isinstance(game, GameTable) else int(game)


def format_mask(mask: int) -> str:
    return f"0x{mask:04X}"


def parse_mask(text: str) -> GameTable:
    """Accept ``0x``-prefixed hex or plain decimal."""
    s = text.strip()
    try:
        value = int(s, 16) if s.lower().startswith("0x") else int(s, 10)
    except ValueError:
        raise ValueError(f"invalid mask {text!r}: expected 0xHHHH or a decimal integer") from None
    if not 0 <= value <= FULL_MASK:
        raise ValueError(f"invalid mask {text!r}: out of 16-bit range")
    return GameTable(value)


def winners(game: GameLike, x: int, y: int) -> frozenset[tuple[int, int]]:
    nib = (as_mask(game) >> (4 * (2 * x + y))) & 0xF
    return frozenset((a, b) for a, b in OUTCOMES if nib >> (2 * a + b) & 1)


@dataclass(frozen=True, slots=True)
class Partition:
    """Sorted (non-increasing) winner counts per input."""

    counts: tuple[int, int, int, int]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def admissible(self) -> bool:
        return min(self.counts) >= 1

    def __str__(self) -> str:
        return "+".join(str(c) for c in self.counts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        parts = tuple(sorted((int(p) for p in text.split("+")), reverse=True))
        if len(parts) != 4 or not all(0 <= p <= 4 for p in parts):
            raise ValueError(f"not a 4-part partition: {text!r}")
        return cls(parts)  # type: ignore[arg-type]

    def sort_key(self) -> tuple:
        """Total descending, then counts lexicographically descending."""
        return (-self.total, tuple(-c for c in self.counts))


_POPCOUNT4 = tuple(bin(i).count("1") for i in range(16))


def input_counts(game: GameLike) -> tuple[int, int, int, int]:
    """Winner count per input, in input order 00, 01, 10, 11."""
    m = as_mask(game)
    return tuple(_POPCOUNT4[(m >> (4 * i)) & 0xF] for i in range(4))  # type: ignore[return-value]


def partition_of(game: GameLike) -> Partition:
    return Partition(tuple(sorted(input_counts(game), reverse=True)))  # type: ignore[arg-type]


def is_admissible(game: GameLike) -> bool:
    m = as_mask(game)
    return all((m >> (4 * i)) & 0xF for i in range(4))


def _forced_bit(outs: frozenset[tuple[int, int]], pos: int) -> int | None:
    """The value of output bit ``pos`` shared by every winner, if any."""
    values = {o[pos] for o in outs}
    return values.pop() if len(values) == 1 else None


def has_inconsistent_pair(game: GameLike) -> bool:
    """Two inputs sharing one player's input bit whose winners force that
    player's output bit to opposite constants.

    Alice sees only ``x``, so on inputs ``(x, 0)`` and ``(x, 1)`` she must give
    the same ``a``; if every winner of one requires ``a = α`` and every winner of
    the other requires ``a = 1 - α``, no deterministic strategy wins both.  The
    same holds for Bob on ``(0, y)`` and ``(1, y)``.  An input with no winners
    forces nothing.
    """
    m = as_mask(game)
    for x in (0, 1):
        w0, w1 = winners(m, x, 0), winners(m, x, 1)
        if w0 and w1:
            f0, f1 = _forced_bit(w0, 0), _forced_bit(w1, 0)
            if f0 is not None and f1 is not None and f0 != f1:
                return True
    for y in (0, 1):
        w0, w1 = winners(m, 0, y), winners(m, 1, y)
        if w0 and w1:
            f0, f1 = _forced_bit(w0, 1), _forced_bit(w1, 1)
            if f0 is not None and f1 is not None and f0 != f1:
                return True
    return False


def enumerate_games(admissible_only: bool = True) -> Iterator[GameTable]:
    """All games in ascending mask order."""
    for m in range(FULL_MASK + 1):
        if not admissible_only or is_admissible(m):
            yield GameTable(m)


def swap_players(game: GameLike) -> GameTable:
    """Relabel Alice as Bob: ``(x, y, a, b) -> (y, x, b, a)``."""
    m = as_mask(game)
    out = 0
    for x, y in INPUTS:
        for a, b in OUTCOMES:
            if m >> bit_index(x, y, a, b) & 1:
                out |= 1 << bit_index(y, x, b, a)
    return GameTable(out)


# --- algebraic normal form -------------------------------------------------
#
# A monomial is a 4-bit subset of {x, y, a, b} using the same weights as the
# truth-table index, so the Möbius transform maps truth table <-> coefficients
# index-for-index.


@dataclass(frozen=True, slots=True)
class AnfPolynomial:
    """XOR of AND-monomials over GF(2); the polynomial is ``f`` (0 = win)."""

    monomials: frozenset[int]

    def __str__(self) -> str:
        return format_anf(self)

    def evaluate(self, x: int, y: int, a: int, b: int) -> int:
        point = bit_index(x, y, a, b)
        return sum(1 for m in self.monomials if m & point == m) & 1


def _mobius(values: list[int]) -> list[int]:
    """In-place GF(2) Möbius transform over 4 variables (self-inverse)."""
    v = list(values)
    step = 1
    while step < 16:
        for i in range(16):
            if i & step:
                v[i] ^= v[i ^ step]
        step <<= 1
    return v


def to_anf(game: GameLike) -> AnfPolynomial:
    m = as_mask(game)
    f = [1 - (m >> i & 1) for i in range(16)]
    coeffs = _mobius(f)
    return AnfPolynomial(frozenset(i for i, c in enumerate(coeffs) if c))


def from_anf(poly: AnfPolynomial) -> GameTable:
    coeffs = [1 if i in poly.monomials else 0 for i in range(16)]
    f = _mobius(coeffs)
    return GameTable(sum(1 << i for i in range(16) if f[i] == 0))


def monomial_name(m: int) -> str:
    if m == 0:
        return "1"
    return "".join(v for v in VARIABLES if m & _VAR_BIT[v])


def _monomial_key(m: int) -> tuple:
    # higher degree first, then lexicographic with x < y < a < b
    return (-bin(m).count("1"), [VARIABLES.index(c) for c in monomial_name(m)] if m else [])


def format_anf(poly: AnfPolynomial) -> str:
    if not poly.monomials:
        return "0"
    return "+".join(monomial_name(m) for m in sorted(poly.monomials, key=_monomial_key))


class AnfParseError(ValueError):
    pass


_SEPARATORS = {"+", "⊕", "^"}


def parse_anf(text: str) -> AnfPolynomial:
    """Parse ``"xy+a+b"``-style text.  Repeated monomials cancel (GF(2))."""
    src = re.sub(r"\s+", "", text)
    if not src:
        raise AnfParseError("empty ANF expression")
    terms: list[tuple[str, int]] = []
    start = 0
    for i, ch in enumerate(src + "+"):
        if ch in _SEPARATORS or i == len(src):
            terms.append((src[start:i], start))
            start = i + 1
    monomials: set[int] = set()
    for term, pos in terms:
        if not term:
            raise AnfParseError(f"empty term at position {pos}")
        if term in ("0", "1"):
            if term == "1":
                monomials ^= {0}
            continue
        m = 0
        for k, ch in enumerate(term):
            if ch not in _VAR_BIT:
                raise AnfParseError(f"unexpected character {ch!r} at position {pos + k}")
            m |= _VAR_BIT[ch]
        monomials ^= {m}
    return AnfPolynomial(frozenset(monomials))
