"""Expected (classical, quantum) rows per partition for 4 to 11 winners.

Quantum values are rounded to two or three decimals, so comparisons use
:data:`QUANTUM_TOL`.  A partition missing from the table has no expectation;
anything a scan finds outside these rows is reported as a discrepancy.
"""

from __future__ import annotations

from fractions import Fraction

from nlgames.game import Partition

QUANTUM_TOL = 5e-3

_Q = Fraction(3, 4)
_H = Fraction(1, 2)
_ONE = Fraction(1)

_ROWS: dict[str, list[tuple[Fraction, float, float | None]]] = {
    # total 4
    "1+1+1+1": [(_H, 0.5, None), (_Q, 0.75, None), (_ONE, 1.0, None)],
    # total 5
    "2+1+1+1": [(_H, 0.542, 0.042), (_Q, 0.75, None), (_ONE, 1.0, None)],
    # total 6
    "3+1+1+1": [(_H, 0.55, 0.05), (_Q, 0.75, None), (_ONE, 1.0, None)],
    "2+2+1+1": [(_Q, 0.75, None), (_ONE, 1.0, None)],
    # total 7
    "3+2+1+1": [(_Q, 0.75, None), (_ONE, 1.0, None)],
    "2+2+2+1": [(_Q, 0.762, 0.012), (_ONE, 1.0, None)],
    # total 8
    "4+2+1+1": [(_Q, 0.75, None), (_ONE, 1.0, None)],
    "3+3+1+1": [(_Q, 0.75, None), (_ONE, 1.0, None)],
    "2+2+2+2": [(_Q, 0.853, 0.103), (_ONE, 1.0, None)],
    "3+2+2+1": [(_Q, 0.78, 0.03), (_ONE, 1.0, None)],
    # total 9
    "4+3+1+1": [(_Q, 0.75, None), (_ONE, 1.0, None)],
    "4+2+2+1": [(_ONE, 1.0, None)],
    "3+2+2+2": [(_ONE, 1.0, None)],
    "3+3+2+1": [(_Q, 0.792, 0.042), (_ONE, 1.0, None)],
    # total 10
    "4+4+1+1": [(_ONE, 1.0, None)],
    "4+2+2+2": [(_ONE, 1.0, None)],
    "3+3+2+2": [(_ONE, 1.0, None)],
    "4+3+2+1": [(_ONE, 1.0, None)],
    "3+3+3+1": [(_Q, 0.8, 0.05), (_ONE, 1.0, None)],
    # total 11
    "4+4+2+1": [(_ONE, 1.0, None)],
    "4+3+3+1": [(_ONE, 1.0, None)],
    "4+3+2+2": [(_ONE, 1.0, None)],
    "3+3+3+2": [(_ONE, 1.0, None)],
}

# partition -> [(classical, quantum, separation or None for "NA")]
REFERENCE_OUTCOMES: dict[Partition, list[tuple[Fraction, float, float | None]]] = {
    Partition.parse(k): v for k, v in _ROWS.items()
}


def matches(expected: tuple[Fraction, float], found: tuple[Fraction, float]) -> bool:
    return expected[0] == found[0] and abs(expected[1] - found[1]) <= QUANTUM_TOL
