"""Exhaustive scan over games and per-partition aggregation."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from nlgames.classical import JointStrategy, classical_max, classical_max_wins
from nlgames.game import (
    FULL_MASK,
    GameTable,
    Partition,
    format_anf,
    has_inconsistent_pair,
    is_admissible,
    partition_of,
    to_anf,
)
from nlgames.quantum import AngleSet, analytic_family_max, coefficient_profile

SEPARATION_EPS = 1e-9
QUANTUM_ROUND = 6


@dataclass(frozen=True)
class ScanRecord:
    mask: GameTable
    partition: Partition
    classical: Fraction
    family: float
    reported_quantum: float
    separation: float
    inconsistent: bool


def analyze_mask(mask: int) -> ScanRecord:
    classical = Fraction(classical_max_wins(mask), 4)
    family = analytic_family_max(coefficient_profile(mask)).value
    return ScanRecord(
        mask=GameTable(mask),
        partition=partition_of(mask),
        classical=classical,
        family=family,
        reported_quantum=max(family, float(classical)),
        separation=max(0.0, family - float(classical)),
        inconsistent=has_inconsistent_pair(mask),
    )


def _scan_chunk(masks: Sequence[int]) -> list[ScanRecord]:
    return [analyze_mask(m) for m in masks]


def scan(admissible_only: bool = True, workers: int = 1, chunk_size: int = 2048) -> list[ScanRecord]:
    """One record per game, in ascending mask order for any worker count."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    masks = [m for m in range(FULL_MASK + 1) if not admissible_only or is_admissible(m)]
    if workers == 1:
        return _scan_chunk(masks)
    chunks = [masks[i : i + chunk_size] for i in range(0, len(masks), chunk_size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order, which is the merge order
        return list(itertools.chain.from_iterable(pool.map(_scan_chunk, chunks)))


@dataclass(frozen=True)
class PartitionSummary:
    partition: Partition
    game_count: int
    outcome_pairs: tuple[tuple[Fraction, float], ...]  # sorted, quantum rounded
    max_separation: float
    witness_mask: GameTable | None


def summarize(records: Iterable[ScanRecord]) -> list[PartitionSummary]:
    groups: dict[Partition, list[ScanRecord]] = {}
    for r in records:
        groups.setdefault(r.partition, []).append(r)
    if not groups:
        raise ValueError("cannot summarize an empty record list")
    out = []
    for part in sorted(groups, key=Partition.sort_key):
        recs = groups[part]
        pairs = sorted({(r.classical, round(r.reported_quantum, QUANTUM_ROUND)) for r in recs})
        best, witness = 0.0, None
        for r in recs:
            if r.separation > SEPARATION_EPS and r.separation > best + 1e-12:
                best, witness = r.separation, r.mask
        out.append(PartitionSummary(part, len(recs), tuple(pairs), best, witness))
    return out


@dataclass(frozen=True)
class AdvantageRow:
    partition: Partition
    witness: GameTable
    anf: str
    classical: Fraction
    strategy: JointStrategy
    family: float
    angles: AngleSet
    separation: float


def advantage_table(summaries: Iterable[PartitionSummary]) -> list[AdvantageRow]:
    """Partitions whose best game beats every classical strategy, with a witness each."""
    rows = []
    for s in summaries:
        if s.max_separation <= SEPARATION_EPS or s.witness_mask is None:
            continue
        g = s.witness_mask
        cl = classical_max(g)
        sol = analytic_family_max(coefficient_profile(g))
        rows.append(
            AdvantageRow(
                partition=s.partition,
                witness=g,
                anf=format_anf(to_anf(g)),
                classical=cl.max_probability,
                strategy=cl.maximizers[0],
                family=sol.value,
                angles=sol.angles,
                separation=s.max_separation,
            )
        )
    return rows


# --- composed 2-variable function census ----------------------------------
#
# A 2-variable boolean function is a 4-bit truth table, bit (2u + v) = g(u, v).


def _zeros(table: int) -> int:
    return 4 - bin(table).count("1")


def verify_nga19_counts() -> dict:
    """Count composed pairs (g1(x, y), g2(a, b)) of non-constant functions.

    Reports the number of pairs per (#zeros of g1, #zeros of g2) class for
    classes with exactly one 0 or exactly one 1, and for every binary
    operation ``*`` the number of distinct ``g1 * g2`` over the one-zero class.
    """
    nonconstant = [t for t in range(16) if t not in (0b0000, 0b1111)]
    classes: dict[str, int] = {}
    for w1, w2 in itertools.product((1, 3), repeat=2):
        n = sum(1 for g1, g2 in itertools.product(nonconstant, repeat=2) if _zeros(g1) == w1 and _zeros(g2) == w2)
        classes[f"{w1},{w2}"] = n

    one_zero = [t for t in nonconstant if _zeros(t) == 1]
    distinct: dict[str, int] = {}
    for op in range(16):
        composed = set()
        for g1, g2 in itertools.product(one_zero, repeat=2):
            table = 0
            for x, y, a, b in itertools.product((0, 1), repeat=4):
                u = g1 >> (2 * x + y) & 1
                v = g2 >> (2 * a + b) & 1
                if op >> (2 * u + v) & 1:
                    table |= 1 << (8 * x + 4 * y + 2 * a + b)
            composed.add(table)
        distinct[f"{op:04b}"] = len(composed)

    ok = (
        all(v == 16 for v in classes.values())
        and len(nonconstant) == 14
        and all(v <= 16 for v in distinct.values())
    )
    return {
        "total_nonconstant": len(nonconstant),
        "total_pairs": len(nonconstant) ** 2,
        "pair_counts": classes,
        "distinct_compositions_by_operation": distinct,
        "ok": ok,
    }
