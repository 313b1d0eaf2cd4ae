import csv
import io
import json
import math
from fractions import Fraction

import pytest

from nlgames.game import Partition, format_anf, from_anf, parse_anf, partition_of, to_anf
from nlgames.quantum import success_probability
from nlgames.report import (
    RECORD_COLUMNS,
    ReportError,
    emit,
    find_discrepancies,
    render,
    render_partition_tables,
    render_summary,
)
from nlgames.scan import SEPARATION_EPS, advantage_table, analyze_mask, scan, summarize, verify_nga19_counts

ADVANTAGE = {"3+3+3+1", "3+3+2+1", "2+2+2+2", "3+2+2+1", "2+2+2+1", "3+1+1+1", "2+1+1+1"}


def by_partition(summaries):
    return {str(s.partition): s for s in summaries}


def test_scan_counts(admissible_scan, full_scan):
    assert len(admissible_scan[0]) == 50625
    assert len(full_scan) == 65536
    assert [r.mask.mask for r in full_scan] == list(range(65536))


def test_chsh_record(admissible_scan):
    rec = next(r for r in admissible_scan[0] if r.mask.mask == 0x6999)
    assert rec == analyze_mask(0x6999)
    assert rec.partition.counts == (2, 2, 2, 2)
    assert rec.classical == Fraction(3, 4)
    assert rec.separation == pytest.approx(0.103553, abs=1e-6)


def test_record_invariants(full_scan):
    for r in full_scan:
        assert r.separation == max(0.0, r.family - float(r.classical))
        assert r.reported_quantum == max(r.family, float(r.classical))


def test_scan_determinism_across_workers():
    one = scan(admissible_only=True, workers=1, chunk_size=5000)
    two = scan(admissible_only=True, workers=2, chunk_size=3000)
    assert one == two


def test_scan_rejects_zero_workers():
    with pytest.raises(ValueError):
        scan(workers=0)


def test_summary_examples(admissible_summaries):
    s = by_partition(admissible_summaries)
    assert s["3+3+3+1"].max_separation == pytest.approx((math.sqrt(2) - 1) / 8, abs=1e-9)
    assert s["1+1+1+1"].max_separation == 0 and s["1+1+1+1"].witness_mask is None
    # 0x17AF-style games (Bob forced apart on y=1) add a (3/4, 3/4) pair
    assert s["4+3+2+1"].outcome_pairs == ((Fraction(3, 4), 0.75), (Fraction(1), 1.0))


def test_summary_invariants(admissible_summaries):
    assert sum(s.game_count for s in admissible_summaries) == 50625
    keys = [s.partition.sort_key() for s in admissible_summaries]
    assert keys == sorted(keys)
    for s in admissible_summaries:
        assert s.game_count > 0
        assert (s.witness_mask is not None) == (s.max_separation > SEPARATION_EPS)


def test_witness_attains_max(admissible_scan, admissible_summaries):
    best = {}
    for r in admissible_scan[0]:
        key = str(r.partition)
        best[key] = max(best.get(key, 0.0), r.separation)
    for s in admissible_summaries:
        assert s.max_separation == best[str(s.partition)]
        if s.witness_mask is not None:
            assert analyze_mask(s.witness_mask.mask).separation == s.max_separation


def test_summarize_rejects_empty():
    with pytest.raises(ValueError):
        summarize([])


def test_advantage_table(admissible_summaries):
    rows = advantage_table(admissible_summaries)
    assert {str(r.partition) for r in rows} == ADVANTAGE
    by = {str(r.partition): r for r in rows}
    assert by["2+2+2+2"].separation == pytest.approx(0.103553, abs=1e-6)
    assert by["2+1+1+1"].family == pytest.approx((5 + math.sqrt(6) + math.sqrt(1.5)) / 16, abs=1e-9)
    for r in rows:
        game = from_anf(parse_anf(r.anf))
        assert game == r.witness and partition_of(game) == r.partition
        assert success_probability(game, r.angles) == pytest.approx(r.family, abs=1e-9)


def test_verify_nga19():
    census = verify_nga19_counts()
    assert census["pair_counts"] == {"1,1": 16, "1,3": 16, "3,1": 16, "3,3": 16}
    assert census["total_nonconstant"] == 14 and census["total_pairs"] == 196
    assert census["ok"]
    assert all(n <= 16 for n in census["distinct_compositions_by_operation"].values())


def test_low_winner_games_stay_below_half(full_scan):
    low = [r for r in full_scan if r.partition.total <= 3]
    assert len(low) == 1 + 16 + 120 + 560
    assert all(r.family < 0.5 for r in low)


def test_high_winner_games_have_no_separation(full_scan):
    assert all(r.separation == 0 for r in full_scan if r.partition.total >= 11)


# --- report emission ------------------------------------------------------


def test_csv_records(admissible_scan):
    text = render(admissible_scan[0][:3], "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == RECORD_COLUMNS
    assert rows[1][0] == "0x1111" and rows[1][1] == "1+1+1+1"
    assert len(rows) == 4 and all(len(r) == 7 for r in rows)


def test_json_records_and_summaries(admissible_scan, admissible_summaries):
    recs = json.loads(render(admissible_scan[0][:2], "json"))
    assert set(recs[0]) == set(RECORD_COLUMNS)
    summ = json.loads(render(admissible_summaries, "json"))
    assert len(summ) == len(admissible_summaries)


def test_render_is_deterministic(admissible_summaries):
    for fmt in ("csv", "json", "markdown"):
        assert render(admissible_summaries, fmt) == render(admissible_summaries, fmt)


def test_markdown_headers(admissible_summaries):
    md = render_partition_tables(admissible_summaries)
    assert "| Partition | Games | Max. classical success prob. | Max. quantum success prob. | Corresponding separation |" in md
    assert "| 4+3+2+1 |" in md


def test_render_errors(admissible_summaries):
    with pytest.raises(ValueError):
        render([], "csv")
    with pytest.raises(ValueError):
        render(admissible_summaries, "xml")


def test_emit_writes_and_reports_path(tmp_path, admissible_summaries):
    out = tmp_path / "s.json"
    emit(admissible_summaries, "json", out)
    assert out.read_text() == render(admissible_summaries, "json")
    bad = tmp_path / "missing" / "s.json"
    with pytest.raises(ReportError, match="missing"):
        emit(admissible_summaries, "json", bad)


def test_summary_document(admissible_summaries):
    text = render_summary(admissible_summaries, advantage_table(admissible_summaries))
    for heading in ("# Nonlocal game census", "## Partition outcomes", "## Partitions with quantum advantage", "## Discrepancies"):
        assert heading in text


def test_discrepancies_are_extra_pairs_only(admissible_summaries):
    found = find_discrepancies(admissible_summaries)
    parts = {str(d.partition) for d in found}
    assert "4+4+2+1" in parts
    assert "4+1+1+1" in parts  # no reference rows at all


def test_partition_parse_and_order():
    assert Partition.parse("1+3+2+2") == Partition((3, 2, 2, 1))
    assert Partition((4, 1, 1, 1)).sort_key() < Partition((3, 2, 1, 1)).sort_key()
    assert format_anf(to_anf(0x6999)) == "xy+a+b"
