"""Tests for the differential verification engine."""

from __future__ import annotations

import csv
import io
import json

import pytest

from closed_forms import THEOREMS
from indices import IndexKind
from products import ProductKind
from verification import (
    REPORT_FIELDS,
    catalog,
    fuzz_pairs,
    run_verification,
    table_cells,
    table_to_csv,
    verify_pair,
)


def corrupted_theorems():
    evaluators = dict(THEOREMS)
    honest = evaluators[(ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.F)]
    evaluators[(ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.F)] = lambda p1, p2: honest(p1, p2) + p1.size
    return evaluators


class TestCatalog:
    def test_contents(self):
        names = [name for name, _ in catalog()]
        assert len(names) == 26
        assert names[0] == "path:1"
        assert names[8] == "cycle:3"
        assert names[-1] == "star:6"


class TestFuzzPairs:
    def test_deterministic(self):
        first = [(a[0], b[0]) for a, b in fuzz_pairs(7, 50)]
        second = [(a[0], b[0]) for a, b in fuzz_pairs(7, 50)]
        assert first == second

    def test_respects_max_order(self):
        for (_, g1), (_, g2) in fuzz_pairs(3, 200, max_order=10):
            assert 1 <= g1.order <= 10
            assert 1 <= g2.order <= 10

    def test_seed_changes_pairs(self):
        assert [a[0] for a, _ in fuzz_pairs(1, 10)] != [a[0] for a, _ in fuzz_pairs(2, 10)]

    def test_rejects_negative_count(self):
        with pytest.raises(ValueError):
            fuzz_pairs(0, -1)


class TestVerifyPair:
    def test_records_per_pair(self):
        factors = dict(catalog())
        records, failures = verify_pair(("path:3", factors["path:3"]), ("cycle:3", factors["cycle:3"]))
        assert failures == []
        assert len(records) == len(THEOREMS)
        assert all(record.match for record in records)
        f_record = next(r for r in records if r.product == "corona-join" and r.index == "F")
        assert f_record.direct == f_record.closed_form == 4456


class TestRunVerification:
    def test_acceptance_suite(self):
        report = run_verification(include_catalog=True, seed=0, fuzz=200, max_order=10)
        assert report.passed
        assert len(report.records) == (26 * 26 + 200) * len(THEOREMS)
        assert report.first_mismatch() is None

    def test_deterministic_reports(self):
        first = run_verification(include_catalog=False, seed=7, fuzz=500, workers=8)
        second = run_verification(include_catalog=False, seed=7, fuzz=500, workers=1)
        assert first.to_csv() == second.to_csv()
        assert first.to_json() == second.to_json()

    def test_corrupted_evaluator_is_reported(self):
        report = run_verification(include_catalog=True, fuzz=0, evaluators=corrupted_theorems())
        assert not report.passed
        first = report.first_mismatch()
        assert first.product == "sdvj"
        assert first.index == "F"
        assert (first.g1, first.g2) == ("path:2", "path:1")
        assert first.closed_form == first.direct + 1

    def test_csv_and_json_hold_identical_records(self):
        report = run_verification(include_catalog=False, seed=5, fuzz=10)
        rows = list(csv.DictReader(io.StringIO(report.to_csv())))
        objects = json.loads(report.to_json())
        assert len(rows) == len(objects) == len(report.records)
        for row, obj in zip(rows, objects):
            assert tuple(row) == REPORT_FIELDS == tuple(obj)
            assert row["direct"] == str(obj["direct"])
            assert row["closed_form"] == str(obj["closed_form"])
            assert row["match"] == ("true" if obj["match"] else "false")
            assert (row["product"], row["g1"], row["g2"], row["index"]) == (
                obj["product"], obj["g1"], obj["g2"], obj["index"],
            )


class TestTable:
    def test_grid_has_no_flags(self):
        cells = table_cells(IndexKind.F, ProductKind.CORONA_JOIN, range(3, 6), range(3, 6))
        assert len(cells) == 9
        assert not any(cell.flagged for cell in cells)

    def test_csv(self):
        cells = table_cells(IndexKind.F, ProductKind.SUBDIVISION_VERTEX_JOIN, [3], [3])
        text = table_to_csv(cells)
        assert text.splitlines()[0] == "l,m,example,direct,flag"
        assert text.splitlines()[1].startswith("3,3,")

    def test_rejects_outside_domain(self):
        with pytest.raises(ValueError):
            table_cells(IndexKind.RM2, ProductKind.CORONA_JOIN, [2], [3])
