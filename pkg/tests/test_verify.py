"""Identity suite: registry, grid runner, tolerances, and report rendering."""

from __future__ import annotations

import csv
import io
import json

import pytest

import betalab as bl
from betalab import verify
from betalab.errors import DomainError, UnknownIdentityError

EXPECTED_IDS = {
    "SYM", "RECUR", "BU1", "POCH",
    "EQ1", "EQ2", "EQ3", "EQ4", "EQ4H", "EQ4B",
    "EQ5", "EQ6", "EQ7", "EQ7H", "LOG2", "EQ8", "EQ9", "EQ10", "EQ11",
    "DUP", "GHALF", "BHALF", "ZHALF", "PSIM",
}


@pytest.fixture(scope="module")
def full_report():
    return bl.run_suite()


# --- registry -------------------------------------------------------------


def test_registry_has_all_identities():
    registry = bl.builtin_registry()
    assert len(registry) == 24
    assert {spec.id for spec in registry} == EXPECTED_IDS


def test_registry_specs_are_well_formed():
    for spec in bl.builtin_registry():
        assert spec.description
        assert spec.anchor
        assert spec.grid, spec.id
        assert spec.tolerance > 0.0
        assert spec.tolerance_mode in ("absolute", "relative", "tail_aware")


def test_registry_is_cached():
    assert bl.builtin_registry() is bl.builtin_registry()


# --- suite results --------------------------------------------------------


def test_full_suite_all_pass(full_report):
    assert full_report.counts == {
        "total": 199,
        "passed": 199,
        "failed": 0,
        "skipped": 0,
    }


def test_records_sorted_by_identity_id(full_report):
    ids = [record.identity_id for record in full_report.records]
    assert ids == sorted(ids)


def test_grid_order_preserved_within_identity(full_report):
    eq4h = [r for r in full_report.records if r.identity_id == "EQ4H"]
    assert [r.params[0] for r in eq4h] == [float(n) for n in range(1, 11)]


def test_informational_reports_literal_convention(full_report):
    ids = [obs["identity_id"] for obs in full_report.informational]
    assert ids == ["EQ10", "EQ11"]
    for obs in full_report.informational:
        assert obs["convention"] == "literal"
        # The literal reading misses the reference by roughly 4 log 2 (EQ10)
        # or (4 log 2)/3 (EQ11); far outside any identity tolerance.
        assert obs["abs_difference"] > 0.9


def test_only_filter_limits_selection():
    report = bl.run_suite(only=["EQ4", "EQ7"])
    assert {r.identity_id for r in report.records} == {"EQ4", "EQ7"}
    assert report.informational == ()


def test_only_filter_deduplicates():
    once = bl.run_suite(only=["SYM"])
    twice = bl.run_suite(only=["SYM", "SYM"])
    assert len(once.records) == len(twice.records)


def test_unknown_identity_raises_before_evaluation():
    with pytest.raises(UnknownIdentityError) as exc_info:
        bl.run_suite(only=["EQ4", "NOPE"])
    message = str(exc_info.value)
    assert "NOPE" in message
    assert "EQ4" in message  # the known ids are listed to help the caller


# --- skip visibility ------------------------------------------------------


def test_domain_error_becomes_skipped_record():
    spec = next(s for s in bl.builtin_registry() if s.id == "EQ5")
    records = bl.run_identity(spec, grid=[(0.01, 0.5)])
    assert len(records) == 1
    record = records[0]
    assert record.skipped is True
    assert record.passed is None
    assert "DomainError" in record.reason
    assert record.lhs_value is None


def test_skipped_records_do_not_fail_the_suite():
    spec = next(s for s in bl.builtin_registry() if s.id == "EQ5")
    records = bl.run_identity(spec, grid=[(0.01, 0.5), (2.0, 1.0)])
    assert [r.skipped for r in records] == [True, False]
    assert records[1].passed is True


def test_grid_override_through_run_suite():
    report = bl.run_suite(
        only=["BU1"], overrides={"BU1": {"grid": [(2.0,), (4.0,)]}}
    )
    assert len(report.records) == 2
    assert all(r.passed for r in report.records)


def test_tolerance_override_can_force_failure():
    report = bl.run_suite(only=["POCH"], overrides={"POCH": {"tolerance": 1e-300}})
    assert report.counts["failed"] > 0


def test_tolerance_override_validation():
    spec = bl.builtin_registry()[0]
    with pytest.raises(DomainError):
        bl.run_identity(spec, tolerance=0.0)
    with pytest.raises(DomainError):
        bl.run_identity(spec, tolerance=-1e-9)


# --- tolerance semantics --------------------------------------------------


def test_tail_aware_effective_tolerance(full_report):
    series_backed = [r for r in full_report.records if r.identity_id == "EQ7"]
    assert series_backed
    for record in series_backed:
        tail = record.diagnostics.get("tail_estimate")
        assert tail is not None
        assert record.effective_tol == pytest.approx(1e-4 + tail, rel=1e-12)


def test_relative_mode_scales_with_magnitude(full_report):
    poch = [r for r in full_report.records if r.identity_id == "POCH"]
    big = max(poch, key=lambda r: abs(r.lhs_value))
    assert big.effective_tol == pytest.approx(
        1e-11 * max(abs(big.lhs_value), abs(big.rhs_value)), rel=1e-12
    )


def test_removing_tail_correction_widens_error():
    corrected = bl.digamma_series(0.5, bl.SeriesControl(max_terms=100_000))
    raw = bl.digamma_series(
        0.5, bl.SeriesControl(max_terms=100_000, tail_correction=False)
    )
    reference = bl.digamma(0.5)
    assert abs(raw.value - reference) > abs(corrected.value - reference)


# --- rendering ------------------------------------------------------------


def test_json_renders_deterministically(full_report):
    data1 = bl.render_report(full_report, "json")
    data2 = bl.render_report(bl.run_suite(), "json")
    assert data1 == data2


def test_json_schema_field_order(full_report):
    data = bl.render_report(full_report, "json")
    payload = json.loads(data)
    assert list(payload) == ["tool_version", "counts", "records", "informational"]
    pairs = json.loads(data, object_pairs_hook=lambda p: p)
    records = dict(pairs)["records"]
    expected_keys = [
        "identity_id", "params", "lhs", "rhs", "abs_err", "rel_err",
        "effective_tol", "pass", "skipped", "reason", "diagnostics",
    ]
    for record_pairs in records:
        assert [key for key, _ in record_pairs] == expected_keys


def test_json_floats_round_trip(full_report):
    payload = json.loads(bl.render_report(full_report, "json"))
    by_position = payload["records"]
    assert len(by_position) == len(full_report.records)
    for loaded, record in zip(by_position, full_report.records):
        assert loaded["identity_id"] == record.identity_id
        assert loaded["lhs"] == record.lhs_value
        assert loaded["rhs"] == record.rhs_value
        assert loaded["pass"] == record.passed


def test_csv_structure(full_report):
    data = bl.render_report(full_report, "csv").decode("utf-8")
    rows = list(csv.reader(io.StringIO(data)))
    assert rows[0] == [
        "identity_id", "params", "lhs", "rhs", "abs_err", "rel_err",
        "effective_tol", "pass", "skipped", "reason",
        "terms_used", "tail_estimate", "levels_used", "table_depth",
    ]
    assert len(rows) == 1 + len(full_report.records)
    sym_row = next(row for row in rows if row[0] == "SYM")
    assert ";" in sym_row[1]  # multi-parameter grids join with semicolons


def test_table_has_counts_footer(full_report):
    text = bl.render_report(full_report, "table").decode("utf-8")
    assert "total 199  passed 199  failed 0  skipped 0" in text
    assert "literal" in text  # informational lines included


def test_formats_agree_on_counts(full_report):
    payload = json.loads(bl.render_report(full_report, "json"))
    csv_rows = list(
        csv.reader(io.StringIO(bl.render_report(full_report, "csv").decode()))
    )
    assert payload["counts"]["total"] == len(csv_rows) - 1
    assert payload["counts"] == full_report.counts


def test_render_rejects_unknown_format(full_report):
    with pytest.raises(DomainError):
        bl.render_report(full_report, "yaml")


def test_skipped_record_renders_with_null_pass():
    spec = next(s for s in bl.builtin_registry() if s.id == "EQ5")
    records = bl.run_identity(spec, grid=[(0.01, 0.5)])
    report = verify.SuiteReport(
        records=tuple(records),
        counts={"total": 1, "passed": 0, "failed": 0, "skipped": 1},
        tool_version=bl.TOOL_VERSION,
        informational=(),
    )
    payload = json.loads(bl.render_report(report, "json"))
    record = payload["records"][0]
    assert record["pass"] is None
    assert record["skipped"] is True
    assert "DomainError" in record["reason"]
    csv_text = bl.render_report(report, "csv").decode()
    assert csv_text.count("true") >= 1  # the skipped flag
