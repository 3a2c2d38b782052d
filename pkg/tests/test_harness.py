import json

import pytest

from tdec.errors import SizeCapExceeded, UnknownSuite
from tdec.harness import (
    FAIL,
    PASS,
    SKIPPED,
    SUITES,
    RunConfig,
    TheoremCheckRecord,
    check_relation,
    parse_csv_records,
    render,
    run_suite,
    summarize,
)


def test_check_relation_chain():
    assert check_relation("lo <= value <= hi", {"lo": 1, "value": 2, "hi": 2})
    assert not check_relation("lo <= value <= hi", {"lo": 3, "value": 2, "hi": 4})
    assert check_relation("max_gap > 10", {"max_gap": 11})
    assert not check_relation("a == b", {"a": None, "b": None})


def test_check_relation_malformed():
    with pytest.raises(ValueError):
        check_relation("a <=", {"a": 1})


def test_record_recheck_and_pass_field():
    r = TheoremCheckRecord("t", "x", "a < b", {"a": 1, "b": 2}, PASS)
    assert r.passed and r.recheck()
    assert r.to_dict()["pass"] is True
    assert "runtime" not in r.to_dict(include_time=False)
    s = TheoremCheckRecord("t", "x", "a < b", {}, SKIPPED)
    assert s.passed is None and s.recheck() is None


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite")


def test_vertex_cap():
    with pytest.raises(SizeCapExceeded):
        RunConfig(max_vertices=7)


def test_threads_from_env(monkeypatch):
    monkeypatch.setenv("TDEC_THREADS", "3")
    assert RunConfig.from_env().threads == 3


@pytest.mark.parametrize("suite_id", ["star", "wheel", "gap-growth", "complete-bounds"])
def test_small_suites_pass_and_recheck(suite_id):
    records = run_suite(suite_id, RunConfig(max_n=6 if suite_id != "gap-growth" else None))
    assert records
    for r in records:
        assert r.status == PASS
        assert r.recheck() is True


def test_formula_suite_records_recheck_against_their_status():
    for r in run_suite("path-formula", RunConfig(max_n=12)):
        assert r.recheck() == (r.status == PASS)
    failing = [r.instance for r in run_suite("path-formula", RunConfig(max_n=12)) if r.status == FAIL]
    assert failing == ["P_10", "P_11", "P_12"]


def test_edge_removal_skips_bridges():
    records = run_suite("edge-removal", RunConfig(max_vertices=3))
    notes = {r.note for r in records if r.status == SKIPPED}
    assert "bridge" in notes
    assert summarize(records)[FAIL] == 0


def test_capped_instances_are_skipped():
    records = run_suite("subdiv-star-13", RunConfig(max_edges=5))
    assert {r.status for r in records} == {SKIPPED}


def test_csv_and_json_agree():
    records = run_suite("wheel", RunConfig(max_n=6))
    cfg_csv = RunConfig(fmt="csv", include_meta=False)
    cfg_json = RunConfig(fmt="json", include_meta=False)
    from_csv = parse_csv_records(render("wheel", records, cfg_csv))
    from_json = json.loads(render("wheel", records, cfg_json))["records"]
    assert from_csv == from_json


def test_no_meta_is_deterministic():
    cfg = RunConfig(max_n=6, include_meta=False)
    a = render("friendship", run_suite("friendship", cfg), cfg, 1.0)
    b = render("friendship", run_suite("friendship", cfg), cfg, 2.0)
    assert a == b
    assert "runtime" not in a and "meta" not in a


def test_table_format_summary_line():
    records = run_suite("star", RunConfig(max_n=4))
    text = render("star", records, RunConfig(fmt="table"))
    assert text.strip().splitlines()[-1].startswith("star: 3 records, 3 pass")


def test_parallel_matches_serial():
    serial = run_suite("wheel", RunConfig(max_n=7, include_meta=False))
    parallel = run_suite("wheel", RunConfig(max_n=7, threads=2, include_meta=False))
    assert [r.to_dict(False) for r in serial] == [r.to_dict(False) for r in parallel]


def test_all_suites_registered():
    assert len(SUITES) == 20
