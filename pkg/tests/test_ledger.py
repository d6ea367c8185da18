"""Ledger mechanics: replay, truncation semantics, determinism,
reporting, and the bundled manifest."""

import json

import pytest

from planesieve import ledger
from planesieve.cases import REGISTRY
from planesieve.ledger import CaseCheck, Verdict


EXPECTED_IDS = [
    "FRAME-5SQRT", "ALT-BOUND", "ALT-RATIO", "ALT-A7", "PSL-C2C5",
    "PSL-DIVIS", "PSL-P2-EXC", "PSL-73", "PSL2-PARAB", "PSL2-Q13",
    "PSL2-PGL", "PSL2-SUBFIELD", "PSL3-Q13", "PSL3-TYPE67", "U-PARAB-MOD",
    "U-N5-B1", "U-N6-B2", "SP-PARAB", "SP-N6", "OO-CONTRA", "E6-SANDWICH",
    "E6-MINUS", "3D4-TRICHOT", "G2-CASES", "F4-CENT", "E-CHAR2-PARAB",
    "LJUNGGREN-SCAN", "SPORADIC",
]


def test_registry_ids_and_order():
    assert [c.id for c in REGISTRY] == EXPECTED_IDS
    assert len(REGISTRY) >= 26


def test_registry_metadata_complete():
    for case in REGISTRY:
        assert case.section and case.anchor and case.parameters
        if case.bound_kind is None:
            assert case.default_bound is None
        else:
            assert case.bound_kind in ("u", "n", "q", "a")
            assert case.default_bound >= 1


def test_replay_is_deterministic():
    first = ledger.replay("ALT-A7")
    second = ledger.replay("ALT-A7")
    assert first.verdict == second.verdict
    assert first.witnesses == second.witnesses


def test_truncated_bound_is_inconclusive():
    res = ledger.replay("ALT-BOUND", bound=20)
    assert res.verdict is Verdict.INCONCLUSIVE
    assert res.bound == 20


def test_bound_equal_to_default_is_full():
    res = ledger.replay("ALT-BOUND", bound=200)
    assert res.verdict is Verdict.ELIMINATED
    assert res.bound is None


def test_bound_only_tightens():
    res = ledger.replay("ALT-BOUND", bound=10**9)
    assert res.verdict is Verdict.ELIMINATED
    assert res.bound is None


def test_bound_rejected_for_fixed_domain():
    with pytest.raises(ValueError):
        ledger.replay("SPORADIC", bound=5)


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        ledger.replay("ALT-BOUND", bound=0)


def test_unknown_case_id():
    with pytest.raises(KeyError):
        ledger.replay("NO-SUCH-CASE")


def _toy_registry(calls):
    def check_scan(bound):
        calls.append(bound)
        return bound >= 5, [("scanned", bound)]

    def check_bad(_bound):
        return False, [("broken", 1), ("broken", 2)]

    return (
        CaseCheck(id="TOY-SCAN", section="toy/scan", anchor="toy scan claim",
                  parameters="n <= 10", check=check_scan,
                  default_bound=10, bound_kind="n"),
        CaseCheck(id="TOY-BAD", section="toy/bad", anchor="toy failing claim",
                  parameters="fixed", check=check_bad),
    )


def test_toy_registry_bound_plumbing():
    calls = []
    reg = _toy_registry(calls)
    res = ledger.replay("TOY-SCAN", bound=7, registry=reg)
    assert calls == [7]
    assert res.verdict is Verdict.INCONCLUSIVE and res.bound == 7

    res = ledger.replay("TOY-SCAN", registry=reg)
    assert calls == [7, 10]
    assert res.verdict is Verdict.ELIMINATED


def test_toy_registry_violation():
    reg = _toy_registry([])
    res = ledger.replay("TOY-BAD", registry=reg)
    assert res.verdict is Verdict.VIOLATED
    assert res.witnesses == (("broken", 1), ("broken", 2))
    assert not ledger.all_eliminated([res])


def test_failed_scan_beats_truncation():
    def check(bound):
        return False, [("bad", bound)]

    reg = (CaseCheck(id="TOY-X", section="s", anchor="a", parameters="p",
                     check=check, default_bound=10, bound_kind="u"),)
    res = ledger.replay("TOY-X", bound=3, registry=reg)
    assert res.verdict is Verdict.VIOLATED


def test_verify_all_order_and_verdicts():
    results = ledger.verify_all()
    assert [r.id for r in results] == EXPECTED_IDS
    assert ledger.all_eliminated(results)


def test_verify_all_parallel_matches_serial():
    serial = ledger.verify_all(jobs=1)
    parallel = ledger.verify_all(jobs=4)
    for a, b in zip(serial, parallel):
        assert (a.id, a.verdict, a.witnesses, a.bound) \
            == (b.id, b.verdict, b.witnesses, b.bound)


def test_verify_all_bound_routing():
    results = ledger.verify_all(u_max=10)
    by_id = {r.id: r for r in results}
    assert by_id["LJUNGGREN-SCAN"].verdict is Verdict.INCONCLUSIVE
    assert by_id["LJUNGGREN-SCAN"].bound == 10
    assert by_id["FRAME-5SQRT"].verdict is Verdict.INCONCLUSIVE
    assert by_id["ALT-BOUND"].verdict is Verdict.ELIMINATED  # n-kind untouched
    assert by_id["E6-SANDWICH"].verdict is Verdict.ELIMINATED  # q-kind untouched

    results = ledger.verify_all(q_max=100)
    by_id = {r.id: r for r in results}
    assert by_id["E6-SANDWICH"].verdict is Verdict.INCONCLUSIVE
    assert by_id["PSL2-SUBFIELD"].verdict is Verdict.INCONCLUSIVE
    assert by_id["LJUNGGREN-SCAN"].verdict is Verdict.ELIMINATED


def test_verify_all_rejects_bad_jobs():
    with pytest.raises(ValueError):
        ledger.verify_all(jobs=0)


def test_report_record_shape():
    res = ledger.replay("PSL2-Q13")
    record = ledger.report_record(res)
    json.dumps(record)
    assert record["id"] == "PSL2-Q13"
    assert record["verdict"] == "eliminated"
    assert record["section"] == "rank-one/dihedral-survivor"
    assert record["witness_count"] == len(res.witnesses)
    assert len(record["witnesses"]) <= 10
    assert "bound" not in record


def test_report_record_includes_bound_when_truncated():
    res = ledger.replay("ALT-BOUND", bound=30)
    record = ledger.report_record(res)
    assert record["bound"] == 30
    assert record["verdict"] == "inconclusive"


def test_manifest_agrees_with_registry():
    manifest = ledger.anchor_manifest()
    assert set(manifest) == set(EXPECTED_IDS)
    assert ledger.manifest_mismatches() == []


def test_manifest_mismatch_detection():
    reg = (CaseCheck(id="GHOST", section="s", anchor="a", parameters="p",
                     check=lambda b: (True, [])),)
    problems = ledger.manifest_mismatches(registry=reg)
    assert any("GHOST" in p for p in problems)
    assert any("in manifest but not registered" in p for p in problems)


def test_unitary_screen_witnesses():
    res = ledger.replay("U-PARAB-MOD")
    assert res.verdict is Verdict.ELIMINATED
    named = {w[0]: w[1:] for w in res.witnesses if isinstance(w[0], str)}
    assert named["passes"] == ([(1, 14), (1, 38)],)
    assert named["undecided"] == ([(7, 14)],)
    for _, pairs in (("passes", named["passes"]), ("undecided", named["undecided"])):
        for _, n in pairs[0]:
            assert n % 12 == 2
