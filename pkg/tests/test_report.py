import json

from spinforge.report import FAIL, PASS, Entry, VerificationReport, emit_report, load_report


def test_empty_report_is_empty_array():
    assert emit_report(VerificationReport(), "json") == "[]"


def test_fail_entry_keeps_counterexample_verbatim():
    r = VerificationReport(seed=1)
    r.add(Entry("outer.antisymmetry", "spin4", FAIL, ("1,0,0,0,0,0", "-1/2,0,0,0,0,0"), "x", "y"))
    doc = emit_report(r)
    assert '"1,0,0,0,0,0"' in doc and '"-1/2,0,0,0,0,0"' in doc
    d = json.loads(doc)[0]
    assert list(d) == ["identity", "variant", "status", "counterexample", "lhs", "rhs"]
    assert not r.ok


def test_sorted_and_stable():
    a = VerificationReport([Entry("b", "spin4", PASS), Entry("a", "b1", PASS)])
    b = VerificationReport([Entry("a", "b1", PASS), Entry("b", "spin4", PASS)])
    assert emit_report(a) == emit_report(b)
    assert [e.identity for e in load_report(emit_report(a)).entries] == ["a", "b"]


def test_audit_entries_do_not_gate():
    r = VerificationReport([Entry("audit.x", "b1", FAIL, ()), Entry("y", "spin4", PASS)])
    assert r.ok
    assert r.failures() and not r.failures(gating_only=True)


def test_text_format():
    r = VerificationReport([Entry("audit.x", "b1", FAIL, ("1,2",), "1", "2"), Entry("y", "spin4", PASS)], seed=9)
    text = emit_report(r, "text")
    assert text.startswith("# seed=9 mode=exact")
    assert "at 1,2" in text
    assert "1/1 checks pass; 1 audit findings" in text


def test_roundtrip():
    e = Entry("z", "b2", FAIL, ("1",), "a", "b")
    assert Entry.from_dict(e.to_dict()) == e
