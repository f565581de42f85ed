import pytest

from conftest import make
from gzariski.checks import (CATALOG, FAIL, PASS, SAMPLE_SEED, SKIPPED, id_key,
                             run_check_suite, select)
from gzariski.corpus import builtin_corpus
from gzariski.report import emit_report, machine_line
from instances import vector_space

CORPUS = {d.name: d for d in builtin_corpus()}


def result(name, cid, semantics=None):
    rep = run_check_suite(CORPUS[name], [cid], semantics)
    (res,) = [r for r in rep.results if r.id == cid]
    return res


def test_catalog_order_is_numeric():
    keys = [id_key(c) for c in CATALOG]
    assert keys == sorted(keys)
    assert CATALOG[0] == "T3.1" and CATALOG[-1] == "T4.15"
    assert CATALOG.index("T3.16") < CATALOG.index("P3.16.1")


def test_selection_by_prefix():
    assert select(["T3.15"]) == tuple(f"T3.15.{i}" for i in range(1, 7))
    assert select(["T4.2.1", "T3.1"]) == ("T3.1", "T4.2.1")
    assert select(None) == CATALOG
    with pytest.raises(KeyError):
        select(["T9.9"])
    assert len(select(["T3"])) == sum(c.startswith("T3.") for c in CATALOG)


def test_closed_set_axioms_pass_everywhere():
    for name in CORPUS:
        assert result(name, "T3.1").status == PASS, name


def test_t0_equivalence_on_inst_d():
    r = result("INST-D", "T4.1")
    assert r.status == PASS


def test_t3_7_on_inst_c():
    assert result("INST-C", "T4.3").status == PASS


def test_ring_qp_t0_fails_under_radical_semantics():
    r = result("INST-B", "T3.15.6")
    assert r.status == FAIL
    assert r.witness == "((0),(2))"
    assert r.note == "semantics:radical;alt:containment=PASS"


def test_containment_semantics_moves_the_failures():
    rad = run_check_suite(CORPUS["INST-B"], None, "radical")
    con = run_check_suite(CORPUS["INST-B"], None, "containment")
    failed = lambda rep: sorted(r.id for r in rep.results if r.status == FAIL)
    assert failed(rad) == ["T3.15.6"]
    assert "T3.15.6" not in failed(con)
    assert {"T3.15.1", "T3.11"} <= set(failed(con))


def test_skips_name_their_hypothesis():
    rep = run_check_suite(CORPUS["INST-A"])
    skipped = {r.id: r.note for r in rep.results if r.status == SKIPPED}
    assert skipped["T4.14.1"] == "hypothesis:phi_injective"
    assert skipped["P3.4.3"].startswith("undefined-map")
    assert all(n.startswith(("hypothesis:", "undefined-map:")) for n in skipped.values())


def test_large_space_is_sampled():
    desc, _, _ = make(vector_space(2, 4))     # 66 proper subspaces, all points
    res = run_check_suite(desc, ["T4.2.1"]).results[0]
    assert res.status == PASS
    assert res.note == f"sample:seed={SAMPLE_SEED},size=2048"


def test_every_corpus_report_has_full_catalog():
    rep = run_check_suite(CORPUS["SIMPLE"])
    assert [r.id for r in rep.results] == list(CATALOG)
    assert all(r.status != FAIL for r in rep.results)


def test_machine_line_format():
    r = result("INST-B", "T3.15.6")
    assert machine_line(r) == ("check T3.15.6 INST-B FAIL witness=((0),(2)) "
                               "note=semantics:radical;alt:containment=PASS")
    p = result("INST-D", "T3.1")
    assert machine_line(p) == "check T3.1 INST-D PASS"


def test_text_report_summary():
    text = emit_report(run_check_suite(CORPUS["INST-D"]), "text")
    assert text.rstrip().endswith("0 FAIL, 3 SKIPPED")
    assert "== INST-D" in text
    assert text.startswith("# quotients are taken by Ann(M)")
