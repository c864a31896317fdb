import json
import random

from rootchi.corpus import CorpusEntry, bundled_corpus, parse_corpus
from rootchi.laurent import one, var
from rootchi.linkdiag import SkeinSite, parse_link
from rootchi.verify import (reports_to_json, run_link_checks, verify_oracle,
                            verify_polynomial_identities, verify_skein_triple,
                            verify_square, verify_thm_hfk, verify_thm_sln)

a = var("a")
TREFOIL_PD = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"


def test_skein_triple_examples():
    tref = parse_link(TREFOIL_PD)
    assert verify_skein_triple(SkeinSite(tref, 0)).ok
    hopf = parse_link("BR[2; 1 1]")
    assert verify_skein_triple(SkeinSite(hopf, 0)).ok


def test_skein_triple_negative_control():
    tref = parse_link(TREFOIL_PD)
    from rootchi.skein import homfly_unreduced
    corrupted = homfly_unreduced(tref) + a ** 2
    res = verify_skein_triple(SkeinSite(tref, 0), p_plus=corrupted)
    assert not res.ok
    assert res.lhs != res.rhs  # the residual is embedded in the report


def test_polynomial_identities_unknot_and_trefoil():
    for src in ("U", TREFOIL_PD, "U U"):
        checks = verify_polynomial_identities(parse_link(src))
        assert len(checks) == 9
        assert all(c.ok for c in checks), (src, [c.name for c in checks if not c.ok])


def test_polynomial_identities_negative_control():
    tref = parse_link(TREFOIL_PD)
    checks = verify_polynomial_identities(tref, delta=one())
    assert any(not c.ok for c in checks)


def test_thm_sln_values():
    tref = parse_link(TREFOIL_PD)
    checks = verify_thm_sln(tref, 2)
    assert all(c.ok for c in checks)
    assert checks[0].lhs == "-3" and checks[0].rhs == "-3"
    hopf = parse_link("BR[2; 1 1]")
    checks = verify_thm_sln(hopf, 2)
    assert all(c.ok for c in checks)
    from rootchi.cyclo import root
    from rootchi.laurent import parse_poly
    from rootchi.cyclo import eval_at_root
    # both sides are -2i
    assert eval_at_root(parse_poly("q^-1 + q^-5"), 2, 1) == -2 * root(2, 1)
    for n in (1, 5):
        assert all(c.ok for c in verify_thm_sln(parse_link("U"), n))


def test_thm_hfk_values():
    hopf = parse_link("BR[2; 1 1]")
    checks = verify_thm_hfk(hopf, 2)
    assert all(c.ok for c in checks)
    unknot = parse_link("U")
    checks = verify_thm_hfk(unknot, 3)
    assert all(c.ok for c in checks)
    for src in (TREFOIL_PD, "BR[3; 1 -2 1 -2 1]"):
        d = parse_link(src)
        for n in (1, 2, 4):
            assert all(c.ok for c in verify_thm_hfk(d, n)), (src, n)


def test_square_routes_agree():
    tref = parse_link(TREFOIL_PD)
    checks = verify_square(tref, 2)
    assert all(c.ok for c in checks)
    assert checks[0].lhs == "-3"
    unknot = parse_link("U")
    for n in (2, 3, 5):
        checks = verify_square(unknot, n)
        assert all(c.ok for c in checks)
        assert checks[0].lhs == "1"
    for n in (3, 4):
        assert all(c.ok for c in verify_square(tref, n))


def test_oracle_check():
    assert verify_oracle(parse_link(TREFOIL_PD)).ok
    assert verify_oracle(parse_link("BR[3; 1 -2 1 -2 1]")).ok
    assert not verify_oracle(parse_link(TREFOIL_PD), delta=one() + one()).ok


def test_mutation_negative_controls():
    rng = random.Random(42)
    entries = [e for e in bundled_corpus() if e.diagram().crossings]
    picks = [entries[rng.randrange(len(entries))] for _ in range(20)]
    for entry in picks:
        d = entry.diagram()
        from rootchi.skein import homfly_unreduced
        p = homfly_unreduced(d)
        exps, c = p.terms[rng.randrange(len(p.terms))]
        corrupted = p + type(p).make(p.vars, {exps: 1})
        checks = verify_polynomial_identities(d, homfly=corrupted)
        checks += verify_thm_sln(d, 2, homfly=corrupted)
        assert any(not ch.ok for ch in checks), entry.name


def test_run_link_checks_report_shape():
    entry = CorpusEntry("tref", TREFOIL_PD, {"alexander": "t - 1 + t^-1"})
    reports = run_link_checks("tref", entry.diagram(), [1, 2], expected=entry.expected)
    assert [r.n for r in reports] == [0, 1, 2]
    assert all(r.ok for r in reports)
    data = json.loads(reports_to_json(reports))
    assert data[0]["link"] == "tref" and data[0]["ell"] == 1
    names = {c["name"] for c in data[0]["checks"]}
    assert "expected_alexander" in names
    assert {"name", "status", "lhs", "rhs"} <= set(data[0]["checks"][0])
    assert "ms" in data[0]


def test_corpus_parsing_and_expectations():
    entries = parse_corpus("""
# comment
foo: BR[2; 1 1]
# expect foo alexander: t^(1/2) - t^(-1/2)
""")
    assert len(entries) == 1
    assert entries[0].expected == {"alexander": "t^(1/2) - t^(-1/2)"}
    reports = run_link_checks("foo", entries[0].diagram(), [],
                              expected=entries[0].expected)
    assert reports[0].ok
