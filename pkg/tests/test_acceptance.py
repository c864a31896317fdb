"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as the
criteria complete.  Everything is exact: zero tolerance in Q and in the
cyclotomic fields.
"""

import random
import time
from fractions import Fraction

from rootchi.cyclo import CycloNum, root
from rootchi.frcomplex import (build, chi_of_dims, cone, euler_char,
                               graded_homology_dims, homology, koszul_tensor,
                               shift, spectral_sequence, unknot_hfkn)
from rootchi.gradings import chi_bigraded, chi_trigraded, homfly_grading_dict
from rootchi.laurent import mono, one, substitute
from rootchi.linkdiag import SkeinSite
from rootchi.synth import (random_chain_map, random_complex,
                           random_graded_module, random_trigraded_table)
from rootchi.verify import (verify_oracle, verify_polynomial_identities,
                            verify_skein_triple, verify_square, verify_thm_hfk,
                            verify_thm_sln)

F = Fraction


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_unknot_ladder_chi():
    t0 = time.perf_counter()
    ok = euler_char(unknot_hfkn(1)) == 1
    for n in range(2, 9):
        ok = ok and euler_char(unknot_hfkn(n)) == 0
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    _report(1, ok, f"degree-ladder chi is 1 (n=1) and 0 (n=2..8) in {elapsed:.3f}s")


def test_criterion_02_sln_evaluations(corpus):
    t0 = time.perf_counter()
    bad = []
    for name, (entry, d, p, delta) in corpus.items():
        for n in range(1, 7):
            for c in verify_thm_sln(d, n, homfly=p, delta=delta):
                if not c.ok:
                    bad.append((name, n, c.name))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    _report(2, ok, f"{len(corpus)} links x n=1..6 in {elapsed:.1f}s"
                   + (f"; failures {bad[:3]}" if bad else ""))


def test_criterion_03_hfk_chain(corpus):
    bad = []
    for name, (entry, d, p, delta) in corpus.items():
        for n in range(2, 7):
            for c in verify_thm_hfk(d, n, homfly=p, delta=delta):
                if not c.ok:
                    bad.append((name, n, c.name))
    _report(3, not bad, f"shift consistency and Koszul factor over "
                        f"{len(corpus)} links x n=2..6"
                        + (f"; failures {bad[:3]}" if bad else ""))


def test_criterion_04_square_routes(corpus):
    bad = []
    spot = None
    for name, (entry, d, p, delta) in corpus.items():
        for n in range(2, 7):
            checks = verify_square(d, n, homfly=p, delta=delta)
            for c in checks:
                if not c.ok:
                    bad.append((name, n, c.name))
            if name == "trefoil" and n == 2:
                spot = checks[0].lhs
    ok = not bad and spot == "-3"
    _report(4, ok, f"three routes agree on {len(corpus)} links x n=2..6; "
                   f"trefoil n=2 spot value {spot}")


def test_criterion_05_skein_relation(corpus):
    sites = 0
    bad = []
    for name, (entry, d, p, delta) in corpus.items():
        for i in range(len(d.crossings)):
            sites += 1
            c = verify_skein_triple(SkeinSite(d, i))
            if not c.ok:
                bad.append((name, i))
    ok = sites >= 50 and not bad
    _report(5, ok, f"{sites} crossing sites checked exactly"
                   + (f"; failures {bad[:3]}" if bad else ""))


def test_criterion_06_specialization_suite(corpus):
    bad = []
    for name, (entry, d, p, delta) in corpus.items():
        for c in verify_polynomial_identities(d, homfly=p, delta=delta):
            if not c.ok:
                bad.append((name, c.name))
    _report(6, not bad, f"six specializations plus termwise parity on "
                        f"{len(corpus)} links"
                        + (f"; failures {bad[:3]}" if bad else ""))


def test_criterion_07_oracle_agreement(corpus):
    bad = [name for name, (entry, d, p, delta) in corpus.items()
           if not verify_oracle(d, delta=delta).ok]
    _report(7, not bad, f"relation-matrix polynomial matches the skein one on "
                        f"{len(corpus)} links" + (f"; failures {bad}" if bad else ""))


def test_criterion_08_complex_algebra_properties():
    rng = random.Random(2024)
    trials = 500
    bad = 0
    for _ in range(trials):
        n = rng.randint(1, 8)
        c = random_complex(rng, n, max_dim=40)
        ok = euler_char(c) == chi_of_dims(n, homology(c).dims)
        ok = ok and euler_char(shift(c, 1)) == root(n, -1) * euler_char(c)
        y = random_complex(rng, n, max_dim=10)
        f = random_chain_map(rng, c, y)
        ok = ok and euler_char(cone(f, c, y)) == euler_char(y) - euler_char(c)
        # acyclic two-term summand changes nothing
        deg = rng.randint(-4, 4)
        degrees = list(c.degrees) + [deg, deg + n]
        rows = [list(row) + [F(0), F(0)] for row in c.diff]
        rows.append([F(0)] * (c.dim + 2))
        rows.append([F(0)] * c.dim + [F(2), F(0)])
        padded = build(n, degrees, rows)
        ok = ok and euler_char(padded) == euler_char(c)
        ok = ok and homology(padded).dims == homology(c).dims
        bad += not ok
    _report(8, bad == 0, f"{trials} random complexes: chi(H) = chi, shift law, "
                         f"cone additivity, acyclic-summand invariance; "
                         f"{bad} failures")


def test_criterion_09_koszul_factor():
    rng = random.Random(7)
    trials = 200
    bad = 0
    for _ in range(trials):
        n = rng.randint(1, 8)
        k = rng.randint(0, 4)
        mod = random_graded_module(rng, n, k, max_dim=6)
        zero_rows = [[0] * mod.dim for _ in range(mod.dim)]
        chi_m = euler_char(build(n, mod.degrees, zero_rows))
        factor = (CycloNum.from_rational(1) - root(n, 2)) ** k
        bad += euler_char(koszul_tensor(mod)) != factor * chi_m
    _report(9, bad == 0, f"{trials} random modules, up to 4 commuting maps; "
                         f"{bad} failures")


def test_criterion_10_spectral_sequence_mechanics():
    rng = random.Random(99)
    trials = 100
    bad = 0
    stab_hist: dict[int, int] = {}
    for _ in range(trials):
        n = rng.randint(1, 6)
        c = random_complex(rng, n, max_dim=14, filtered=True)
        ss = spectral_sequence(c)
        chis = [ss.page_chi(r) for r in range(len(ss.pages))]
        ok = all(x == chis[0] for x in chis)
        ok = ok and ss.infinity == graded_homology_dims(c)
        stab_hist[ss.stabilization] = stab_hist.get(ss.stabilization, 0) + 1
        bad += not ok
    _report(10, bad == 0, f"{trials} random filtered complexes: page-constant "
                          f"chi and limit = associated graded; stabilization "
                          f"histogram {dict(sorted(stab_hist.items()))}; {bad} failures")


def test_criterion_11_product_identity_and_dictionary():
    ok = True
    s_neg = mono(1, t=F(-1, 2)) - mono(1, t=F(1, 2))
    for ell in range(1, 7):
        lhs = s_neg ** (ell - 1)
        rhs = (-1) ** (ell - 1) * mono(1, t=F(ell - 1, 2)) * \
            (one() - mono(1, t=-1)) ** (ell - 1)
        ok = ok and lhs == rhs
    rng = random.Random(31)
    trials = 100
    bad = 0
    for _ in range(trials):
        tab = random_trigraded_table(rng)
        tm, _ = homfly_grading_dict(tab, rng.randint(1, 6))
        lhs = chi_bigraded(tm, "gr_M", "gr_T", out_var="t")
        sub = substitute(chi_trigraded(tab), "a", -1 * one())
        sub = substitute(sub, "q", mono(-1, t=F(1, 2)))
        bad += lhs != sub
    ok = ok and bad == 0
    _report(11, ok, f"binomial product identity for 1..6 components; "
                    f"dictionary-vs-chi on {trials} random tables; {bad} failures")
