import pytest

from rootchi.alexoracle import (AlexClass, OracleError, alex_matrix_poly,
                                normalize_symmetric)
from rootchi.laurent import one, parse_poly, var
from rootchi.linkdiag import parse_link

t = var("t")


def test_matrix_poly_examples():
    tref = parse_link("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")
    assert alex_matrix_poly(tref).poly == 1 - t + t ** 2
    assert alex_matrix_poly(parse_link("U")).poly == one()
    assert alex_matrix_poly(parse_link("U U")).is_zero()
    assert alex_matrix_poly(parse_link("BR[3; 1 1 1]")).is_zero()  # split


def test_one_crossing_unknot_degenerates_to_one():
    kink = parse_link("BR[2; 1]")
    cls = alex_matrix_poly(kink)
    assert cls.poly == one()
    assert normalize_symmetric(cls).poly == one()


def test_normalize_symmetric_examples():
    knot = AlexClass.of(1 - t + t ** 2, ell=1)
    assert normalize_symmetric(knot).poly == t - 1 + t ** -1
    hopf = AlexClass.of(1 - t, ell=2)
    sym = normalize_symmetric(hopf)
    assert sym.matches(parse_poly("t^(1/2) - t^(-1/2)"))
    assert not sym.sign_fixed
    assert normalize_symmetric(AlexClass.of(one(), ell=1)).poly == one()


def test_normalize_symmetric_rejects_asymmetric():
    with pytest.raises(OracleError):
        normalize_symmetric(AlexClass.of(1 + t + t ** 2 + 2 * t ** 3, ell=1))


def test_class_representative_normalization():
    cls = AlexClass.of(-t ** 3 + t ** 5, ell=2)
    lo, hi = cls.poly.exponent_range("t")
    assert lo == 0 and cls.poly.terms[0][1] > 0


def test_oracle_agrees_with_skein(corpus):
    for name, (entry, d, p, delta) in corpus.items():
        sym = normalize_symmetric(alex_matrix_poly(d))
        assert sym.matches(delta), name
        if d.components == 1:
            assert sym.poly == delta, name
