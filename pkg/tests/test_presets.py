import pytest

from glrs.errors import DomainError
from glrs.ncpoly import NCPoly, confluence_check
from glrs.presets import PRESETS, jordanian_checks, load_preset, spec_for
from glrs.scalar import Scalar

X = NCPoly.letter
m = Scalar.param("m")


def test_ars_counts(ars):
    assert len(ars.relations) == 10
    assert len(ars.presentation.generators) == 5
    assert "f^-1" in ars.presentation.letters


def test_amk_has_fc_rule(amk):
    assert (("f", "c"), X("c") * X("f")) in amk.presentation.rules


def test_unknown_preset():
    with pytest.raises(DomainError):
        load_preset("xyz")
    with pytest.raises(DomainError):
        spec_for("xyz")


def test_presets_are_singletons():
    assert load_preset("ars") is load_preset("ars")
    spec = spec_for("ars")
    spec["relations"].clear()
    assert spec_for("ars")["relations"]


def test_jordanian(amk):
    rep = jordanian_checks(amk)
    assert rep.ok, rep.failures()


def test_jordanian_examples(amk):
    A = amk.presentation
    act = amk.action
    p = lambda t: amk.poly(t)
    assert A.is_zero(p("a*d - b*c + m*a*c") - p("a*d - c*b - m*c*d"))
    assert A.is_zero(act.apply(p("c*a - a*c + m*c^2")))
    delta = amk.definitions["delta"]
    assert A.equal(act.apply(delta), delta)
    assert confluence_check(A, 4) == []


def test_jordanian_rejects_other_presets(ars):
    with pytest.raises(DomainError):
        jordanian_checks(ars)


def test_notes():
    assert load_preset("ars").note_ids() == []
    assert load_preset("amk").note_ids() == []
    assert load_preset("ars-dual").note_ids() == ["xm-coproduct", "xm-pairing", "l-displays", "gamma-sign",
                                                  "x-normalization", "omega2-stray-factor"]


def test_printed_xm_coproduct_is_kept(dual):
    co = dual.spec["coalgebra"]["coproduct"]["Xm"]
    printed = dual.spec["reference"]["xm_coproduct_printed"]
    assert printed.endswith("@Xp") and co.endswith("@Xm")


@pytest.mark.parametrize("name", PRESETS)
def test_every_preset_builds(name):
    p = load_preset(name)
    assert p.name == name
    assert p.presentation.letters
