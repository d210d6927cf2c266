import dataclasses

import pytest
from hypothesis import given, strategies as st

from glrs.calculus import (FORMS, _chi_value, compare_tables, exterior_d, mirror, right_multiply, tau_commutator,
                           verify_calculus)
from glrs.errors import DomainError
from glrs.ncpoly import NCPoly
from glrs.presets import reference_calculus
from glrs.scalar import Scalar

r, s = Scalar.param("r"), Scalar.param("s")
lam = r - r ** -1
X = NCPoly.letter


def _form(F, p):
    from glrs.calculus import normalize_form
    return normalize_form(p, F.data.algebra)


def m(p):
    # printed values are the r -> r^-1 image of ours
    return mirror(p)


def test_sigma_examples(calc):
    F = calc
    assert m(F.sigma[("wp", "f")]) == (X("f") * X("wp")).scale(s)
    assert m(F.sigma[("w0", "a")]) == X("a") * X("w0")


def test_sigma_omega2_b_derived(calc):
    # derived value; the printed rule carries an extra r^-1 on the a w- term
    want = (X("b") * X("w2")).scale(r ** -2) - (X("a") * X("wm")).scale(lam) + (X("b") * X("w1")).scale(lam ** 2)
    assert _form(calc, m(calc.sigma[("w2", "b")]) - want) == NCPoly()


def test_chi_examples(calc):
    assert m(calc.chi[("chi1", "a")]) == r ** -2 - 1
    assert _form(calc, m(calc.conv[("chip", "a")]) + X("b").scale(lam)) == NCPoly()
    for (k, l) in FORMS.values():
        assert _chi_value(calc.data, k, l, ()) == Scalar.const(0)


def test_chi_sparse_as_printed(calc, dual):
    ref = reference_calculus(dual)["chi"]
    nonzero = {k for k, v in ref.items() if v}
    assert {k for k, v in calc.chi.items() if v and k[1] != "f^-1"} == nonzero


def test_d_examples(calc):
    F = calc
    assert _form(F, m(F.d["f"]) - (X("f") * X("w0")).scale(r ** -2 - 1)) == NCPoly()
    want = (X("a") * X("w1")).scale(r ** -2 - 1) - (X("b") * X("wp")).scale(lam)
    assert _form(F, m(F.d["a"]) - want) == NCPoly()
    assert exterior_d(F, NCPoly.const(1)) == NCPoly()


def test_d_kills_relations(calc, ars):
    F = calc
    for rel in ars.relations:
        assert exterior_d(F, rel) == NCPoly(), rel
    ab = X("a") * X("b") - (X("b") * X("a")).scale(r ** -1)
    assert exterior_d(F, ab) == NCPoly()
    assert exterior_d(F, NCPoly.const(1) * X("d")) == exterior_d(F, X("d"))


@given(st.sampled_from("abcdf"))
def test_tau_generates_d(calc, x):
    assert _form(calc, tau_commutator(calc, x) - calc.d[x]) == NCPoly()


@given(st.lists(st.sampled_from("abcdf"), min_size=1, max_size=3), st.sampled_from("abcdf"))
def test_leibniz_on_words(calc, w, y):
    F = calc
    p = NCPoly.word(w)
    lhs = exterior_d(F, p * X(y))
    rhs = right_multiply(F, exterior_d(F, p), y) + p * F.d[y]
    assert _form(F, lhs - rhs) == NCPoly()


def test_verify_calculus(calc, ars):
    rep = verify_calculus(calc, ars.relations)
    assert rep.ok, rep.failures()
    assert rep.checked["leibniz"] == 25
    assert calc.dropped == []


def test_corrupted_sigma_is_detected(calc, ars):
    sigma = dict(calc.sigma)
    sigma[("w1", "a")] = sigma[("w1", "a")].scale(r)
    bad = dataclasses.replace(calc, sigma=sigma)
    rep = verify_calculus(bad, ars.relations, realization=())
    assert not rep.ok
    assert rep.relations or rep.leibniz or rep.tau


def test_table_comparison(calc, dual):
    ref = reference_calculus(dual)
    cmp = compare_tables(calc, ref)
    assert cmp.compared == 80
    assert sorted(cmp.mismatches) == [("sigma", "w2", "b"), ("sigma", "w2", "d")]


def test_unknown_letter(calc):
    with pytest.raises(DomainError):
        exterior_d(calc, X("z"))
