import pytest
from hypothesis import given, strategies as st

from glrs.errors import DomainError, VerificationError
from glrs.hopf import (ActionTable, Tensors, antipode_antihom_failures, automorphism_failures, inverse_action,
                       pq_exponents, pq_realization, qdet_checks, smash_product, verify_antipode,
                       verify_bialgebra)
from glrs.ncpoly import NCPoly, Verdict, ideal_equivalence, to_leg
from glrs.presets import build_preset, spec_for
from glrs.scalar import Scalar

r, s = Scalar.param("r"), Scalar.param("s")
X = NCPoly.letter


def _variant(**changes):
    spec = spec_for("ars")
    for table, entries in changes.items():
        spec[table].update(entries)
    return build_preset(spec)


def test_bialgebra(ars):
    rep = verify_bialgebra(ars.presentation, ars.structure)
    assert rep.algebra_map and rep.coassociative and rep.counit


def test_corrupted_coproduct_is_not_an_algebra_map():
    p = _variant(coproduct={"a": "a@a"})
    rep = verify_bialgebra(p.presentation, p.structure)
    assert not rep.algebra_map
    T = Tensors(p.presentation, p.structure)
    assert T.delta(X("a") * X("b") - (X("b") * X("a")).scale(r ** -1))


def test_antipode(ars):
    ok, fails = verify_antipode(ars.presentation, ars.structure, ars.qdet, ars.localization, ars.tpattern)
    assert ok, fails
    assert ars.presentation.nf(ars.structure.s("f") * X("f")) == NCPoly.const(1)
    assert antipode_antihom_failures(ars.presentation, ars.structure, ars.localization) == []


def test_swapped_antipode_prefactors_fail():
    p = _variant(antipode={"b": "-e*r^-1*b", "c": "-e*r*c"})
    ok, fails = verify_antipode(p.presentation, p.structure, p.qdet, p.localization, p.tpattern)
    assert not ok
    assert "sum_k S(t1k) tk1 != delta_11" in fails


def test_antipode_needs_localization(ars):
    with pytest.raises(DomainError):
        verify_antipode(ars.presentation, ars.structure, ars.qdet, None)


def test_qdet(ars):
    rep = qdet_checks(ars.presentation, ars.structure, ars.qdet)
    assert rep.central and rep.group_like
    assert rep.witness  # D b != b D


words = st.lists(st.sampled_from("abcd"), min_size=1, max_size=3)


@given(words)
def test_delta_is_multiplicative(ars, w):
    T = Tensors(ars.presentation, ars.structure)
    p = NCPoly.word(w)
    q = NCPoly.const(1)
    for x in w:
        q = q * T.delta(X(x))
    assert T.power(2).equal(T.delta(p), q)


def test_smash_regenerates_eq5(ars):
    act = ars.action
    target = [rel for rel in ars.relations if "f" in rel.letters()]
    pres = smash_product(ars.action_base, "f", act, target=target)
    assert ideal_equivalence(ars.presentation, list(pres.relations), 4) is Verdict.TRUE
    inv = inverse_action(pres, "f")
    for x, img in inv.items():
        assert ars.action_base.equal(act.apply(img), X(x))


def test_smash_regenerates_jordanian(amk):
    target = [rel for rel in amk.relations if "f" in rel.letters()]
    smash_product(amk.action_base, "f", amk.action, target=target)


def test_trivial_action_is_tensor_product(ars):
    act = ActionTable("f", {x: X(x) for x in "abcd"})
    pres = smash_product(ars.action_base, "f", act)
    for x in "abcd":
        assert pres.nf(X("f") * X(x)) == X(x) * X("f")


def test_non_automorphism_is_named(ars):
    act = ActionTable("f", {"a": X("a"), "b": X("b").scale(2), "c": X("c"), "d": X("d")})
    assert automorphism_failures(ars.action_base, act)
    with pytest.raises(VerificationError) as exc:
        smash_product(ars.action_base, "f", act)
    assert exc.value.failures and exc.value.failures[0].startswith("violates")


@given(st.sampled_from("abcd"), st.sampled_from("abcd"))
def test_module_algebra_law(ars, x, y):
    act = ars.action
    A = ars.action_base
    assert A.equal(act.apply(X(x) * X(y)), act.apply(X(x)) * act.apply(X(y)))


def test_pq_realization(ars):
    A = ars.presentation
    for n in (1, 2):
        rep = pq_realization(A, n)
        assert rep.lattice_ok
        p, q = r ** -1 * s ** n, r ** -1 * s ** -n
        pr = {x: X("f") ** n * X(x) for x in "abcd"}
        assert A.is_zero(pr["a"] * pr["b"] - (pr["b"] * pr["a"]).scale(p))
        assert A.is_zero(pr["a"] * pr["c"] - (pr["c"] * pr["a"]).scale(q))
    assert pq_exponents(r ** -1 * s, 1) is not None
    assert pq_exponents(s, 1) is None


def test_pq_sign_of_n_swaps_p_and_q(ars):
    plus = pq_realization(ars.presentation, 1).relations
    minus = pq_realization(ars.presentation, -1).relations
    swap = {"s": s ** -1}
    assert [p.map_coeffs(lambda c: c.subs(swap)) for p in plus] == minus


def test_pq_zero(ars):
    with pytest.raises(DomainError):
        pq_realization(ars.presentation, 0)
    rep = pq_realization(ars.presentation, 0, allow_zero=True)
    first = rep.relations[0]
    assert first.coeff(("a'", "b'")) == -r


def test_coproduct_tensor_legs(ars):
    T = Tensors(ars.presentation, ars.structure)
    d = ars.qdet.big_d
    assert T.power(2).equal(T.delta(d), to_leg(d, 1) * to_leg(d, 2))
