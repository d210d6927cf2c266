from hypothesis import given, strategies as st

from glrs.frt import RMatrix, TPattern, coideal_check, coideal_witnesses, qybe_check, qybe_mismatches, rtt_relations
from glrs.ncpoly import Generator, NCPoly, Presentation, Verdict, ideal_equivalence
from glrs.presets import LAM, build_preset, spec_for
from glrs.scalar import Scalar

r = Scalar.param("r")
X = NCPoly.letter


def _ars_with(entries_fn):
    spec = spec_for("ars")
    spec["rmatrix"]["entries"] = [[entries_fn(x) for x in row] for row in spec["rmatrix"]["entries"]]
    return build_preset(spec)


def test_qybe_examples(ars):
    assert qybe_check(ars.rmatrix)
    assert qybe_check(RMatrix.identity(3))
    doubled = _ars_with(lambda x: f"2*{LAM}" if x == LAM else x)
    assert not qybe_check(doubled.rmatrix)
    # mismatches are located by 27x27 coordinates
    bad = qybe_mismatches(doubled.rmatrix)
    assert bad and all(len(i) == 3 and len(j) == 3 for i, j in bad)


@given(st.sampled_from(["2", "r", "s^-1*r^(1/2)", "(r - r^-1)", "-3/7"]))
def test_qybe_invariant_under_rescaling(c):
    from glrs.scalar import parse_scalar
    from glrs.presets import load_preset
    R = load_preset("ars").rmatrix
    assert qybe_check(R.scaled(parse_scalar(c, ["r", "s"])))


def test_rtt_reproduces_eq_4_5(ars):
    order = [g.name for g in ars.presentation.generators]
    rels = rtt_relations(ars.rmatrix, ars.tpattern, order=order)
    assert len(rels) == 10
    target = X("a") * X("b") - (X("b") * X("a")).scale(r ** -1)
    assert any(p == target.scale(-r) for p in rels)
    assert ideal_equivalence(ars.presentation, rels, 4) is Verdict.TRUE
    free = Presentation([Generator(x) for x in order], (), check=False)
    for p in rels:
        assert p.terms[free.leading(p)] == Scalar.const(1)


def test_rtt_is_self_equivalent(ars):
    order = [g.name for g in ars.presentation.generators]
    rels = rtt_relations(ars.rmatrix, ars.tpattern, order=order)
    pres = Presentation.from_relations(ars.presentation.generators, rels)
    assert ideal_equivalence(pres, rels, 4) is Verdict.TRUE


def test_identity_r_gives_commutators():
    T = TPattern.of([["a", "b"], ["c", "d"]])
    rels = rtt_relations(RMatrix.identity(2), T)
    assert len(rels) == 6
    for p in rels:
        (w1, c1), (w2, c2) = sorted(p.terms.items())
        assert w1 == w2[::-1] and c1 == -c2


def test_coideal_examples():
    assert coideal_check(3, {(0, 1), (0, 2), (1, 0), (2, 0)})
    assert not coideal_check(3, {(0, 1)})
    wit = coideal_witnesses(3, {(0, 1)})
    assert ((0, 1), (0, 2), (2, 1)) in wit
    assert coideal_check(3, set())


def test_display_round_trip(ars):
    from glrs.presets import BLOCK_ORDER
    order = [tuple(p) for p in BLOCK_ORDER]
    disp = ars.rmatrix.to_display(order, transpose=True)
    again = RMatrix.from_display(disp, order, transpose=True)
    assert again.to_display(order) == ars.rmatrix.to_display(order)
