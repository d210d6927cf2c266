import pytest
from hypothesis import given, strategies as st

from glrs.errors import DomainError
from glrs.ncpoly import (Generator, NCPoly, Presentation, Verdict, confluence_check, ideal_equivalence)
from glrs.scalar import Scalar

r = Scalar.param("r")
s = Scalar.param("s")
X = NCPoly.letter


def test_normal_form_examples(ars):
    A = ars.presentation
    lam = r - r ** -1
    assert A.nf(X("d") * X("a")) == X("a") * X("d") - (X("b") * X("c")).scale(r ** -1 - r)
    assert A.nf(X("f") * X("b")) == (X("b") * X("f")).scale(s)
    assert A.nf(NCPoly.const(1)) == NCPoly.const(1)
    assert A.nf(X("f") * X("f^-1")) == NCPoly.const(1)
    assert lam == r - r ** -1


def test_unknown_generator(ars):
    with pytest.raises(DomainError):
        ars.presentation.nf(X("z"))


def test_confluence_examples(ars):
    assert confluence_check(ars.presentation, 4) == []
    gens = [Generator(x) for x in "abc"]
    # a skew-polynomial ring: both reductions of cba give 2abc
    skew = Presentation(gens, [(("b", "a"), X("a") * X("b")), (("c", "b"), X("b") * X("c")),
                               (("c", "a"), (X("a") * X("c")).scale(2))])
    assert confluence_check(skew, 3) == []
    # ba -> ab + c breaks it: cba reduces to 2abc + 2cc and to 2abc + cc
    bad = Presentation(gens, [(("b", "a"), X("a") * X("b") + X("c")), (("c", "b"), X("b") * X("c")),
                              (("c", "a"), (X("a") * X("c")).scale(2))])
    over = confluence_check(bad, 3)
    assert [o.word for o in over] == [("c", "b", "a")]
    assert over[0].difference in (X("c") * X("c"), -(X("c") * X("c")))
    comm = Presentation(gens[:2], [(("b", "a"), X("a") * X("b"))])
    assert confluence_check(comm, 4) == []
    with pytest.raises(DomainError):
        confluence_check(comm, 1)


def test_ideal_equivalence_examples(ars):
    A = ars.presentation
    rels = list(ars.relations)
    assert ideal_equivalence(A, rels, 4) is Verdict.TRUE
    flipped = [X("a") * X("b") - (X("b") * X("a")).scale(r)] + rels[1:]
    assert ideal_equivalence(A, flipped, 4) is Verdict.FALSE


def test_relation_count(ars):
    assert len(ars.relations) == 10
    assert ars.presentation.letters == ("a", "b", "c", "d", "f", "f^-1")


words = st.lists(st.sampled_from(["a", "b", "c", "d", "f", "f^-1"]), max_size=4)


@given(words, words)
def test_nf_is_multiplicative(ars, u, w):
    A = ars.presentation
    p, q = NCPoly.word(u), NCPoly.word(w)
    assert A.nf(p * q) == A.nf(A.nf(p) * A.nf(q))
    assert A.nf(A.nf(p)) == A.nf(p)


@given(words)
def test_normal_words_are_pbw(ars, u):
    A = ars.presentation
    for w in A.nf(NCPoly.word(u)).terms:
        assert A.is_normal(w)
        ranks = [A.rank[x] for x in w if x not in ("f", "f^-1")]
        assert ranks == sorted(ranks)


def test_r_equal_one_is_commutative(ars):
    one = {"r": Scalar.const(1)}
    for rel in ars.relations:
        if "f" in rel.letters():
            continue
        q = rel.map_coeffs(lambda c: c.subs(one))
        assert len(q.terms) in (0, 2)
        if q.terms:
            (w1, c1), (w2, c2) = q.terms.items()
            assert w1 == w2[::-1] and c1 == -c2


def test_s_equal_one_makes_f_central(ars):
    one = {"s": Scalar.const(1)}
    A = ars.presentation
    for x in "abcd":
        for w, c in A.nf(X("f") * X(x)).terms.items():
            assert w == (x, "f") and c.subs(one) == Scalar.const(1)
