"""Hopf structure tables, their verification, quantum determinant checks,
smash products and the GL_{p,q}(2) realization."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, VerificationError
from .linalg import left_kernel
from .ncpoly import (INV, Generator, Localization, NCPoly, Presentation, Verdict,
                     base_letter, derive_inverse_rules, ideal_equivalence,
                     independent_relations, is_inverse, join_legs, leg_of, off_leg, on_leg,
                     split_legs, tensor_presentation, to_leg, word_str)
from .scalar import ONE, ZERO, Scalar


@dataclass
class StructureTables:
    """Coproduct (two-leg NCPolys), counit and optional antipode on generators.
    Inverse letters are handled automatically for group-like generators."""
    coproduct: dict
    counit: dict
    antipode: dict | None = None

    def delta(self, x: str) -> NCPoly:
        if x in self.coproduct:
            return self.coproduct[x]
        if is_inverse(x) and base_letter(x) in self.coproduct:
            return self.coproduct[base_letter(x)].monomial_inverse()
        raise DomainError(f"no coproduct for {x!r}")

    def eps(self, x: str) -> Scalar:
        if x in self.counit:
            return Scalar.coerce(self.counit[x])
        if is_inverse(x) and base_letter(x) in self.counit:
            return Scalar.coerce(self.counit[base_letter(x)]).inverse()
        raise DomainError(f"no counit for {x!r}")

    def s(self, x: str) -> NCPoly:
        if self.antipode is None:
            raise DomainError("no antipode table")
        if x in self.antipode:
            return self.antipode[x]
        if is_inverse(x) and base_letter(x) in self.antipode:
            return self.antipode[base_letter(x)].monomial_inverse()
        raise DomainError(f"no antipode for {x!r}")

    def check_total(self, pres: Presentation) -> None:
        for g in pres.generators:
            if g.name not in self.coproduct or g.name not in self.counit:
                raise DomainError(f"structure tables miss generator {g.name!r}")
        for table in (self.coproduct, self.counit):
            for x in table:
                if x not in pres.rank:
                    raise DomainError(f"table references unknown generator {x!r}")


class Tensors:
    """Cached tensor powers of a presentation plus the usual leg maps."""

    def __init__(self, pres: Presentation, tables: StructureTables):
        self.pres = pres
        self.tables = tables
        self._powers: dict[int, Presentation] = {}

    def power(self, n: int) -> Presentation:
        if n not in self._powers:
            self._powers[n] = tensor_presentation(self.pres, n)
        return self._powers[n]

    def delta(self, p: NCPoly) -> NCPoly:
        return self.power(2).nf(NCPoly.coerce(p).map_letters(self.tables.delta))

    def eps(self, p: NCPoly) -> Scalar:
        out = ZERO
        for w, c in NCPoly.coerce(p).terms.items():
            v = c
            for x in w:
                v = v * self.tables.eps(x)
                if not v:
                    break
            out = out + v
        return out

    def antipode(self, p: NCPoly) -> NCPoly:
        return NCPoly.coerce(p).map_letters(self.tables.s, reverse=True)

    def apply_on_leg(self, t: NCPoly, n: int, leg: int, fn, width: int | None = None) -> NCPoly:
        """Replace leg `leg` of an n-leg tensor by fn(subword), a `width`-leg
        tensor (inferred when omitted); later legs shift up by width-1."""
        out = NCPoly()
        for w, c in t.terms.items():
            parts = split_legs(w, n)
            image = fn(NCPoly.word(parts[leg - 1]))
            m = width or max(_legs_in(image), 1)
            head = parts[:leg - 1]
            tail = tuple(on_leg(x, leg + m + k)
                         for k, part in enumerate(parts[leg:]) for x in part)
            for iw, ic in image.terms.items():
                mid = tuple(on_leg(off_leg(x), (leg_of(x) or 1) + leg - 1) for x in iw)
                out = out + NCPoly.word(join_legs(head) + mid + tail, c * ic)
        return out


def _legs_in(p: NCPoly) -> int:
    return max((leg_of(x) or 0 for w in p.terms for x in w), default=0)


@dataclass
class BialgebraReport:
    algebra_map: bool
    coassociative: bool
    counit: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.algebra_map and self.coassociative and self.counit


def verify_bialgebra(pres: Presentation, tables: StructureTables) -> BialgebraReport:
    tables.check_total(pres)
    T = Tensors(pres, tables)
    failures = []
    alg = True
    for rel in pres.relations:
        if T.delta(rel):
            alg = False
            failures.append(f"Delta({pres.to_str(rel)}) != 0")
        if T.eps(rel):
            alg = False
            failures.append(f"eps({pres.to_str(rel)}) != 0")
    co = True
    cu = True
    P3 = T.power(3)
    for x in pres.letters:
        d = T.delta(NCPoly.letter(x))
        left = T.apply_on_leg(d, 2, 1, T.delta, 2)
        right = T.apply_on_leg(d, 2, 2, T.delta, 2)
        if not P3.equal(left, right):
            co = False
            failures.append(f"coassociativity fails on {x}")
        for leg in (1, 2):
            v = NCPoly()
            for w, c in d.terms.items():
                parts = split_legs(w, 2)
                v = v + NCPoly.word(parts[2 - leg], c * T.eps(NCPoly.word(parts[leg - 1])))
            if not pres.equal(v, NCPoly.letter(x)):
                cu = False
                failures.append(f"counit law (leg {leg}) fails on {x}")
    return BialgebraReport(alg, co, cu, failures)


@dataclass(frozen=True)
class QDet:
    delta: NCPoly
    big_d: NCPoly


def verify_antipode(pres: Presentation, tables: StructureTables, qdet: QDet,
                    loc: Localization | None, tpattern=None) -> tuple[bool, list[str]]:
    """Both antipode identities on the T-matrix, and S(g)g = gS(g) = 1 for
    invertible generators, decided in A[delta^-1]."""
    if loc is None:
        raise DomainError("antipode verification needs the delta^-1 localization")
    if tables.antipode is None:
        raise DomainError("no antipode table")
    failures = []
    S = tables.s
    if tpattern is not None:
        n = tpattern.n
        for i in range(n):
            for j in range(n):
                one = NCPoly.const(ONE if i == j else ZERO)
                left = NCPoly()
                right = NCPoly()
                for k in range(n):
                    tik, tkj = tpattern(i, k), tpattern(k, j)
                    if tik is not None and tkj is not None:
                        left = left + S(tik) * NCPoly.letter(tkj)
                        right = right + NCPoly.letter(tik) * S(tkj)
                if not loc.equal(left, one):
                    failures.append(f"sum_k S(t{i}k) tk{j} != delta_{i}{j}")
                if not loc.equal(right, one):
                    failures.append(f"sum_k t{i}k S(tk{j}) != delta_{i}{j}")
    for g in pres.generators:
        if g.invertible and g.name in (tables.antipode or {}):
            x = NCPoly.letter(g.name)
            if not loc.equal(S(g.name) * x, ONE) or not loc.equal(x * S(g.name), ONE):
                failures.append(f"S({g.name}){g.name} != 1")
    return not failures, failures


def antipode_antihom_failures(pres: Presentation, tables: StructureTables, loc: Localization) -> list[str]:
    """S(xy) - S(y)S(x) on the relations: S must kill every defining relation
    when applied anti-multiplicatively."""
    T = Tensors(pres, tables)
    bad = []
    for rel in pres.relations:
        if not loc.is_zero(T.antipode(rel)):
            bad.append(pres.to_str(rel))
    return bad


@dataclass
class QDetReport:
    central: bool
    noncentral_letters: list
    group_like: bool
    witness: NCPoly

    @property
    def ok(self) -> bool:
        return self.central and self.group_like and bool(self.witness)


def qdet_checks(pres: Presentation, tables: StructureTables, qdet: QDet, witness_letter: str = "b") -> QDetReport:
    bad = [x for x in pres.letters
           if not pres.equal(qdet.delta * NCPoly.letter(x), NCPoly.letter(x) * qdet.delta)]
    T = Tensors(pres, tables)
    D = qdet.big_d
    gl = T.power(2).equal(T.delta(D), to_leg(D, 1) * to_leg(D, 2))
    x = NCPoly.letter(witness_letter)
    wit = pres.nf(D * x - x * D)
    return QDetReport(not bad, bad, gl, wit)


@dataclass
class ActionTable:
    """Left action of a group-like generator on the generators of an algebra."""
    acting: str
    action: dict

    def apply(self, p: NCPoly) -> NCPoly:
        return NCPoly.coerce(p).map_letters(lambda x: self.action.get(x, NCPoly.letter(x)))


def automorphism_failures(base: Presentation, act: ActionTable) -> list[str]:
    """Relations of `base` not preserved by the action (empty = automorphism)."""
    for x, img in act.action.items():
        if x not in base.rank:
            raise DomainError(f"action on unknown generator {x!r}")
        base.check_letters(img)
    return [base.to_str(rel) for rel in base.relations if not base.is_zero(act.apply(rel))]


def smash_product(base: Presentation, acting: str, act: ActionTable, *,
                  target: Sequence[NCPoly] | None = None, name: str | None = None,
                  max_degree: int = 4) -> Presentation:
    """A x| <f, f^-1> with cross rules f*x -> (f|>x)*f, f ranked last.

    Raises VerificationError if the action is not an automorphism or if the
    cross rules do not generate the same ideal as `target` (with A's relations)."""
    bad = automorphism_failures(base, act)
    if bad:
        raise VerificationError("action is not an algebra automorphism", [f"violates {r}" for r in bad])
    gens = list(base.generators) + [Generator(acting, True)]
    f = NCPoly.letter(acting)
    cross = []
    for x in base.letters:
        img = act.action.get(x, NCPoly.letter(x))
        cross.append(((acting, x), img * f))
    rels = list(base.relations) + [f * NCPoly.letter(x) - img_f for (_, x), img_f in cross]
    pres = Presentation(gens, list(base.rules) + cross, relations=rels,
                        name=name or f"{base.name}x|{acting}")
    inv = derive_inverse_rules(pres)
    pres = Presentation(gens, list(pres.rules) + inv, relations=rels, name=pres.name)
    if target is not None:
        verdict = ideal_equivalence(pres, list(base.relations) + list(target), max_degree)
        if verdict is not Verdict.TRUE:
            raise VerificationError("cross rules do not reproduce the target relations",
                                    [f"ideal equivalence is {verdict.value}"])
    return pres


def inverse_action(pres: Presentation, acting: str) -> dict:
    """f^-1 |> x read off the derived rules f^-1*x -> (f^-1|>x)*f^-1."""
    fi = acting + INV
    out = {}
    for l, r in pres.rules:
        if len(l) == 2 and l[0] == fi and not base_letter(l[1]) == acting:
            img = NCPoly()
            for w, c in r.terms.items():
                if w[-1:] != (fi,):
                    raise DomainError("inverse rule is not of cross-product form")
                img = img + NCPoly.word(w[:-1], c)
            out[l[1]] = img
    return out


# ---------------------------------------------------------------------------
# GL_{p,q}(2) realization


def pq_exponents(c: Scalar, n: int) -> list[tuple[int, int, Fraction]] | None:
    """Write a Laurent Scalar in r, s as sum coeff * p^i q^j with p = r^-1 s^n,
    q = r^-1 s^-n.  None if some term is outside that lattice."""
    if not c.is_laurent() or not c.params() <= {"r", "s"}:
        return None
    out = []
    for m, coeff in c.numerator.items():
        ex = dict(m)
        alpha = Fraction(ex.get("r", 0), 2)
        beta = Fraction(ex.get("s", 0), 2)
        if n == 0:
            if beta != 0 or alpha.denominator != 1:
                return None
            out.append((int(-alpha), 0, coeff))
            continue
        # alpha = -(i + j), beta = n (i - j)
        s_ = -alpha
        d_ = beta / n
        i2, j2 = s_ + d_, s_ - d_
        if i2.denominator != 1 or j2.denominator != 1 or int(i2) % 2 or int(j2) % 2:
            return None
        out.append((int(i2) // 2, int(j2) // 2, coeff))
    return sorted(out)


def pq_str(c: Scalar, n: int) -> str:
    terms = pq_exponents(c, n)
    if terms is None:
        return f"<{c} outside the p,q lattice>"
    parts = []
    for i, j, coeff in terms:
        mono = "*".join(x for x in ((f"p^{i}" if i != 1 else "p") if i else "",
                                    (f"q^{j}" if j != 1 else "q") if j else "") if x)
        parts.append((coeff, mono))
    out = ""
    for k, (coeff, mono) in enumerate(parts):
        neg = coeff < 0
        a = -coeff if neg else coeff
        body = mono if a == 1 and mono else (f"{a}*{mono}" if mono else f"{a}")
        out += (("-" if neg else "") + body) if k == 0 else ((" - " if neg else " + ") + body)
    return out


@dataclass
class PQRealization:
    n: int
    relations: list  # NCPolys in primed letters x' (x' = f^n x)
    lattice_ok: bool
    offending: list

    def pq_form(self, rel: NCPoly) -> str:
        parts = []
        for w, c in sorted(rel.terms.items(), key=lambda t: t[0], reverse=True):
            parts.append(f"({pq_str(c, self.n)})*{word_str(w)}")
        return " + ".join(parts)


def pq_realization(pres: Presentation, n: int, *, acting: str = "f",
                   letters: Sequence[str] = ("a", "b", "c", "d"), allow_zero: bool = False) -> PQRealization:
    """Exchange relations among x' = f^n x, from the kernel of the product map
    span{x'y'} -> A.  Coefficients must lie in the (p, q) lattice."""
    if n == 0 and not allow_zero:
        raise DomainError("N must be nonzero")
    f_n = NCPoly.letter(acting) ** n
    primed = {x: f_n * NCPoly.letter(x) for x in letters}
    pairs = list(itertools.product(letters, repeat=2))
    images = [pres.nf(primed[x] * primed[y]) for x, y in pairs]
    kernel = left_kernel(images)
    names = [x + "'" for x in letters]
    free = Presentation([Generator(x) for x in names], (), check=False)
    rels = []
    for vec in kernel:
        p = NCPoly()
        for (x, y), c in zip(pairs, vec):
            if c:
                p = p + NCPoly.word((x + "'", y + "'"), c)
        rels.append(p)
    rels = independent_relations(rels, free.key)
    bad = []
    for rel in rels:
        for w, c in rel.terms.items():
            if pq_exponents(c, n) is None:
                bad.append(f"{c} in {rel}")
    return PQRealization(n, rels, not bad, bad)
