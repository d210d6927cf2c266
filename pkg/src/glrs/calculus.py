"""First-order bicovariant differential calculus generated by L+ and L-.

One-forms are elements of the free left A-module on the form letters; an
element is stored as an NCPoly whose every word is an A-word followed by
exactly one form letter, e.g. ``(r^-2 - 1)*a*w1 - (r - r^-1)*b*wp``.

    omega_ij x = sum_kl x(1) <S(l+_ki) l-_jl, x(2)> omega_kl
    chi_kl     = sum_i S(l+_ki) l-_il - delta_kl eps
    d x        = sum_kl (chi_kl * x) omega_kl,   chi * x = x(1) chi(x(2))
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .duality import (LTable, Pairing, l_pairing_table, l_representations)
from .errors import DomainError
from .frt import RMatrix, TPattern
from .hopf import StructureTables
from .ncpoly import Localization, NCPoly, Presentation, join_legs, split_legs, to_leg
from .scalar import ONE, ZERO, Scalar

Word = tuple

# retained forms and their matrix positions
FORMS = {"w0": (0, 0), "w1": (1, 1), "wp": (1, 2), "wm": (2, 1), "w2": (2, 2)}
CHI = {"w0": "chi0", "w1": "chi1", "wp": "chip", "wm": "chim", "w2": "chi2"}
TAU = ("w0", "w1", "w2")


def form_label(i: int, j: int) -> str:
    for k, v in FORMS.items():
        if v == (i, j):
            return k
    return f"w{i}{j}"


def split_form(w: Word) -> tuple[Word, str]:
    if not w:
        raise DomainError("a one-form word must end in a form letter")
    return w[:-1], w[-1]


def is_form(x: str) -> bool:
    return x.startswith("w")


@dataclass
class CalculusData:
    """Everything the construction needs: the algebra with its Hopf tables,
    the functional R-matrix, the T-pattern, the L pattern and delta."""
    algebra: Presentation
    tables: StructureTables
    rl: RMatrix
    tpattern: TPattern
    ltable: LTable
    delta: NCPoly
    letters: tuple = ("a", "b", "c", "d", "f")

    def __post_init__(self):
        self.letters = tuple(self.letters)
        self.n = self.rl.n
        reps = l_representations(self.rl, self.tpattern, self.delta)
        alg = sorted(self.algebra.letters)
        self.pairing = Pairing(l_pairing_table(self.ltable, reps, alg, antipode=self.tables),
                               self.tables, alg)
        self.localization = Localization(self.algebra, self.delta)

    def functional(self, i: int, j: int, k: int, l: int) -> Word | None:
        """The dual word S(l+_ki) l-_jl, None when an entry is zero."""
        p, m = self.ltable.plus[k][i], self.ltable.minus[j][l]
        if p is None or m is None:
            return None
        return (f"S({p})", m)

    def coproduct_terms(self, w: Word) -> list[tuple[Scalar, Word, Word]]:
        """Delta of a word, expanded letter by letter (not normalized)."""
        terms = {((), ()): ONE}
        for x in w:
            nxt: dict = {}
            for t, c in self.tables.delta(x).terms.items():
                u, v = split_legs(t, 2)
                for (l, r), c0 in terms.items():
                    key = (l + u, r + v)
                    nxt[key] = nxt.get(key, ZERO) + c0 * c
            terms = {k: v for k, v in nxt.items() if v}
        return [(c, l, r) for (l, r), c in terms.items()]


@dataclass
class FODCTables:
    forms: dict
    sigma: dict      # (form, letter) -> one-form
    chi: dict        # (chi label, letter) -> Scalar
    conv: dict       # (chi label, letter) -> NCPoly
    d: dict          # letter -> one-form
    dropped: list = field(default_factory=list)  # dropped forms met while building
    data: CalculusData | None = field(default=None, repr=False)

    def chi_labels(self) -> list[str]:
        return [CHI[f] for f in self.forms]


def normalize_form(p: NCPoly, algebra: Presentation) -> NCPoly:
    """Group by form letter and bring each A-coefficient to normal form."""
    groups: dict[str, NCPoly] = {}
    for w, c in p.terms.items():
        u, om = split_form(w)
        groups[om] = groups.get(om, NCPoly()) + NCPoly.word(u, c)
    out = NCPoly()
    for om in sorted(groups):
        out = out + algebra.nf(groups[om]) * NCPoly.letter(om)
    return out


def forms_in(p: NCPoly) -> set[str]:
    return {w[-1] for w in p.terms}


def _sigma_word(data: CalculusData, i: int, j: int, w: Word) -> NCPoly:
    """omega_ij * w as sum w(1) <f^ij_kl, w(2)> omega_kl over all 9 kl."""
    out = NCPoly()
    n = data.n
    for c, left, right in data.coproduct_terms(w):
        for k, l in itertools.product(range(n), repeat=2):
            fw = data.functional(i, j, k, l)
            if fw is None:
                continue
            v = data.pairing.words(fw, right)
            if v:
                out = out + NCPoly.word(left + (form_label(k, l),), c * v)
    return normalize_form(out, data.algebra)


def commutation_table(data: CalculusData) -> dict:
    """sigma[(form, x)] for the retained forms and every letter of A."""
    table = {}
    for om, (i, j) in FORMS.items():
        for x in _sigma_letters(data):
            table[(om, x)] = _sigma_word(data, i, j, (x,))
    return table


def _sigma_letters(data: CalculusData) -> list[str]:
    return [x for x in sorted(data.algebra.letters) if x != data.localization.symbol]


def _chi_value(data: CalculusData, k: int, l: int, w: Word) -> Scalar:
    v = ZERO
    for i in range(data.n):
        fw = data.functional(i, i, k, l)
        if fw is not None:
            v = v + data.pairing.words(fw, w)
    if k == l:
        e = ONE
        for x in w:
            e = e * data.tables.eps(x)
        v = v - e
    return v


def _conv_word(data: CalculusData, k: int, l: int, w: Word) -> NCPoly:
    out = NCPoly()
    for c, left, right in data.coproduct_terms(w):
        v = _chi_value(data, k, l, right)
        if v:
            out = out + NCPoly.word(left, c * v)
    return data.algebra.nf(out)


def chi_fields(data: CalculusData) -> tuple[dict, dict]:
    """chi[(label, x)] = chi(x) and conv[(label, x)] = chi * x for retained labels."""
    chi, conv = {}, {}
    for om, (k, l) in FORMS.items():
        for x in _sigma_letters(data):
            chi[(CHI[om], x)] = _chi_value(data, k, l, (x,))
            conv[(CHI[om], x)] = _conv_word(data, k, l, (x,))
    return chi, conv


def _d_word(data: CalculusData, w: Word) -> NCPoly:
    """d on a single word from the convolutions, summed over all 9 positions."""
    out = NCPoly()
    for k, l in itertools.product(range(data.n), repeat=2):
        p = _conv_word(data, k, l, w)
        if p:
            out = out + p * NCPoly.letter(form_label(k, l))
    return normalize_form(out, data.algebra)


def build_calculus(data: CalculusData) -> FODCTables:
    sigma = commutation_table(data)
    chi, conv = chi_fields(data)
    d = {x: _d_word(data, (x,)) for x in _sigma_letters(data)}
    dropped = []
    for key, p in list(sigma.items()) + [((None, x), p) for x, p in d.items()]:
        bad = forms_in(p) - set(FORMS)
        if bad:
            dropped.append(f"{key}: {sorted(bad)}")
    return FODCTables(dict(FORMS), sigma, chi, conv, d, dropped, data)


# ---------------------------------------------------------------------------
# The bimodule structure


def right_multiply(F: FODCTables, rho: NCPoly, x: str) -> NCPoly:
    """rho * x for a one-form rho and a letter x, through the sigma rules."""
    out = NCPoly()
    for w, c in rho.terms.items():
        u, om = split_form(w)
        rule = F.sigma.get((om, x))
        if rule is None:
            raise DomainError(f"no exchange rule for {om} * {x}")
        out = out + (NCPoly.word(u, c) * rule)
    return normalize_form(out, F.data.algebra)


def right_multiply_poly(F: FODCTables, rho: NCPoly, p: NCPoly) -> NCPoly:
    out = NCPoly()
    for w, c in NCPoly.coerce(p).terms.items():
        t = rho.scale(c)
        for x in w:
            t = right_multiply(F, t, x)
        out = out + t
    return normalize_form(out, F.data.algebra)


def exterior_d(F: FODCTables, p) -> NCPoly:
    """d extended to any element of A by the Leibniz rule; d(1) = 0."""
    out = NCPoly()
    for w, c in NCPoly.coerce(p).terms.items():
        for k, x in enumerate(w):
            if x not in F.d:
                raise DomainError(f"no derivative for letter {x!r}")
            t = NCPoly.word(w[:k], c) * F.d[x]
            for y in w[k + 1:]:
                t = right_multiply(F, t, y)
            out = out + t
    return normalize_form(out, F.data.algebra)


def tau() -> NCPoly:
    out = NCPoly()
    for om in TAU:
        out = out + NCPoly.letter(om)
    return out


def tau_commutator(F: FODCTables, x: str) -> NCPoly:
    """tau x - x tau."""
    t = tau()
    return normalize_form(right_multiply(F, t, x) - NCPoly.letter(x) * t, F.data.algebra)


# ---------------------------------------------------------------------------
# Verification


@dataclass
class CalculusReport:
    leibniz: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    tau: list = field(default_factory=list)
    bimodule: list = field(default_factory=list)
    dropped: list = field(default_factory=list)
    left_covariance: list = field(default_factory=list)
    right_covariance: list = field(default_factory=list)
    realization: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)
    elapsed: float = 0.0

    SECTIONS = ("leibniz", "relations", "tau", "bimodule", "dropped",
                "left_covariance", "right_covariance", "realization")

    @property
    def ok(self) -> bool:
        return not any(getattr(self, s) for s in self.SECTIONS)

    def failures(self) -> list[str]:
        return [f"{s}: {m}" for s in self.SECTIONS for m in getattr(self, s)]


def leibniz_failures(F: FODCTables, letters: Sequence[str]) -> list[str]:
    """d(xy) = d(x) y + x d(y), with d of the left side taken on nf(xy)."""
    A = F.data.algebra
    bad = []
    for x, y in itertools.product(letters, repeat=2):
        lhs = exterior_d(F, A.nf(NCPoly.word((x, y))))
        rhs = right_multiply(F, F.d[x], y) + NCPoly.letter(x) * F.d[y]
        if normalize_form(lhs - rhs, A):
            bad.append(f"d({x}{y}) != d({x}){y} + {x}d({y})")
    return bad


def relation_failures(F: FODCTables, relations: Sequence[NCPoly]) -> list[str]:
    bad = []
    for rel in relations:
        if exterior_d(F, rel):
            bad.append(f"d({rel}) != 0")
    return bad


def bimodule_failures(F: FODCTables, letters: Sequence[str]) -> list[str]:
    """omega (xy) in one step against (omega x) y."""
    data = F.data
    bad = []
    for om, (i, j) in F.forms.items():
        for x, y in itertools.product(letters, repeat=2):
            direct = _sigma_word(data, i, j, (x, y))
            stepwise = right_multiply(F, F.sigma[(om, x)], y)
            if normalize_form(direct - stepwise, data.algebra):
                bad.append(f"{om}*({x}{y}) differs from ({om}*{x})*{y}")
    return bad


def _leg_nf(p: NCPoly, algebra: Presentation, leg_forms: int | None) -> NCPoly:
    """Normal form of a two-leg tensor, leg by leg; the leg given by
    `leg_forms` carries one-forms."""
    groups: dict = {}
    for w, c in p.terms.items():
        u, v = split_legs(w, 2)
        key = [(), ()]
        coeff = [u, v]
        if leg_forms is not None:
            k = leg_forms - 1
            coeff[k], key[k] = coeff[k][:-1], coeff[k][-1:]
        t = NCPoly.word(coeff[0], c), NCPoly.word(coeff[1])
        groups.setdefault(tuple(key), []).append(t)
    out = NCPoly()
    for (f1, f2), terms in sorted(groups.items()):
        # collect leg 2 against normalized leg 1 words
        by_left: dict = {}
        for l, r in terms:
            for w1, c1 in algebra.nf(l).terms.items():
                by_left[w1] = by_left.get(w1, NCPoly()) + r.scale(c1)
        for w1, r in by_left.items():
            r = algebra.nf(r)
            for w2, c2 in r.terms.items():
                out = out + NCPoly.word(join_legs((w1 + f1, w2 + f2)), c2)
    return out


def left_covariance_failures(F: FODCTables, letters: Sequence[str]) -> list[str]:
    """Delta_L(omega x) = (1 (x) omega) Delta(x) and Delta_L d = (id (x) d) Delta,
    the left coaction being Delta_L(a omega) = Delta(a)(1 (x) omega)."""
    data = F.data
    A = data.algebra
    bad = []
    for om in F.forms:
        for x in letters:
            lhs = NCPoly()
            for c, l, r in data.coproduct_terms((x,)):
                moved = right_multiply(F, NCPoly.letter(om), _single(r))
                lhs = lhs + NCPoly.word(join_legs((l, ())), c) * to_leg(moved, 2)
            rhs = NCPoly()
            for w, c in F.sigma[(om, x)].terms.items():
                u, f = split_form(w)
                for c2, l, r in data.coproduct_terms(u):
                    rhs = rhs + NCPoly.word(join_legs((l, r + (f,))), c * c2)
            if _leg_nf(lhs - rhs, A, 2):
                bad.append(f"Delta_L({om}*{x}) mismatch")
    for x in letters:
        lhs = NCPoly()
        for w, c in F.d[x].terms.items():
            u, f = split_form(w)
            for c2, l, r in data.coproduct_terms(u):
                lhs = lhs + NCPoly.word(join_legs((l, r + (f,))), c * c2)
        rhs = NCPoly()
        for c, l, r in data.coproduct_terms((x,)):
            rhs = rhs + NCPoly.word(join_legs((l, ())), c) * to_leg(exterior_d(F, NCPoly.word(r)), 2)
        if _leg_nf(lhs - rhs, A, 2):
            bad.append(f"Delta_L(d{x}) != (id (x) d) Delta({x})")
    return bad


def _single(w: Word) -> str:
    if len(w) != 1:
        raise DomainError("algebra coproduct must be linear in letters")
    return w[0]


def _antipode_entry(data: CalculusData, j: int, l: int) -> NCPoly:
    x = data.tpattern(j, l)
    return NCPoly() if x is None else data.tables.s(x)


def right_coaction(data: CalculusData, om: str) -> NCPoly:
    """Delta_R(omega_ij) = sum_kl omega_kl (x) t_ki S(t_jl), as a two-leg tensor
    (leg 2 may contain the localization symbol)."""
    i, j = FORMS[om] if om in FORMS else (int(om[1]), int(om[2]))
    out = NCPoly()
    for k, l in itertools.product(range(data.n), repeat=2):
        coeff = data.tpattern.poly(k, i) * _antipode_entry(data, j, l)
        if coeff:
            out = out + NCPoly.letter(form_label(k, l)).rename(lambda y: f"{y}@1") * to_leg(coeff, 2)
    return out


def _clear_leg2(p: NCPoly, loc: Localization) -> NCPoly:
    """Multiply leg 2 by delta^K so the localization symbol disappears."""
    e = loc.symbol
    parts = []
    K = 0
    for w, c in p.terms.items():
        u, v = split_legs(w, 2)
        v = loc.pres.nf(NCPoly.word(v))
        for w2, c2 in v.terms.items():
            k = 0
            while k < len(w2) and w2[k] == e:
                k += 1
            if e in w2[k:]:
                raise DomainError("localization symbol not central in normal form")
            parts.append((u, k, w2[k:], c * c2))
            K = max(K, k)
    out = NCPoly()
    for u, k, v, c in parts:
        right = loc.base.nf((loc.delta ** (K - k)) * NCPoly.word(v))
        for w2, c2 in right.terms.items():
            out = out + NCPoly.word(join_legs((u, w2)), c * c2)
    return out


def right_covariance_failures(F: FODCTables, letters: Sequence[str]) -> list[str]:
    """Retained forms coact into retained forms; Delta_R is a bimodule map on
    the sigma rules; Delta_R(dx) = (d (x) id) Delta(x)."""
    data = F.data
    A = data.algebra
    loc = data.localization
    bad = []
    for om in F.forms:
        co = right_coaction(data, om)
        for w, c in co.terms.items():
            u, v = split_legs(w, 2)
            if u[-1] not in F.forms and not loc.is_zero(NCPoly.word(v, c)):
                bad.append(f"Delta_R({om}) has a dropped component {u[-1]}")


    def coact(rho: NCPoly) -> NCPoly:
        """Delta_R(sum a omega) = sum Delta(a) Delta_R(omega)."""
        out = NCPoly()
        for w, c in rho.terms.items():
            u, om = split_form(w)
            co = right_coaction(data, om)
            for c2, l, r in data.coproduct_terms(u):
                out = out + NCPoly.word(join_legs((l, r)), c * c2) * co
        return out


    for om in F.forms:
        for x in letters:
            # Delta_R(omega) Delta(x): move omega past x(1) with sigma
            lhs = NCPoly()
            for w, c in right_coaction(data, om).terms.items():
                u, v = split_legs(w, 2)
                for c2, l, r in data.coproduct_terms((x,)):
                    left = right_multiply(F, NCPoly.word(u), _single(l))
                    lhs = lhs + to_leg(left, 1) * NCPoly.word(join_legs(((), v + r)), c * c2)
            rhs = coact(F.sigma[(om, x)])
            diff = _clear_leg2(lhs - rhs, loc)
            if _leg_nf(diff, A, 1):
                bad.append(f"Delta_R({om}*{x}) != Delta_R({om}) Delta({x})")
    for x in letters:
        rhs = NCPoly()
        for c, l, r in data.coproduct_terms((x,)):
            rhs = rhs + to_leg(exterior_d(F, NCPoly.word(l, c)), 1) * NCPoly.word(join_legs(((), r)))
        if _leg_nf(_clear_leg2(coact(F.d[x]) - rhs, loc), A, 1):
            bad.append(f"Delta_R(d{x}) != (d (x) id) Delta({x})")
    return bad



def realization_failures(F: FODCTables, n: int, letters: Sequence[str] = "abcd") -> list[str]:
    """d(f^N x) is a left A-combination of the retained forms."""
    bad = []
    for x in letters:
        p = NCPoly.word(("f",) * n + (x,))
        dp = exterior_d(F, p)
        extra = forms_in(dp) - set(F.forms)
        if extra:
            bad.append(f"d(f^{n}{x}) uses {sorted(extra)}")
    return bad


def verify_calculus(F: FODCTables, relations: Sequence[NCPoly], *,
                    letters: Sequence[str] | None = None, realization: Sequence[int] = (1, 2)) -> CalculusReport:
    t0 = time.perf_counter()
    letters = list(letters if letters is not None else F.data.letters)
    rep = CalculusReport()
    rep.leibniz = leibniz_failures(F, letters)
    rep.relations = relation_failures(F, relations)
    rep.tau = [f"tau {x} - {x} tau != d{x}" for x in letters
               if normalize_form(tau_commutator(F, x) - F.d[x], F.data.algebra)]
    rep.bimodule = bimodule_failures(F, letters)
    rep.dropped = list(F.dropped)
    rep.left_covariance = left_covariance_failures(F, letters)
    rep.right_covariance = right_covariance_failures(F, letters)
    for n in realization:
        rep.realization += realization_failures(F, n)
    rep.checked = {"leibniz": len(letters) ** 2, "relations": len(relations), "tau": len(letters),
                   "bimodule": len(F.forms) * len(letters) ** 2}
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# Comparison with printed tables


def mirror(p, name: str = "r"):
    """Substitute r -> r^-1 in the coefficients."""
    inv = {name: Scalar.param(name, -1)}
    if isinstance(p, Scalar):
        return p.subs(inv)
    return NCPoly.coerce(p).map_coeffs(lambda c: c.subs(inv))


@dataclass
class TableComparison:
    mismatches: dict = field(default_factory=dict)   # key -> (computed, printed)
    compared: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_tables(F: FODCTables, reference: Mapping, *, mirrored: bool = True) -> TableComparison:
    """Compare against printed tables given as NCPolys/Scalars.

    `reference` has keys "sigma", "chi", "conv", "d", each a map from the
    same keys as the tables; with `mirrored` the computed values are read
    under r -> r^-1 first."""
    A = F.data.algebra
    fix = mirror if mirrored else (lambda p: p)
    out = TableComparison()
    for name in ("sigma", "chi", "conv", "d"):
        mine = getattr(F, name)
        for key, printed in reference.get(name, {}).items():
            out.compared += 1
            got = fix(mine.get(key, NCPoly() if name != "chi" else ZERO))
            if name == "chi":
                same = Scalar.coerce(got) == Scalar.coerce(printed)
            elif name == "conv":
                same = not A.nf(got - printed)
            else:
                same = not normalize_form(got - printed, A)
            if not same:
                out.mismatches[(name,) + tuple(key if isinstance(key, tuple) else (key,))] = (got, printed)
    return out


def format_tables(F: FODCTables) -> list[str]:
    lines = []
    for (om, x), p in F.sigma.items():
        lines.append(f"{om} {x} = {p}")
    for (c, x), v in F.chi.items():
        if v:
            lines.append(f"{c}({x}) = {v}")
    for (c, x), p in F.conv.items():
        if p:
            lines.append(f"{c} * {x} = {p}")
    for x, p in F.d.items():
        lines.append(f"d{x} = {p}")
    return lines
