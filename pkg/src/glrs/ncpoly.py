"""Noncommutative polynomials, finitely presented algebras and rewriting.

Words are tuples of letters.  A letter is a generator name, or ``name^-1`` for
the formal inverse of an invertible generator.  Tensor legs use letters of the
form ``name@k`` (see `tensor_presentation`).

Term order: weighted degree, then length, then lexicographic on letter rank.
Each generator is immediately followed by its inverse in the rank, and an
inverse counts with the same weight, so |exponent| enters the degree.
"""

from __future__ import annotations

import enum
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DomainError
from .scalar import ONE, ZERO, Scalar

Word = tuple  # tuple[str, ...]

INV = "^-1"


def inverse_letter(x: str) -> str:
    # the inverse marker stays outside a leg tag: "f@1" <-> "f@1^-1"
    return x[: -len(INV)] if x.endswith(INV) else x + INV


def base_letter(x: str) -> str:
    return x[: -len(INV)] if x.endswith(INV) else x


def is_inverse(x: str) -> bool:
    return x.endswith(INV)


def leg_of(x: str) -> int | None:
    b = base_letter(x)
    if "@" not in b:
        return None
    return int(b.rsplit("@", 1)[1])


def on_leg(x: str, leg: int) -> str:
    b = base_letter(x)
    if "@" in b:
        raise DomainError(f"letter {x!r} already carries a leg")
    y = f"{b}@{leg}"
    return y + INV if is_inverse(x) else y


def off_leg(x: str) -> str:
    b = base_letter(x)
    y = b.rsplit("@", 1)[0]
    return y + INV if is_inverse(x) else y


# ---------------------------------------------------------------------------
# NCPoly


class NCPoly:
    """Finite Scalar-linear combination of words (free algebra element)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self.terms: dict = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def _raw(cls, terms: dict) -> "NCPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def letter(cls, x: str) -> "NCPoly":
        return cls._raw({(x,): ONE})

    @classmethod
    def word(cls, w: Sequence[str], c=ONE) -> "NCPoly":
        c = Scalar.coerce(c)
        return cls._raw({tuple(w): c} if c else {})

    @classmethod
    def const(cls, c) -> "NCPoly":
        return cls.word((), c)

    @staticmethod
    def coerce(x) -> "NCPoly":
        if isinstance(x, NCPoly):
            return x
        return NCPoly.const(Scalar.coerce(x))

    # -- inspection --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def letters(self) -> set[str]:
        return {x for w in self.terms for x in w}

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, w: Sequence[str]) -> Scalar:
        return self.terms.get(tuple(w), ZERO)

    def scalar_part(self) -> Scalar:
        return self.terms.get((), ZERO)

    def is_scalar(self) -> bool:
        return all(not w for w in self.terms)

    def items(self):
        return self.terms.items()

    # -- arithmetic --------------------------------------------------
    def _combine(self, other: "NCPoly", sign: int) -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            v = c if v is None and sign == 1 else (-c if v is None else (v + c if sign == 1 else v - c))
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly._raw(out)

    def __add__(self, other):
        try:
            other = NCPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = NCPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        try:
            other = NCPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NCPoly":
        c = Scalar.coerce(c)
        if not c:
            return NCPoly()
        if c == ONE:
            return self
        return NCPoly._raw({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return NCPoly._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(Scalar.coerce(other).inverse())
        if isinstance(other, NCPoly) and other.is_scalar() and other:
            return self.scale(other.scalar_part().inverse())
        raise DomainError("division by a non-scalar element")

    def __pow__(self, n):
        n = Fraction(n)
        if n.denominator != 1:
            raise DomainError("noncommutative powers must be integers")
        n = int(n)
        base = self
        if n < 0:
            base = self.monomial_inverse()
            n = -n
        out = NCPoly.const(ONE)
        for _ in range(n):
            out = out * base
        return out

    def monomial_inverse(self) -> "NCPoly":
        """Inverse of c*w when every letter of w is invertible (formally)."""
        if len(self.terms) != 1:
            raise DomainError(f"{self} is not invertible")
        (w, c), = self.terms.items()
        if self.is_scalar():
            return NCPoly.const(c.inverse())
        return NCPoly.word(tuple(inverse_letter(x) for x in reversed(w)), c.inverse())

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = NCPoly.const(Scalar.coerce(other))
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- maps -------------------------------------------------------
    def map_letters(self, image: Callable[[str], "NCPoly"], *, reverse: bool = False) -> "NCPoly":
        """Extend a letter map multiplicatively (anti-multiplicatively if `reverse`)."""
        cache: dict = {}
        out = NCPoly()
        for w, c in self.terms.items():
            term = NCPoly.const(c)
            seq = reversed(w) if reverse else w
            for x in seq:
                if x not in cache:
                    cache[x] = NCPoly.coerce(image(x))
                term = term * cache[x]
                if not term:
                    break
            out = out + term
        return out

    def map_coeffs(self, fn: Callable[[Scalar], Scalar]) -> "NCPoly":
        return NCPoly({w: fn(c) for w, c in self.terms.items()})

    def rename(self, fn: Callable[[str], str]) -> "NCPoly":
        out: dict = {}
        for w, c in self.terms.items():
            nw = tuple(fn(x) for x in w)
            v = out.get(nw)
            v = c if v is None else v + c
            if v:
                out[nw] = v
            else:
                out.pop(nw, None)
        return NCPoly._raw(out)

    # -- printing ---------------------------------------------------
    def to_str(self, key: Callable | None = None) -> str:
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=key or _default_key, reverse=True)
        out = []
        for w in words:
            c = self.terms[w]
            s, neg = _term_str(w, c)
            if not out:
                out.append(f"-{s}" if neg else s)
            else:
                out.append(f" - {s}" if neg else f" + {s}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"NCPoly({self.to_str()!r})"


def _default_key(w: Word):
    return (len(w), w)


def word_str(w: Word) -> str:
    if not w:
        return "1"
    if any("@" in x for x in w):
        legs: dict[int, list[str]] = {}
        for x in w:
            legs.setdefault(leg_of(x), []).append(off_leg(x))
        n = max(legs)
        return "@".join(word_str(tuple(legs.get(i, ()))) for i in range(1, n + 1))
    parts = []
    for x, grp in itertools.groupby(w):
        k = len(list(grp))
        b = base_letter(x)
        if is_inverse(x):
            parts.append(f"{b}^-{k}")
        elif k == 1:
            parts.append(b)
        else:
            parts.append(f"{b}^{k}")
    return "*".join(parts)


def _term_str(w: Word, c: Scalar) -> tuple[str, bool]:
    ws = word_str(w)
    neg = False
    cc = c
    if c.is_laurent() and len(c.numerator) == 1:
        (m, v), = c.numerator.items()
        if v < 0:
            neg, cc = True, -c
    if not w:
        cs = str(cc)
        if not cc.is_laurent() or len(cc.numerator) > 1:
            cs = f"({cs})"
        return cs, neg
    if cc == ONE:
        return ws, neg
    cs = str(cc)
    if not cc.is_laurent() or len(cc.numerator) > 1:
        cs = f"({cs})"
    if "@" in ws:
        # coefficient binds to the first leg
        first, rest = ws.split("@", 1)
        return (f"{cs}*{first}@{rest}" if first != "1" else f"{cs}@{rest}"), neg
    return f"{cs}*{ws}", neg


def tensor(parts: Sequence) -> NCPoly:
    """Tensor product of legs: leg k letters are renamed ``x@k``."""
    out = NCPoly.const(ONE)
    for k, p in enumerate(parts, start=1):
        if isinstance(p, NCPoly):
            out = out * p.rename(lambda x, k=k: on_leg(x, k))
        else:
            out = out * Scalar.coerce(p)
    return out


def to_leg(p: NCPoly, leg: int) -> NCPoly:
    return p.rename(lambda x: on_leg(x, leg))


def split_legs(w: Word, n: int) -> tuple[Word, ...]:
    """Per-leg subwords (order inside each leg preserved, leg tags removed)."""
    legs: list[list[str]] = [[] for _ in range(n)]
    for x in w:
        k = leg_of(x)
        if k is None or not 1 <= k <= n:
            raise DomainError(f"letter {x!r} is not on a leg 1..{n}")
        legs[k - 1].append(off_leg(x))
    return tuple(tuple(l) for l in legs)


def join_legs(words: Sequence[Word]) -> Word:
    return tuple(on_leg(x, k) for k, w in enumerate(words, start=1) for x in w)


# ---------------------------------------------------------------------------
# Presentations


@dataclass(frozen=True)
class Generator:
    name: str
    invertible: bool = False
    weight: int = 1

    def __post_init__(self):
        b = self.name.replace("@", "_")
        if not (b.replace("'", "").isidentifier()) or not self.name.isascii():
            raise DomainError(f"invalid generator name {self.name!r}")
        if self.weight < 0:
            raise DomainError("generator weights must be nonnegative")


Rule = tuple  # (lead: Word, replacement: NCPoly)


@dataclass
class Overlap:
    """An ambiguity whose two one-step reductions have different normal forms."""
    word: Word
    rules: tuple[int, int]
    left: NCPoly
    right: NCPoly

    @property
    def difference(self) -> NCPoly:
        return self.left - self.right

    def __str__(self):
        return f"{word_str(self.word)}: {self.left} != {self.right}"


class Presentation:
    """Generators, oriented rewrite rules and a term order.

    `relations` keeps the defining relations as supplied (for counting and for
    algebra-map checks); `rules` are the oriented, mutually reduced rules, and
    cancellation rules g*g^-1 -> 1, g^-1*g -> 1 are always present."""

    def __init__(self, generators: Sequence[Generator], rules: Sequence[Rule], *,
                 relations: Sequence[NCPoly] | None = None, name: str = "",
                 check: bool = True):
        self.name = name
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise DomainError("generator names must be unique")
        self.letters: tuple[str, ...] = tuple(
            x for g in self.generators for x in ((g.name, g.name + INV) if g.invertible else (g.name,)))
        self.rank = {x: i for i, x in enumerate(self.letters)}
        self.weight = {}
        for g in self.generators:
            self.weight[g.name] = g.weight
            if g.invertible:
                self.weight[g.name + INV] = g.weight
        self.rules: tuple[Rule, ...] = tuple((tuple(l), NCPoly.coerce(r)) for l, r in rules)
        cancel = []
        for g in self.generators:
            if g.invertible:
                cancel.append(((g.name, g.name + INV), NCPoly.const(ONE)))
                cancel.append(((g.name + INV, g.name), NCPoly.const(ONE)))
        self.all_rules: tuple[Rule, ...] = self.rules + tuple(cancel)
        self.relations = tuple(relations) if relations is not None else tuple(
            NCPoly.word(l) - r for l, r in self.rules)
        self._by_last: dict[str, list[Rule]] = {}
        for l, r in self.all_rules:
            self._by_last.setdefault(l[-1], []).append((l, r))
        self._memo: dict = {}
        self._amemo: dict = {}
        self._lock = threading.Lock()
        if check:
            self._validate()

    # -- order ------------------------------------------------------
    def key(self, w: Word):
        rk = self.rank
        try:
            return (sum(self.weight[x] for x in w), len(w), tuple(rk[x] for x in w))
        except KeyError as exc:
            raise DomainError(f"unknown generator {exc.args[0]!r} in {self.name or 'presentation'}") from None

    def leading(self, p: NCPoly) -> Word:
        if not p:
            raise DomainError("zero polynomial has no leading word")
        return max(p.terms, key=self.key)

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise DomainError(f"unknown generator {name!r}")

    def check_letters(self, p: NCPoly) -> None:
        for x in p.letters():
            if x not in self.rank:
                raise DomainError(f"unknown generator {x!r} in {self.name or 'presentation'}")

    def _validate(self):
        leads = set()
        for l, r in self.all_rules:
            self.check_letters(NCPoly.word(l))
            self.check_letters(r)
            if l in leads:
                raise DomainError(f"duplicate leading word {word_str(l)}")
            leads.add(l)
            kl = self.key(l)
            for w in r.terms:
                if self.key(w) >= kl:
                    raise DomainError(
                        f"rule {word_str(l)} -> {r} is not decreasing ({word_str(w)} is not smaller)")

    # -- normal form ------------------------------------------------
    def nf(self, p: NCPoly) -> NCPoly:
        """Normal form: no rule's leading word occurs in a surviving word."""
        p = NCPoly.coerce(p)
        self.check_letters(p)
        out: dict = {}
        for w, c in p.terms.items():
            for u, v in self._nf_word(w).items():
                x = out.get(u)
                x = v * c if x is None else x + v * c
                if x:
                    out[u] = x
                else:
                    out.pop(u, None)
        return NCPoly._raw(out)

    def nf_word(self, w: Sequence[str]) -> NCPoly:
        w = tuple(w)
        self.check_letters(NCPoly.word(w))
        return NCPoly._raw(dict(self._nf_word(w)))

    def _nf_word(self, w: Word) -> dict:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        cur: dict = {(): ONE}
        for x in w:
            nxt: dict = {}
            for u, c in cur.items():
                for v, d in self._append(u, x).items():
                    y = nxt.get(v)
                    y = c * d if y is None else y + c * d
                    if y:
                        nxt[v] = y
                    else:
                        nxt.pop(v, None)
            cur = nxt
        with self._lock:
            self._memo[w] = cur
        return cur

    def _append(self, u: Word, x: str) -> dict:
        """Normal form of u*x for u already normal."""
        key = (u, x)
        hit = self._amemo.get(key)
        if hit is not None:
            return hit
        v = u + (x,)
        res = None
        for l, r in self._by_last.get(x, ()):
            n = len(l)
            if n <= len(v) and v[-n:] == l:
                pre = v[:-n]
                res = {}
                for rw, rc in r.terms.items():
                    cur: dict = {pre: ONE}
                    for y in rw:
                        nxt: dict = {}
                        for uu, cc in cur.items():
                            for vv, dd in self._append(uu, y).items():
                                z = nxt.get(vv)
                                z = cc * dd if z is None else z + cc * dd
                                if z:
                                    nxt[vv] = z
                                else:
                                    nxt.pop(vv, None)
                        cur = nxt
                    for vv, dd in cur.items():
                        z = res.get(vv)
                        z = rc * dd if z is None else z + rc * dd
                        if z:
                            res[vv] = z
                        else:
                            res.pop(vv, None)
                break
        if res is None:
            res = {v: ONE}
        with self._lock:
            self._amemo[key] = res
        return res

    def is_normal(self, w: Sequence[str]) -> bool:
        w = tuple(w)
        for l, _ in self.all_rules:
            n = len(l)
            for i in range(len(w) - n + 1):
                if w[i:i + n] == l:
                    return False
        return True

    def is_zero(self, p: NCPoly) -> bool:
        return self.nf(p).is_zero()

    def equal(self, p: NCPoly, q: NCPoly) -> bool:
        return self.nf(NCPoly.coerce(p) - NCPoly.coerce(q)).is_zero()

    def gen(self, name: str) -> NCPoly:
        if name not in self.rank:
            raise DomainError(f"unknown generator {name!r}")
        return NCPoly.letter(name)

    def to_str(self, p: NCPoly) -> str:
        return p.to_str(self.key)

    # -- construction ------------------------------------------------
    @classmethod
    def from_relations(cls, generators: Sequence[Generator], relations: Sequence[NCPoly], *,
                       name: str = "", derive_inverses: bool = True,
                       extra_rules: Sequence[Rule] = ()) -> "Presentation":
        """Orient each relation by its leading word and interreduce.  With
        `derive_inverses`, conjugation rules for formal inverses are added."""
        probe = cls(generators, (), name=name, check=False)
        for r in relations:
            probe.check_letters(r)
        rules = autoreduce(list(relations) + [NCPoly.word(l) - r for l, r in extra_rules],
                           probe.key, probe.all_rules)
        pres = cls(generators, rules, relations=relations, name=name)
        if derive_inverses:
            inv = derive_inverse_rules(pres)
            if inv:
                pres = cls(generators, list(pres.rules) + inv, relations=relations, name=name)
        return pres

    def extended(self, generators: Sequence[Generator] = (), rules: Sequence[Rule] = (), *,
                 relations: Sequence[NCPoly] | None = None, prepend: bool = False,
                 name: str | None = None) -> "Presentation":
        gens = (tuple(generators) + self.generators) if prepend else (self.generators + tuple(generators))
        rels = self.relations if relations is None else tuple(relations)
        return Presentation(gens, list(self.rules) + list(rules), relations=rels,
                            name=self.name if name is None else name)


def orient(p: NCPoly, key) -> Rule:
    lead = max(p.terms, key=key)
    c = p.terms[lead]
    rest = (p - NCPoly.word(lead, c)).scale(-c.inverse())
    return lead, rest


def monic(p: NCPoly, key) -> NCPoly:
    if not p:
        return p
    lead = max(p.terms, key=key)
    return p.scale(p.terms[lead].inverse())


def reduce_naive(p: NCPoly, rules: Sequence[Rule], key) -> NCPoly:
    """Full reduction by repeatedly rewriting the largest reducible word."""
    p = NCPoly.coerce(p)
    while True:
        target = None
        for w in sorted(p.terms, key=key, reverse=True):
            for l, r in rules:
                n = len(l)
                for i in range(len(w) - n + 1):
                    if w[i:i + n] == l:
                        target = (w, i, l, r)
                        break
                if target:
                    break
            if target:
                break
        if target is None:
            return p
        w, i, l, r = target
        c = p.terms[w]
        repl = NCPoly.word(w[:i]) * r * NCPoly.word(w[i + len(l):])
        p = p - NCPoly.word(w, c) + repl.scale(c)


def reduce_traced(p: NCPoly, pres: Presentation) -> tuple[NCPoly, list]:
    """Like `reduce_naive` but records every step as (coeff, left, rule_index, right)
    so that p - result == sum coeff * left * (lead - repl) * right."""
    rules = pres.all_rules
    key = pres.key
    steps = []
    p = NCPoly.coerce(p)
    while True:
        target = None
        for w in sorted(p.terms, key=key, reverse=True):
            for k, (l, r) in enumerate(rules):
                n = len(l)
                for i in range(len(w) - n + 1):
                    if w[i:i + n] == l:
                        target = (w, i, k)
                        break
                if target:
                    break
            if target:
                break
        if target is None:
            return p, steps
        w, i, k = target
        l, r = rules[k]
        c = p.terms[w]
        steps.append((c, w[:i], k, w[i + len(l):]))
        p = p - NCPoly.word(w, c) + (NCPoly.word(w[:i]) * r * NCPoly.word(w[i + len(l):])).scale(c)


def autoreduce(polys: Sequence[NCPoly], key, fixed_rules: Sequence[Rule] = ()) -> list[Rule]:
    """Interreduce a relation list into mutually reduced monic rules."""
    work = [monic(NCPoly.coerce(p), key) for p in polys if p]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            if not work[i]:
                continue
            others = [orient(q, key) for j, q in enumerate(work) if j != i and q] + list(fixed_rules)
            red = monic(reduce_naive(work[i], others, key), key)
            if red != work[i]:
                work[i] = red
                changed = True
        work = [q for q in work if q]
        # duplicates of the same monic poly collapse
        uniq = []
        for q in work:
            if q not in uniq:
                uniq.append(q)
        if len(uniq) != len(work):
            changed = True
        work = uniq
    rules = [orient(q, key) for q in work]
    return sorted(rules, key=lambda lr: key(lr[0]))


def derive_inverse_rules(pres: Presentation) -> list[Rule]:
    """Conjugation rules for formal inverses.

    For an invertible g whose rules g*x -> sum_y c_xy y*g act linearly on a set
    of letters, add g^-1*x -> sum (c^-1)_xy y*g^-1; and for invertible x with
    g*x -> k x*g add g*x^-1 -> k^-1 x^-1*g and g^-1*x^-1 -> k x^-1*g^-1."""
    from .linalg import Matrix

    have = {l for l, _ in pres.all_rules}
    out: list[Rule] = []
    for g in pres.generators:
        if not g.invertible:
            continue
        gi = g.name + INV
        sigma: dict[str, dict[str, Scalar]] = {}
        for l, r in pres.rules:
            if len(l) != 2 or l[0] != g.name or base_letter(l[1]) == g.name:
                continue
            row = {}
            ok = True
            for w, c in r.terms.items():
                if len(w) != 2 or w[1] != g.name:
                    ok = False
                    break
                row[w[0]] = c
            if ok:
                sigma[l[1]] = row
        if not sigma:
            continue
        dom = sorted(set(sigma) | {y for row in sigma.values() for y in row}, key=pres.rank.get)
        if not set(dom) <= set(sigma):
            continue
        M = Matrix([[sigma[x].get(y, ZERO) for y in dom] for x in dom])
        Mi = M.inverse()
        for i, x in enumerate(dom):
            lead = (gi, x)
            if lead in have:
                continue
            repl = NCPoly()
            for j, y in enumerate(dom):
                if Mi[i][j]:
                    repl = repl + NCPoly.word((y, gi), Mi[i][j])
            out.append((lead, repl))
            have.add(lead)
        for x in dom:
            row = sigma[x]
            if not is_inverse(x) and pres.generator(x).invertible and set(row) == {x}:
                k = row[x]
                xi = x + INV
                for lead, repl in (((g.name, xi), NCPoly.word((xi, g.name), k.inverse())),
                                   ((gi, xi), NCPoly.word((xi, gi), k))):
                    if lead not in have and pres.rank[lead[0]] > pres.rank[lead[1]]:
                        out.append((lead, repl))
                        have.add(lead)
    return out


# ---------------------------------------------------------------------------
# Confluence and completion


def _ambiguities(rules: Sequence[Rule], max_degree: int):
    """Yield (word, i, pos_i, j, pos_j) for overlap and inclusion ambiguities."""
    for i, (li, _) in enumerate(rules):
        for j, (lj, _) in enumerate(rules):
            # overlap: suffix of li == prefix of lj
            for k in range(1, min(len(li), len(lj))):
                if li[-k:] == lj[:k]:
                    w = li + lj[k:]
                    if len(w) <= max_degree:
                        yield w, i, 0, j, len(li) - k
            # inclusion of lj strictly inside li
            if i != j and len(lj) <= len(li):
                n = len(lj)
                for p in range(len(li) - n + 1):
                    if li[p:p + n] == lj and len(li) <= max_degree:
                        yield li, i, 0, j, p


def _max_ambiguity_degree(rules: Sequence[Rule]) -> int:
    longest = max((len(l) for l, _ in rules), default=0)
    return max(2 * longest - 1, longest)


def _one_step(w: Word, pos: int, rule: Rule) -> NCPoly:
    l, r = rule
    return NCPoly.word(w[:pos]) * r * NCPoly.word(w[pos + len(l):])


def confluence_check(pres: Presentation, max_degree: int = 4) -> list[Overlap]:
    """Every ambiguity of degree <= max_degree whose two reductions differ."""
    if max_degree < 2:
        raise DomainError("max_degree must be at least 2")
    rules = pres.all_rules
    bad = []
    seen = set()
    for w, i, pi, j, pj in _ambiguities(rules, max_degree):
        if (w, i, pi, j, pj) in seen:
            continue
        seen.add((w, i, pi, j, pj))
        a = pres.nf(_one_step(w, pi, rules[i]))
        b = pres.nf(_one_step(w, pj, rules[j]))
        if a != b:
            bad.append(Overlap(w, (i, j), a, b))
    return bad


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self):
        return self is Verdict.TRUE


@dataclass
class Completion:
    rules: list
    complete: bool  # every ambiguity examined and resolved
    added: int = 0


def complete(generators: Sequence[Generator], relations: Sequence[NCPoly], max_degree: int,
             *, max_rules: int = 400) -> Completion:
    """Bounded Knuth-Bendix style completion of a relation set.

    Ambiguities longer than `max_degree` are not examined; if any exist, the
    result is flagged incomplete."""
    probe = Presentation(generators, (), check=False)
    key = probe.key
    rules = autoreduce(relations, key, probe.all_rules)
    cancel = list(probe.all_rules)
    added = 0
    done: set = set()
    while True:
        allr = rules + cancel
        new = None
        skipped = False
        for w, i, pi, j, pj in _ambiguities(allr, 10 ** 9):
            tag = (allr[i][0], allr[j][0], w, pi, pj)
            if tag in done:
                continue
            if len(w) > max_degree:
                skipped = True
                continue
            a = reduce_naive(_one_step(w, pi, allr[i]), allr, key)
            b = reduce_naive(_one_step(w, pj, allr[j]), allr, key)
            done.add(tag)
            d = a - b
            if d:
                new = d
                break
        if new is None:
            return Completion(rules, not skipped, added)
        added += 1
        rules = autoreduce([NCPoly.word(l) - r for l, r in rules] + [new], key, cancel)
        done = set()
        if len(rules) > max_rules:
            return Completion(rules, False, added)


def _homogeneous(polys: Iterable[NCPoly]) -> bool:
    return all(len({len(w) for w in p.terms}) <= 1 for p in polys)


def ideal_equivalence(pres: Presentation, relations: Sequence[NCPoly], max_degree: int = 4) -> Verdict:
    """Do `relations` and the rules of `pres` generate the same two-sided ideal?

    For homogeneous input the degree-d part of an ideal only depends on
    ambiguities of length <= d, which makes short checks exact."""
    if max_degree < 2:
        raise DomainError("max_degree must be at least 2")
    for r in relations:
        pres.check_letters(r)
    rule_polys = [NCPoly.word(l) - r for l, r in pres.rules]
    homog = _homogeneous(list(relations) + rule_polys) and not any(
        g.invertible for g in pres.generators)
    top = max((p.degree() for p in list(relations) + rule_polys), default=0)
    if homog and top <= max_degree:
        reach = top
    else:
        reach = max(2, _max_ambiguity_degree(pres.all_rules))
    pres_complete = not confluence_check(pres, max(2, reach))
    inconclusive = False
    for r in relations:
        if not pres.is_zero(r):
            if pres_complete:
                return Verdict.FALSE
            inconclusive = True
    comp = complete(pres.generators, relations, reach if homog and top <= max_degree else max_degree)
    certified = comp.complete or (homog and top <= max_degree)
    key = pres.key
    allr = comp.rules + list(Presentation(pres.generators, (), check=False).all_rules)
    for p in rule_polys:
        if reduce_naive(p, allr, key):
            if certified:
                return Verdict.FALSE
            inconclusive = True
    return Verdict.INCONCLUSIVE if inconclusive else Verdict.TRUE


def independent_relations(polys: Iterable[NCPoly], key) -> list[NCPoly]:
    """Reduced row echelon basis of the Scalar span, rows monic, sorted by leading word."""
    rows = [dict(p.terms) for p in polys if p]
    basis: list[tuple[Word, dict]] = []  # (pivot, row)
    for row in rows:
        row = dict(row)
        for piv, b in basis:
            c = row.get(piv)
            if c:
                for w, v in b.items():
                    x = row.get(w, ZERO) - c * v
                    if x:
                        row[w] = x
                    else:
                        row.pop(w, None)
        if not row:
            continue
        piv = max(row, key=key)
        inv = row[piv].inverse()
        row = {w: v * inv for w, v in row.items()}
        # eliminate the new pivot from older rows
        new_basis = []
        for p2, b in basis:
            c = b.get(piv)
            if c:
                b = dict(b)
                for w, v in row.items():
                    x = b.get(w, ZERO) - c * v
                    if x:
                        b[w] = x
                    else:
                        b.pop(w, None)
            new_basis.append((p2, b))
        basis = new_basis + [(piv, row)]
    basis.sort(key=lambda t: key(t[0]))
    return [NCPoly._raw(b) for _, b in basis]


# ---------------------------------------------------------------------------
# Tensor powers and localization


def tensor_presentation(pres: Presentation, n: int) -> Presentation:
    """n-fold tensor power on a leg-tagged alphabet; legs mutually commute."""
    gens = [Generator(f"{g.name}@{k}", g.invertible, g.weight)
            for k in range(1, n + 1) for g in pres.generators]
    rules: list[Rule] = []
    for k in range(1, n + 1):
        for l, r in pres.rules:
            rules.append((tuple(on_leg(x, k) for x in l), to_leg(r, k)))
    letters = pres.letters
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for x in letters:
                for y in letters:
                    xj, yi = on_leg(x, j), on_leg(y, i)
                    rules.append(((xj, yi), NCPoly.word((yi, xj))))
    return Presentation(gens, rules, name=f"{pres.name}^{n}", check=False)


class Localization:
    """A[delta^-1] via a central symbol `e` standing for delta^-1.

    Since e*delta -> 1 is not a confluent rule under the degree order, equality
    is decided by clearing: write x = sum_k e^k x_k, then x = 0 in A[delta^-1]
    iff sum_k delta^(K-k) x_k = 0 in A, A being a domain with delta central."""

    def __init__(self, base: Presentation, delta: NCPoly, symbol: str = "e"):
        base.check_letters(delta)
        self.base = base
        self.delta = delta
        self.symbol = symbol
        self.central_failures = [x for x in base.letters
                                 if not base.is_zero(delta * NCPoly.letter(x) - NCPoly.letter(x) * delta)]
        rules = [((x, symbol), NCPoly.word((symbol, x))) for x in base.letters]
        self.pres = Presentation((Generator(symbol),) + base.generators, list(base.rules) + rules,
                                 relations=base.relations, name=f"{base.name}[{symbol}]")

    @property
    def central(self) -> bool:
        return not self.central_failures

    def inv(self) -> NCPoly:
        return NCPoly.letter(self.symbol)

    def clear(self, p: NCPoly) -> tuple[int, NCPoly]:
        p = self.pres.nf(p)
        parts: dict[int, NCPoly] = {}
        for w, c in p.terms.items():
            k = 0
            while k < len(w) and w[k] == self.symbol:
                k += 1
            if self.symbol in w[k:]:
                raise DomainError("localization symbol not central in normal form")
            parts[k] = parts.get(k, NCPoly()) + NCPoly.word(w[k:], c)
        if not parts:
            return 0, NCPoly()
        K = max(parts)
        total = NCPoly()
        for k, q in parts.items():
            total = total + (self.delta ** (K - k)) * q
        return K, self.base.nf(total)

    def is_zero(self, p: NCPoly) -> bool:
        if not self.central:
            raise DomainError("delta is not central; clearing denominators is invalid")
        return self.clear(p)[1].is_zero()

    def equal(self, p: NCPoly, q: NCPoly) -> bool:
        return self.is_zero(NCPoly.coerce(p) - NCPoly.coerce(q))
