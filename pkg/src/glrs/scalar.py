"""Exact rational functions in named parameters with half-integer Laurent exponents.

A Scalar is a quotient num/den of Laurent polynomials.  Monomials are stored as
sorted tuples of ``(name, twice_the_exponent)`` so that r^(1/2) is ``(("r", 1),)``.
The stored form is canonical:

* common polynomial factors of num and den are cancelled,
* a monomial denominator is folded into the numerator (den == 1),
* otherwise den has minimal exponent 0 in every variable and its leading
  monomial (lexicographic on the sorted variable list) has coefficient 1.

Two Scalars are equal iff their canonical forms are identical.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Mapping, Union

from .errors import DomainError, EvaluationError

Mono = tuple  # tuple[tuple[str, int], ...], exponents doubled
Poly = dict  # dict[Mono, Fraction]

Number = Union[int, Fraction]

_ONE_MONO: Mono = ()


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for k, e in m2:
        v = d.get(k, 0) + e
        if v:
            d[k] = v
        else:
            d.pop(k, None)
    return tuple(sorted(d.items()))


def _mono_inv(m: Mono) -> Mono:
    return tuple((k, -e) for k, e in m)


def _poly_add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _poly_mul(p: Poly, q: Poly) -> Poly:
    if len(p) == 1 and _ONE_MONO in p:
        c = p[_ONE_MONO]
        return {m: c * v for m, v in q.items()} if c != 1 else dict(q)
    if len(q) == 1 and _ONE_MONO in q:
        c = q[_ONE_MONO]
        return {m: c * v for m, v in p.items()} if c != 1 else dict(p)
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _poly_scale(p: Poly, c: Fraction, m: Mono = _ONE_MONO) -> Poly:
    return {_mono_mul(k, m): v * c for k, v in p.items()}


def _variables(*polys: Poly) -> tuple[str, ...]:
    names = set()
    for p in polys:
        for m in p:
            names.update(k for k, _ in m)
    return tuple(sorted(names))


@lru_cache(maxsize=64)
def _ring(names: tuple[str, ...]):
    from sympy import QQ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(f"_{n}" for n in names), QQ)
    return R


def _to_sympy(R, p: Poly, names, shift):
    from sympy import QQ

    idx = {n: i for i, n in enumerate(names)}
    data = {}
    for m, c in p.items():
        ex = [-s for s in shift]
        for k, e in m:
            ex[idx[k]] += e
        data[tuple(ex)] = QQ(c.numerator, c.denominator)
    return R.from_dict(data)


def _from_sympy(P, names) -> Poly:
    out: Poly = {}
    for ex, c in P.items():
        m = tuple((names[i], e) for i, e in enumerate(ex) if e)
        out[m] = Fraction(int(c.numerator), int(c.denominator))
    return out


def _lead(p: Poly, names) -> Mono:
    def key(m):
        d = dict(m)
        return tuple(d.get(n, 0) for n in names)

    return max(p, key=key)


def _canonical(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise DomainError("division by zero Scalar")
    if not num:
        return {}, {_ONE_MONO: Fraction(1)}
    if len(den) == 1:
        (m, c), = den.items()
        return _poly_scale(num, 1 / c, _mono_inv(m)), {_ONE_MONO: Fraction(1)}
    names = _variables(num, den)
    mins = []
    for n in names:
        lo = 0
        for p in (num, den):
            for m in p:
                lo = min(lo, dict(m).get(n, 0))
        mins.append(lo)
    R = _ring(names)
    P = _to_sympy(R, num, names, mins)
    Q = _to_sympy(R, den, names, mins)
    g = P.gcd(Q)
    if g != 1:
        P = P.exquo(g)
        Q = Q.exquo(g)
    num = _from_sympy(P, names)
    den = _from_sympy(Q, names)
    # re-apply the Laurent shift, then normalize the denominator
    shift = tuple((n, lo) for n, lo in zip(names, mins) if lo)
    num = _poly_scale(num, Fraction(1), shift)
    den = _poly_scale(den, Fraction(1), shift)
    if len(den) == 1:
        (m, c), = den.items()
        return _poly_scale(num, 1 / c, _mono_inv(m)), {_ONE_MONO: Fraction(1)}
    dmins = tuple((n, min(dict(m).get(n, 0) for m in den)) for n in names)
    dmins = tuple((n, lo) for n, lo in dmins if lo)
    inv = _mono_inv(dmins)
    num = _poly_scale(num, Fraction(1), inv)
    den = _poly_scale(den, Fraction(1), inv)
    lc = den[_lead(den, names)]
    if lc != 1:
        num = _poly_scale(num, 1 / lc)
        den = _poly_scale(den, 1 / lc)
    return num, den


def _frozen(p: Poly) -> tuple:
    return tuple(sorted(p.items()))


class Scalar:
    """Immutable exact rational function.  Build with `Scalar.param`, `Scalar.const`
    or the expression parser, and combine with ordinary operators."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Poly | None = None, den: Poly | None = None, *, _canon: bool = False):
        num = {} if num is None else {m: Fraction(c) for m, c in num.items() if c}
        den = {_ONE_MONO: Fraction(1)} if den is None else {m: Fraction(c) for m, c in den.items() if c}
        if not _canon:
            num, den = _canonical(num, den)
        self._num = _frozen(num)
        self._den = _frozen(den)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, value: Number) -> "Scalar":
        value = Fraction(value)
        return cls({_ONE_MONO: value} if value else {}, _canon=True)

    @classmethod
    def param(cls, name: str, exponent: Number = 1) -> "Scalar":
        if not name.isidentifier() or not name.isascii():
            raise DomainError(f"invalid parameter name {name!r}")
        e2 = Fraction(exponent) * 2
        if e2.denominator != 1:
            raise DomainError(f"exponent {exponent} is not a half-integer")
        e2 = int(e2)
        return cls({((name, e2),) if e2 else (): Fraction(1)}, _canon=True)

    @classmethod
    def monomial(cls, exponents: Mapping[str, Number], coeff: Number = 1) -> "Scalar":
        m = []
        for k, e in sorted(exponents.items()):
            e2 = Fraction(e) * 2
            if e2.denominator != 1:
                raise DomainError(f"exponent {e} is not a half-integer")
            if e2:
                m.append((k, int(e2)))
        return cls({tuple(m): Fraction(coeff)} if coeff else {}, _canon=True)

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # -- accessors ----------------------------------------------------
    @property
    def numerator(self) -> dict:
        return dict(self._num)

    @property
    def denominator(self) -> dict:
        return dict(self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_laurent(self) -> bool:
        return self._den == ((_ONE_MONO, Fraction(1)),)

    def is_monomial(self) -> bool:
        """True for c * (product of parameter powers) with c != 0."""
        return self.is_laurent() and len(self._num) == 1

    def monomial_exponents(self) -> tuple[Fraction, dict[str, Fraction]]:
        if not self.is_monomial():
            raise DomainError(f"{self} is not a monomial")
        (m, c), = self._num
        return c, {k: Fraction(e, 2) for k, e in m}

    def params(self) -> set[str]:
        names = set()
        for p in (self._num, self._den):
            for m, _ in p:
                names.update(k for k, _ in m)
        return names

    def as_fraction(self) -> Fraction | None:
        """The rational value if the Scalar is constant, else None."""
        if not self._num:
            return Fraction(0)
        if self.is_laurent() and len(self._num) == 1 and self._num[0][0] == _ONE_MONO:
            return self._num[0][1]
        return None

    # -- arithmetic ---------------------------------------------------
    def _parts(self):
        return dict(self._num), dict(self._den)

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other._addsub(self, -1)

    def _addsub(self, other: "Scalar", sign: int) -> "Scalar":
        if not other._num:
            return self
        if not self._num:
            return other if sign == 1 else -other
        a, b = self._parts()
        c, d = other._parts()
        if self._den == other._den:
            num = _poly_add(a, c, sign)
            if self.is_laurent():
                return Scalar(num, _canon=True)
            return Scalar(num, b)
        num = _poly_add(_poly_mul(a, d), _poly_mul(c, b), sign)
        return Scalar(num, _poly_mul(b, d))

    def __neg__(self):
        return Scalar({m: -c for m, c in self._num}, dict(self._den), _canon=True)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        a, b = self._parts()
        c, d = other._parts()
        if self.is_laurent() and other.is_laurent():
            return Scalar(_poly_mul(a, c), _canon=True)
        return Scalar(_poly_mul(a, c), _poly_mul(b, d))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self._num:
            raise DomainError("division by zero Scalar")
        a, b = self._parts()
        return Scalar(b, a)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        n = Fraction(n)
        if n.denominator == 1:
            k = int(n)
            base = self if k >= 0 else self.inverse()
            out = ONE
            for _ in range(abs(k)):
                out = out * base
            return out
        if n.denominator == 2:
            # only monomials with a square coefficient have half powers here
            if not self.is_monomial():
                raise DomainError(f"half-integer power of non-monomial {self}")
            c, ex = self.monomial_exponents()
            k = int(n * 2)
            root = _rational_sqrt(c if k > 0 else 1 / c)
            if root is None:
                raise DomainError(f"coefficient {c} has no rational square root")
            return Scalar.monomial({v: e * n for v, e in ex.items()}, root ** abs(k))
        raise DomainError(f"exponent {n} is not a half-integer")

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    # -- evaluation / substitution -----------------------------------
    def evaluate(self, point: Mapping[str, Number]) -> Fraction:
        """Exact value at a rational point; half exponents need perfect squares."""
        num = _eval_poly(dict(self._num), point)
        den = _eval_poly(dict(self._den), point)
        if den == 0:
            raise EvaluationError(f"denominator of {self} vanishes at {dict(point)}")
        return num / den

    def subs(self, images: Mapping[str, "Scalar"]) -> "Scalar":
        """Substitute parameters.  An image must be a monomial with coefficient 1
        unless the parameter only occurs with integer exponents."""
        def sub_poly(p: Poly) -> Scalar:
            out = ZERO
            for m, c in p.items():
                term = Scalar.const(c)
                for k, e2 in m:
                    if k in images:
                        img = Scalar.coerce(images[k])
                        term = term * (img ** Fraction(e2, 2))
                    else:
                        term = term * Scalar.param(k, Fraction(e2, 2))
                out = out + term
            return out

        return sub_poly(dict(self._num)) / sub_poly(dict(self._den))

    # -- printing -----------------------------------------------------
    def __str__(self):
        num = _poly_str(dict(self._num))
        if self.is_laurent():
            return num
        return f"({num})/({_poly_str(dict(self._den))})"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _eval_poly(p: Poly, point: Mapping[str, Number]) -> Fraction:
    total = Fraction(0)
    for m, c in p.items():
        v = Fraction(c)
        for k, e2 in m:
            if k not in point:
                raise EvaluationError(f"no value for parameter {k}")
            x = Fraction(point[k])
            if e2 % 2:
                root = _rational_sqrt(x)
                if root is None:
                    raise EvaluationError(f"{k}={x} is not the square of a rational (needed for {k}^({e2}/2))")
                x, e = root, e2
            else:
                e = e2 // 2
            if e < 0 and x == 0:
                raise EvaluationError(f"{k}=0 where {k} is inverted")
            v *= x ** e
        total += v
    return total


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_mono(m: Mono) -> str:
    parts = []
    for k, e2 in m:
        if e2 % 2:
            parts.append(f"{k}^({e2}/2)")
        elif e2 == 2:
            parts.append(k)
        else:
            parts.append(f"{k}^{e2 // 2}")
    return "*".join(parts)


def _mono_key(m: Mono):
    # higher total degree first, then lexicographic on (name, exponent)
    return (-sum(e for _, e in m), tuple((k, -e) for k, e in m))


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for m in sorted(p, key=_mono_key):
        c = p[m]
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = _fmt_coeff(a)
        elif a == 1:
            body = _fmt_mono(m)
        else:
            body = f"{_fmt_coeff(a)}*{_fmt_mono(m)}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


ZERO = Scalar.const(0)
ONE = Scalar.const(1)


def lam(name: str = "r") -> Scalar:
    """lambda = r - r^-1."""
    r = Scalar.param(name)
    return r - r.inverse()


def sum_scalars(xs: Iterable[Scalar]) -> Scalar:
    out = ZERO
    for x in xs:
        out = out + x
    return out


def parse_scalar(text: str, params: Iterable[str] | None = None) -> Scalar:
    """Parse an expression in the scalar grammar.  With `params`, any other name
    is rejected as undeclared."""
    from .errors import ParseError
    from .parser import evaluate, parse

    allowed = None if params is None else set(params)

    def resolve(name, offset):
        if allowed is not None and name not in allowed:
            raise ParseError(f"undeclared symbol {name!r}", column=offset + 1)
        if not name.isascii() or "'" in name:
            raise ParseError(f"invalid parameter name {name!r}", column=offset + 1)
        return Scalar.param(name)

    try:
        return evaluate(parse(text), resolve, Scalar.const)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
