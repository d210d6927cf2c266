"""Dense matrices over Scalar with exact inversion (Gauss-Jordan)."""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError
from .scalar import ONE, ZERO, Scalar


class Matrix:
    __slots__ = ("rows", "n", "m")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Scalar.coerce(x) for x in row] for row in rows]
        self.n = len(self.rows)
        self.m = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.m for r in self.rows):
            raise DomainError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = Scalar.coerce(other)
            return Matrix([[x * c for x in row] for row in self.rows])
        if self.m != other.n:
            raise DomainError("dimension mismatch in matrix product")
        out = [[ZERO] * other.m for _ in range(self.n)]
        ocols = [[(j, x) for j, x in enumerate(row) if x] for row in other.rows]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in ocols[k]:
                    acc[j] = acc[j] + a * b
        return Matrix(out)

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.rows)])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def inverse(self) -> "Matrix":
        if self.n != self.m:
            raise DomainError("only square matrices are invertible")
        n = self.n
        a = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise DomainError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    c = a[r][col]
                    a[r] = [x - c * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.n)

    def nonzero(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x:
                    yield i, j, x

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows) + "])"


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = [[ZERO] * (a.m * b.m) for _ in range(a.n * b.n)]
    for i, j, x in a.nonzero():
        for k, l, y in b.nonzero():
            out[i * b.n + k][j * b.m + l] = x * y
    return Matrix(out)


def left_kernel(vectors: Sequence) -> list[list[Scalar]]:
    """Basis of {c : sum_i c_i v_i = 0} for vectors given as NCPolys (or any
    objects with a `terms` dict), in reduced echelon form."""
    n = len(vectors)
    rows = []
    for i, v in enumerate(vectors):
        coords = dict(v.terms)
        track = [ONE if j == i else ZERO for j in range(n)]
        rows.append((coords, track))
    reduced = []  # (pivot key, coords, track)
    kernel = []
    for coords, track in rows:
        for piv, pc, pt in reduced:
            c = coords.get(piv)
            if c:
                coords = _axpy(coords, pc, -c)
                track = [a - c * b for a, b in zip(track, pt)]
        if coords:
            piv = min(coords)
            inv = coords[piv].inverse()
            coords = {k: x * inv for k, x in coords.items()}
            track = [x * inv for x in track]
            for k, (p2, c2, t2) in enumerate(reduced):
                c = c2.get(piv)
                if c:
                    reduced[k] = (p2, _axpy(c2, coords, -c), [a - c * b for a, b in zip(t2, track)])
            reduced.append((piv, coords, track))
        else:
            kernel.append(track)
    return _rref(kernel, n)


def _axpy(x: dict, y: dict, c: Scalar) -> dict:
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, ZERO) + c * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _rref(vecs: list[list[Scalar]], n: int) -> list[list[Scalar]]:
    rows = [list(v) for v in vecs]
    out = []
    for col in reversed(range(n)):
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            continue
        rows.remove(piv)
        inv = piv[col].inverse()
        piv = [x * inv for x in piv]
        rows = [[a - r[col] * b for a, b in zip(r, piv)] if r[col] else r for r in rows]
        out = [[a - o[col] * b for a, b in zip(o, piv)] if o[col] else o for o in out]
        out.append(piv)
    return out
