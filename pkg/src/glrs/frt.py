"""R-matrix machinery: QYBE, RTT relations and coideal checks.

Index convention: R[(i,j),(k,l)] = R^{ij}_{kl}, pairs flattened row-major
(i*N + j).  RTT is read as

    sum_{k,l} R^{ij}_{kl} T^k_m T^l_n = sum_{k,l} T^j_l T^i_k R^{kl}_{mn}

i.e. R T1 T2 = T2 T1 R with T1 = T (x) 1, T2 = 1 (x) T.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .linalg import Matrix, kron
from .ncpoly import Generator, NCPoly, Presentation, independent_relations
from .scalar import ONE, ZERO, Scalar


@dataclass(frozen=True)
class RMatrix:
    """N^2 x N^2 matrix over Scalar, rows and columns indexed by flattened pairs."""
    n: int
    entries: Matrix
    labels: tuple = (0, 1, 2)

    def __post_init__(self):
        if self.entries.n != self.n ** 2 or self.entries.m != self.n ** 2:
            raise DomainError(f"R-matrix must be {self.n ** 2}x{self.n ** 2}")
        if len(self.labels) != self.n:
            raise DomainError("one label per basis vector")

    def idx(self, i: int, j: int) -> int:
        return i * self.n + j

    def __call__(self, i, j, k, l) -> Scalar:
        return self.entries[self.idx(i, j)][self.idx(k, l)]

    @classmethod
    def from_display(cls, display: Sequence[Sequence], index_order: Sequence[tuple[int, int]],
                     *, transpose: bool = False, labels: Sequence = (0, 1, 2)) -> "RMatrix":
        """Load a matrix printed in block order `index_order` (one pair per
        display row/column).  With `transpose`, display rows are lower pairs."""
        n = len(labels)
        order = [tuple(p) for p in index_order]
        if sorted(order) != [(i, j) for i in range(n) for j in range(n)]:
            raise DomainError("index_order must list every pair exactly once")
        if len(display) != n * n or any(len(row) != n * n for row in display):
            raise DomainError(f"display must be {n * n}x{n * n}")
        out = [[ZERO] * (n * n) for _ in range(n * n)]
        for p, (i, j) in enumerate(order):
            for q, (k, l) in enumerate(order):
                x = Scalar.coerce(display[p][q])
                if transpose:
                    out[k * n + l][i * n + j] = x
                else:
                    out[i * n + j][k * n + l] = x
        return cls(n, Matrix(out), tuple(labels))

    def to_display(self, index_order: Sequence[tuple[int, int]], *, transpose: bool = False) -> list[list[Scalar]]:
        order = [tuple(p) for p in index_order]
        rows = []
        for (i, j) in order:
            row = []
            for (k, l) in order:
                row.append(self(k, l, i, j) if transpose else self(i, j, k, l))
            rows.append(row)
        return rows

    def inverse(self) -> "RMatrix":
        return RMatrix(self.n, self.entries.inverse(), self.labels)

    def transpose(self) -> "RMatrix":
        return RMatrix(self.n, self.entries.transpose(), self.labels)

    def flip(self) -> "RMatrix":
        """P R P: exchange the two tensor factors (R_21)."""
        n = self.n
        out = [[self(j, i, l, k) for k in range(n) for l in range(n)] for i in range(n) for j in range(n)]
        return RMatrix(n, Matrix(out), self.labels)

    def scaled(self, c) -> "RMatrix":
        return RMatrix(self.n, self.entries * Scalar.coerce(c), self.labels)

    def map(self, fn) -> "RMatrix":
        return RMatrix(self.n, self.entries.map(fn), self.labels)

    def subs(self, images) -> "RMatrix":
        return self.map(lambda x: x.subs(images))

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(n, Matrix.identity(n * n), tuple(range(n)))


@dataclass(frozen=True)
class TPattern:
    """N x N matrix of generator names, None marking a structural zero."""
    entries: tuple

    def __post_init__(self):
        names = [x for row in self.entries for x in row if x is not None]
        if len(names) != len(set(names)):
            raise DomainError("T-pattern generators must be distinct")
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise DomainError("T-pattern must be square")

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "TPattern":
        return cls(tuple(tuple(None if x in (None, 0, "0") else str(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i, j) -> str | None:
        return self.entries[i][j]

    def poly(self, i, j) -> NCPoly:
        x = self.entries[i][j]
        return NCPoly() if x is None else NCPoly.letter(x)

    def generators(self) -> list[str]:
        return [x for row in self.entries for x in row if x is not None]

    def position(self, name: str) -> tuple[int, int]:
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x == name:
                    return i, j
        raise DomainError(f"{name!r} not in T-pattern")

    def zeros(self) -> set[tuple[int, int]]:
        return {(i, j) for i, row in enumerate(self.entries) for j, x in enumerate(row) if x is None}


def _p23(n: int) -> Matrix:
    """Permutation swapping tensor factors 2 and 3 of V^(x)3."""
    N = n ** 3
    rows = [[ZERO] * N for _ in range(N)]
    for i, j, k in itertools.product(range(n), repeat=3):
        rows[(i * n + k) * n + j][(i * n + j) * n + k] = ONE
    return Matrix(rows)


def qybe_mismatches(R: RMatrix) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Coordinates ((i,j,k),(l,m,n)) where R12 R13 R23 and R23 R13 R12 differ."""
    n = R.n
    I = Matrix.identity(n)
    R12 = kron(R.entries, I)
    R23 = kron(I, R.entries)
    P = _p23(n)
    R13 = P * R12 * P
    lhs = R12 * R13 * R23
    rhs = R23 * R13 * R12
    out = []
    for a in range(n ** 3):
        for b in range(n ** 3):
            if lhs[a][b] != rhs[a][b]:
                out.append(((a // (n * n), (a // n) % n, a % n), (b // (n * n), (b // n) % n, b % n)))
    return out


def qybe_check(R: RMatrix) -> bool:
    return not qybe_mismatches(R)


def rtt_entries(R: RMatrix, T: TPattern) -> dict[tuple[int, int, int, int], NCPoly]:
    """All entries (i,j,m,n) of R T1 T2 - T2 T1 R with structural zeros substituted."""
    n = R.n
    if T.n != n:
        raise DomainError("R-matrix and T-pattern dimensions differ")
    out = {}
    for i, j, m, nn in itertools.product(range(n), repeat=4):
        p = NCPoly()
        for k, l in itertools.product(range(n), repeat=2):
            c = R(i, j, k, l)
            if c:
                p = p + (T.poly(k, m) * T.poly(l, nn)).scale(c)
            c = R(k, l, m, nn)
            if c:
                p = p - (T.poly(j, l) * T.poly(i, k)).scale(c)
        if p:
            out[(i, j, m, nn)] = p
    return out


def rtt_relations(R: RMatrix, T: TPattern, *, order: Sequence[str] | None = None,
                  require_qybe: bool = True) -> list[NCPoly]:
    """Linearly independent RTT relations, each monic in its leading word."""
    if require_qybe and not qybe_check(R):
        raise DomainError("R-matrix does not satisfy the quantum Yang-Baxter equation")
    names = list(order) if order is not None else sorted(T.generators())
    free = Presentation([Generator(x) for x in names], (), check=False)
    return independent_relations(rtt_entries(R, T).values(), free.key)


def coideal_check(n: int, zeroed: set[tuple[int, int]]) -> bool:
    """Is the span of the zeroed entries of an n x n matrix coalgebra a coideal?"""
    return not coideal_witnesses(n, zeroed)


def coideal_witnesses(n: int, zeroed: set[tuple[int, int]]) -> list[tuple[tuple[int, int], tuple[int, int], tuple[int, int]]]:
    """Surviving terms t_ik (x) t_kj of Delta(t_ij), for zeroed (i,j)."""
    zeroed = {tuple(z) for z in zeroed}
    for i, j in zeroed:
        if not (0 <= i < n and 0 <= j < n):
            raise DomainError(f"position {(i, j)} out of bounds")
    bad = []
    for i, j in sorted(zeroed):
        for k in range(n):
            if (i, k) not in zeroed and (k, j) not in zeroed:
                bad.append(((i, j), (i, k), (k, j)))
    return bad
