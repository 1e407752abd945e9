"""Exact dense matrices over Q and multiplication operators on quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpq, mpz

from .groebner import Ideal, NotZeroDimensional, _Kernel, is_zero_dimensional, krull_dimension, staircase
from .poly import Polynomial, as_rational


class QMatrix:
    """Dense rectangular matrix with ``mpq`` entries."""

    __slots__ = ("rows", "cols", "_a")

    def __init__(self, entries):
        a = [[as_rational(x) for x in row] for row in entries]
        if a and any(len(r) != len(a[0]) for r in a):
            raise ValueError("matrix rows have different lengths")
        self._a = a
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._a[i][j]

    def tolist(self):
        return [list(r) for r in self._a]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self._a == other._a

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other._a)) if other.rows else [()] * other.cols
        out = []
        for row in self._a:
            out.append([sum((x * y for x, y in zip(row, col) if x and y), mpq(0)) for col in cols])
        return QMatrix(out) if out else QMatrix.zeros(0, other.cols)

    def __sub__(self, other):
        return QMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self._a, other._a)])

    def power(self, k: int) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix is not square")
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __repr__(self):
        return f"QMatrix({[[str(x) for x in r] for r in self._a]})"


def _integer_rows(M: QMatrix) -> list[list]:
    rows = []
    for r in M._a:
        den = mpz(1)
        for x in r:
            den = gmpy2.lcm(den, x.denominator)
        rows.append([mpz(x * den) for x in r])
    return rows


def rank(M: QMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = _integer_rows(M)
    nr, nc = M.rows, M.cols
    r = 0
    prev = mpz(1)
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nr):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c, nc):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == nr:
            break
    return r


def kernel_basis(M: QMatrix) -> list[list]:
    """Basis of the right null space, from the reduced row echelon form."""
    a = [list(r) for r in M._a]
    nr, nc = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [mpq(0)] * nc
        v[fc] = mpq(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][fc]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class MultiplicationOperator:
    matrix: QMatrix
    basis: tuple[tuple[int, ...], ...]
    multiplier: Polynomial

    @property
    def dimension(self) -> int:
        return len(self.basis)


def multiplication_matrix(f: Polynomial, I: Ideal) -> MultiplicationOperator:
    """Matrix of multiplication by ``f`` on ``Q[vars]/I`` in the staircase basis.

    Column ``j`` holds the normal form of ``f * basis[j]``.
    """
    if not I.is_unit() and not is_zero_dimensional(I):
        raise NotZeroDimensional(krull_dimension(I))
    basis = tuple(staircase(I))
    index = {m: k for k, m in enumerate(basis)}
    K = _Kernel(I.key)
    fr = I.normal_form(f)._terms
    cols = []
    for m in basis:
        prod = {tuple(a + b for a, b in zip(e, m)): c for e, c in fr.items()}
        nf = K.reduce(prod, I._basis)
        col = [mpq(0)] * len(basis)
        for e, c in nf.items():
            col[index[e]] = c
        cols.append(col)
    n = len(basis)
    mat = QMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    return MultiplicationOperator(mat, basis, f)


def eigenvalue_zero_multiplicity(M) -> int:
    """Algebraic multiplicity of the eigenvalue 0 (``dim - rank(M^dim)``)."""
    A = M.matrix if isinstance(M, MultiplicationOperator) else M
    n = A.rows
    if n != A.cols:
        raise ValueError("matrix is not square")
    if n == 0:
        return 0
    # rank(M^k) is non-increasing and constant from the first k where it stalls
    P = A
    r = rank(P)
    for _ in range(n - 1):
        if r == 0:
            break
        P = P @ A
        r2 = rank(P)
        if r2 == r:
            break
        r = r2
    return n - r
