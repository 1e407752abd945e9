import random

import pytest
from gmpy2 import mpq

from polarinv.groebner import Ideal, NotZeroDimensional, is_zero_dimensional, quotient_dimension
from polarinv.linalg import (
    QMatrix,
    eigenvalue_zero_multiplicity,
    kernel_basis,
    multiplication_matrix,
    rank,
)
from polarinv.parser import parse_polynomial
from polarinv.groebner import MonomialOrder
from polarinv.invariants import irreducible_factors
from polarinv.poly import VarSet

from conftest import random_polynomial

X = VarSet(("x",))
XY = VarSet(("x", "y"))


def P(text, vs=XY):
    return parse_polynomial(text, vs)


def test_nilpotent_multiplication():
    M = multiplication_matrix(P("x", X), Ideal.of([P("x^2", X)]))
    assert M.basis == ((0,), (1,))
    assert M.matrix == QMatrix([[0, 0], [1, 0]])


def test_multiplication_by_one():
    I = Ideal.of([P("x^2+y^2-1"), P("x*y")])
    M = multiplication_matrix(P("1"), I)
    assert M.matrix == QMatrix.identity(4)


def test_multiplication_simple_point():
    M = multiplication_matrix(P("x", X), Ideal.of([P("x-3", X)]))
    assert M.matrix == QMatrix([[3]])


def test_not_zero_dimensional():
    with pytest.raises(NotZeroDimensional):
        multiplication_matrix(P("x"), Ideal.of([P("x*y")]))


@pytest.mark.parametrize("rows,expected", [
    (QMatrix.identity(3).tolist(), 3),
    ([[0, 0], [0, 0]], 0),
    ([[1, 2], [2, 4]], 1),
    ([[mpq(1, 2), 1, 3], [1, 2, 6], [0, 1, 1]], 2),
])
def test_rank(rows, expected):
    assert rank(QMatrix(rows)) == expected


def test_eigenvalue_zero_examples():
    J = Ideal.of([P("2*x"), P("2*y")])
    f = P("x^2+y^2")
    assert eigenvalue_zero_multiplicity(multiplication_matrix(f - 1, J)) == 0
    assert eigenvalue_zero_multiplicity(multiplication_matrix(f, J)) == 1
    assert eigenvalue_zero_multiplicity(QMatrix([[0, 0], [1, 0]])) == 2


def random_zero_dim(rng):
    while True:
        I = Ideal.of([random_polynomial(rng, XY, 3, 3), random_polynomial(rng, XY, 2, 3)])
        if is_zero_dimensional(I):
            return I


def test_operators_commute():
    rng = random.Random(1)
    for _ in range(15):
        I = random_zero_dim(rng)
        A = multiplication_matrix(random_polynomial(rng, XY, 2, 3), I).matrix
        B = multiplication_matrix(random_polynomial(rng, XY, 2, 3), I).matrix
        assert A @ B == B @ A


def test_rank_nullity():
    rng = random.Random(4)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        base = [[mpq(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(c)] for _ in range(min(r, 2))]
        rows = [[sum(rng.randint(-2, 2) * b[j] for b in base) for j in range(c)] for _ in range(r)]
        M = QMatrix(rows)
        K = kernel_basis(M)
        assert rank(M) + len(K) == c
        for v in K:
            assert all(sum(M[i, j] * v[j] for j in range(c)) == 0 for i in range(r))


def test_eigenvalue_multiplicities_partition_dimension():
    """Splitting V(I) by the x-coordinate: local counts add up to dim Q[x,y]/I."""
    rng = random.Random(8)
    checked = 0
    while checked < 15:
        I = random_zero_dim(rng)
        elim = [g for g in I.with_order(MonomialOrder.lex()).gb if not g.involves("x")]
        (h,) = elim
        yv = VarSet(("y",))
        factors = irreducible_factors(h.restrict(yv))
        total = 0
        for p in factors:
            total += eigenvalue_zero_multiplicity(multiplication_matrix(p.restrict(XY), I))
        assert total == quotient_dimension(I)
        checked += 1
