import random

import pytest
import sympy
from gmpy2 import mpq

from polarinv.groebner import (
    Ideal,
    MonomialOrder,
    NotZeroDimensional,
    buchberger,
    eliminate,
    is_zero_dimensional,
    krull_dimension,
    normal_form,
    quotient_dimension,
    s_polynomial_audit,
    saturate,
    staircase,
)
from polarinv.parser import parse_polynomial
from polarinv.poly import Polynomial, VarSet

from conftest import random_polynomial

XY = VarSet(("x", "y"))
XYZ = VarSet(("x", "y", "z"))
ZYX = VarSet(("z", "y", "x"))
TXY = VarSet(("t", "x", "y"))
LEX = MonomialOrder.lex()


def P(text, vs=XY):
    return parse_polynomial(text, vs)


def random_zero_dim(rng, vs, degs):
    while True:
        gens = [random_polynomial(rng, vs, d, rng.randint(2, 4)) for d in degs]
        I = Ideal.of(gens)
        if is_zero_dimensional(I):
            return gens, I


class TestBuchberger:
    def test_twisted_cubic(self):
        I = buchberger([P("y-x^2", ZYX), P("z-x^3", ZYX)], LEX)
        assert set(I.gb) == {P("z-x^3", ZYX), P("y-x^2", ZYX)}
        assert I.normal_form(P("z*y", ZYX)) == P("x^5", ZYX)
        assert I.normal_form(P("z^2-y^3", ZYX)).is_zero()
        assert s_polynomial_audit(I)

    def test_principal(self):
        assert buchberger([P("x-1")]).gb == (P("x-1"),)

    def test_duplicates(self):
        assert buchberger([P("x"), P("x")]).gb == (P("x"),)

    def test_empty_is_zero_ideal(self):
        I = buchberger([], varset=XY)
        assert I.is_zero() and I.gb == ()

    def test_unit(self):
        I = buchberger([P("x*y-1"), P("x")])
        assert I.is_unit() and I.gb == (P("1"),)

    def test_deterministic(self):
        gens = [P("x^2*y-3*x+y^2"), P("x*y^2-x-1")]
        assert [str(g) for g in buchberger(gens).gb] == [str(g) for g in buchberger(list(gens)).gb]

    @pytest.mark.parametrize("order", ["grevlex", "lex"])
    def test_matches_sympy(self, order):
        rng = random.Random(3)
        xs = sympy.symbols("x y z")
        for _ in range(12):
            gens = [random_polynomial(rng, XYZ, 3, rng.randint(2, 4)) for _ in range(rng.randint(2, 3))]
            mine = buchberger(gens, MonomialOrder(order))
            exprs = [sympy.sympify(str(g).replace("^", "**")) for g in gens]
            theirs = sympy.groebner(exprs, *xs, order=order)
            got = sorted(str(sympy.expand(sympy.sympify(str(g).replace("^", "**")))) for g in mine.gb)
            want = sorted(str(sympy.expand(g.as_expr() / sympy.Poly(g, *xs).LC(order=order))) for g in theirs.polys)
            assert got == want


class TestNormalForm:
    def test_single_step(self):
        assert normal_form(P("x^2"), Ideal.of([P("x^2-y")])) == P("y")

    def test_generator(self):
        I = Ideal.of([P("x^2-y"), P("x*y-1")])
        for g in I.generators:
            assert normal_form(g, I).is_zero()

    def test_one(self):
        assert normal_form(P("1"), Ideal.of([P("x^2-y")])) == P("1")

    def test_linear(self):
        rng = random.Random(5)
        for _ in range(30):
            gens = [random_polynomial(rng, XYZ, 2, 3) for _ in range(2)]
            I = Ideal.of(gens)
            p, q = random_polynomial(rng, XYZ, 4, 5), random_polynomial(rng, XYZ, 4, 5)
            a, b = mpq(rng.randint(-5, 5), 3), mpq(rng.randint(-5, 5), 2)
            lhs = I.normal_form(p.scale(a) + q.scale(b))
            assert lhs == I.normal_form(p).scale(a) + I.normal_form(q).scale(b)


class TestElimination:
    def test_parametrization(self):
        E = eliminate(Ideal.of([P("x-t", TXY), P("y-t^2", TXY)]), ["t"])
        assert E.varset == XY
        assert E == Ideal.of([P("y-x^2")])

    def test_untouched(self):
        assert eliminate(Ideal.of([P("x")]), ["y"]) == Ideal.of([P("x", VarSet(("x",)))])

    def test_dominant_projection(self):
        assert eliminate(Ideal.of([P("x*y-1")]), ["y"]).is_zero()


class TestSaturation:
    def test_components(self):
        S = saturate(Ideal.of([P("x*y", XYZ), P("x*z", XYZ)]), P("x", XYZ))
        assert S == Ideal.of([P("y", XYZ), P("z", XYZ)])

    def test_colon_chain(self):
        assert saturate(Ideal.of([P("x^2")]), P("x")).is_unit()

    def test_nonvanishing(self):
        assert saturate(Ideal.of([P("y")]), P("x")) == Ideal.of([P("y")])

    def test_zero_multiplier(self):
        with pytest.raises(ValueError):
            saturate(Ideal.of([P("y")]), Polynomial.zero(XY))

    def test_idempotent_100_random(self):
        rng = random.Random(17)
        for _ in range(100):
            gens = [random_polynomial(rng, XYZ, 3, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
            g = random_polynomial(rng, XYZ, 2, rng.randint(1, 2))
            if g.is_zero():
                continue
            S1 = saturate(Ideal.of(gens), g)
            S2 = saturate(S1, g)
            assert S1 == S2
            assert S1.contains_ideal(Ideal.of(gens))


class TestDimension:
    def test_line(self):
        assert krull_dimension(Ideal.of([P("x", XYZ), P("y", XYZ)])) == 1

    def test_unit(self):
        assert krull_dimension(Ideal.of([P("1")])) == -1

    def test_zero(self):
        assert krull_dimension(Ideal.of([], varset=XY)) == 2

    def test_points(self):
        assert krull_dimension(Ideal.of([P("x^2-1"), P("y")])) == 0


class TestQuotient:
    def test_fat_point(self):
        I = Ideal.of([P("x^2"), P("y")])
        assert quotient_dimension(I) == 2
        assert set(staircase(I)) == {(0, 0), (1, 0)}

    def test_simple_point(self):
        assert quotient_dimension(Ideal.of([P("x-1"), P("y-2")])) == 1

    def test_four_points(self):
        assert quotient_dimension(Ideal.of([P("x^2+y^2-1"), P("x*y")])) == 4

    def test_not_zero_dimensional(self):
        with pytest.raises(NotZeroDimensional) as info:
            quotient_dimension(Ideal.of([P("x*y")]))
        assert info.value.dimension == 1

    def test_staircase_closed_under_division(self):
        rng = random.Random(2)
        for _ in range(10):
            _, I = random_zero_dim(rng, XY, (3, 2))
            st = set(staircase(I))
            for m in st:
                for i in range(2):
                    if m[i]:
                        d = list(m)
                        d[i] -= 1
                        assert tuple(d) in st

    def test_order_independent_50_random(self):
        rng = random.Random(23)
        for k in range(50):
            vs = XY if k % 2 else XYZ
            degs = (2, 3) if k % 2 else (2, 2, 2)
            gens, I = random_zero_dim(rng, vs, degs)
            assert quotient_dimension(I) == quotient_dimension(I.with_order(LEX))

    def test_bezout_bound(self):
        rng = random.Random(29)
        for _ in range(30):
            gens, I = random_zero_dim(rng, XY, (rng.randint(1, 3), rng.randint(1, 3)))
            bound = 1
            for g in gens:
                bound *= g.total_degree()
            assert quotient_dimension(I) <= bound


def test_every_basis_passes_audit():
    rng = random.Random(31)
    for _ in range(40):
        gens = [random_polynomial(rng, XYZ, 3, rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        for order in (MonomialOrder.grevlex(), LEX, MonomialOrder.elimination(["x"]),
                      MonomialOrder.weighted({"y": 1, "z": 1})):
            assert s_polynomial_audit(buchberger(gens, order))
