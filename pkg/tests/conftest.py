import math
import sys
import random

import pytest
from gmpy2 import mpq
from hypothesis import strategies as st

from polarinv.family import FamilySpec, parse_family
from polarinv.poly import Polynomial, VarSet

XY = VarSet(("x", "y"))
XYZ = VarSet(("x", "y", "z"))

FIXTURES = {
    "x+x2y": ("x + x^2*y", ("x", "y")),
    "x+x2y_3var": ("x + x^2*y", ("x", "y", "z")),
    "x+x2yz": ("x + x^2*y*z", ("x", "y", "z")),
    "node": ("x^2 + y^2", ("x", "y")),
    "cusp": ("x^3 + y^2", ("x", "y")),
    "linear": ("x1", ("x1", "x2")),
}


def family(expr, space, mode="fiber", param="t"):
    return parse_family(FamilySpec(expr, tuple(space), param, mode))


@pytest.fixture(params=sorted(FIXTURES))
def fixture_family(request):
    expr, space = FIXTURES[request.param]
    return family(expr, space)


def var(vs, name):
    return Polynomial.variable(vs, name)


@st.composite
def polynomials(draw, vs=XY, max_terms=5, max_deg=3, coeff=5):
    n = len(vs)
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(n))
        c = draw(st.fractions(min_value=-coeff, max_value=coeff, max_denominator=4))
        terms[e] = terms.get(e, 0) + c
    return Polynomial(vs, {e: mpq(c.numerator, c.denominator) for e, c in terms.items()})


def random_polynomial(rng: random.Random, vs: VarSet, max_deg: int, n_terms: int, coeff: int = 4):
    terms = {}
    n = len(vs)
    n_terms = min(n_terms, math.comb(n + max_deg, n))
    while len(terms) < n_terms:
        e = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(n)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            terms[tuple(e)] = c
    return Polynomial(vs, terms)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
