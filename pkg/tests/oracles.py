"""Random bivariate families and an independent resultant count for the polar number."""

import random

import sympy
from gmpy2 import mpq

from polarinv.groebner import krull_dimension
from polarinv.invariants import apply_generic_coordinates, polar_ideal, random_invertible_matrix

from conftest import XY, family, random_polynomial


def to_sympy(p):
    return sympy.sympify(str(p).replace("^", "**"))


def random_families(seed, count):
    """Fibre families of degree 2..4 with a generic coordinate change applied.

    Yields ``(family, moved family, polar ideal of the moved family, rng)``.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = random_polynomial(rng, XY, rng.randint(2, 4), rng.randint(2, 6))
        if f.total_degree() < 2 or not (f.involves("x") and f.involves("y")):
            continue
        fam = family(str(f), ("x", "y"))
        G = apply_generic_coordinates(fam, random_invertible_matrix(rng, 2))
        while (0, 0, fam.d) not in G.F.terms:  # keep F monic in y up to a constant
            G = apply_generic_coordinates(fam, random_invertible_matrix(rng, 2))
        I = polar_ideal(G)
        if krull_dimension(I) not in (-1, 1):
            continue
        out.append((fam, G, I, rng))
    return out


def resultant_count(G, c):
    """Intersection number of ``F_c = 0`` and ``dF_c/dy = 0``, via a resultant in y.

    Roots where ``dF_c/dx`` also vanishes are dropped. Returns None when
    the leading coefficient in y is not constant, since then the count
    misses points.
    """
    x, y = sympy.symbols("x y")
    Fc = sympy.expand(to_sympy(G.fiber(c)))
    if sympy.Poly(Fc, y).LC().free_symbols:
        return None
    Hc = sympy.diff(Fc, y)
    if Hc == 0:
        return None
    R = sympy.Poly(sympy.resultant(Fc, Hc, y), x)
    if R.is_zero:
        return None
    count = 0
    for q, m in R.factor_list()[1]:
        crit = sympy.groebner([Fc, Hc, sympy.diff(Fc, x), q.as_expr()], x, y, order="grevlex")
        if list(crit.exprs) == [1]:
            count += m * q.degree()
    return count


def sample_c(rng, avoid):
    """A random rational that is not a root of any polynomial in ``avoid``."""
    while True:
        c = mpq(rng.randint(-60, 60), rng.choice((1, 2, 3, 5)))
        if not any(not p.evaluate({p.varset.names[0]: c}) for p in avoid):
            return c
