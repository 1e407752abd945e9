"""
Groebner bases, elimination and quotient algebras
=================================================

The invariants above are all built from a small exact algebra kernel.
This script walks through it on textbook examples.
"""

from polarinv import Ideal, MonomialOrder, VarSet, buchberger, eliminate, parse_polynomial, saturate
from polarinv.groebner import quotient_dimension, staircase
from polarinv.linalg import eigenvalue_zero_multiplicity, multiplication_matrix

# The twisted cubic in lex order z > y > x
zyx = VarSet(("z", "y", "x"))
I = buchberger([parse_polynomial("y - x^2", zyx), parse_polynomial("z - x^3", zyx)], MonomialOrder.lex())
print("twisted cubic:", [str(g) for g in I.gb])
print("z*y reduces to", I.normal_form(parse_polynomial("z*y", zyx)))

# Implicitizing the parabola (t, t^2)
txy = VarSet(("t", "x", "y"))
P = Ideal.of([parse_polynomial("x - t", txy), parse_polynomial("y - t^2", txy)])
print("implicit equation:", [str(g) for g in eliminate(P, ["t"]).gb])

# Removing the plane x = 0 from {xy = xz = 0} leaves the line y = z = 0
xyz = VarSet(("x", "y", "z"))
J = Ideal.of([parse_polynomial("x*y", xyz), parse_polynomial("x*z", xyz)])
print("saturation:", [str(g) for g in saturate(J, parse_polynomial("x", xyz)).gb])

# Four points x^2 + y^2 = 1, xy = 0 and a multiplication operator on them
xy = VarSet(("x", "y"))
K = Ideal.of([parse_polynomial("x^2 + y^2 - 1", xy), parse_polynomial("x*y", xy)])
print("dim Q[x,y]/K =", quotient_dimension(K), " staircase:", staircase(K))
M = multiplication_matrix(parse_polynomial("x", xy), K)
print("points with x = 0:", eigenvalue_zero_multiplicity(M))
