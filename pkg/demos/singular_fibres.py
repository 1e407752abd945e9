"""
Milnor numbers and Euler characteristics of singular fibres
============================================================

For x^2 + y^2 = t and x^3 + y^2 = t the only singular fibre is the one
over 0. Nothing escapes to infinity, so the jump of the Euler
characteristic at 0 is accounted for by the Milnor number alone.
"""

from polarinv import FamilySpec, gamma_star_profile, milnor_total, parse_family
from polarinv.invariants import euler_characteristic, euler_jump, singular_values

for expr in ("x^2 + y^2", "x^3 + y^2"):
    fam = parse_family(FamilySpec(expr, ("x", "y")))
    profile = gamma_star_profile(fam)

    # singular values come out as a polynomial in t
    print(expr, "- singular values: roots of", singular_values(fam))

    mu = milnor_total(fam, 0)
    chi0 = euler_characteristic(fam, 0, profile=profile)
    chi1 = euler_characteristic(fam, 1, profile=profile)
    print(f"  mu(X_0) = {mu}, gamma* = {profile.generic}, chi(X_0) = {chi0}, chi(X_1) = {chi1}")

    # the jump equals -mu because every defect vanishes
    print("  jump:", euler_jump(fam, 0, profile=profile))
