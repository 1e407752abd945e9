"""
Polar numbers of the family x + x^2 y = t
=========================================

The fibres of f(x, y) = x + x^2 y are all smooth, yet the fibre over 0
looks different from the others: it is a disjoint union of a line and a
punctured line, while every other fibre is a single punctured line. The
difference comes from points of the polar curve escaping to infinity.
"""

from polarinv import FamilySpec, gamma_star_profile, parse_family
from polarinv.invariants import cw_model, euler_jump, verdict, verify_hypothesis

# The family F(t, x, y) = x + x^2 y - t
fam = parse_family(FamilySpec("x + x^2*y", ("x", "y")))
print("family:", fam)

# Singular points must stay isolated and bounded; here there are none at all
print("hypothesis:", verify_hypothesis(fam).diagnostics)

# The profile holds the generic polar numbers and every atypical value
profile = gamma_star_profile(fam, seed=0)
for lv in profile.levels:
    print(f"gamma^{lv.level}: generic {lv.generic}", [a.as_dict() for a in lv.atypical])

# gamma^1 drops from 3 to 2 over t = 0: one polar point is lost to infinity
print("gamma* at 0:", profile.at(0), " defects:", profile.defects(0))

# The cell counts give the Euler characteristics of the fibres
for c in (0, 1):
    rep = cw_model(fam, c, profile=profile)
    print(f"X_{c}: cells {rep.cells}, chi = {rep.chi}")
print("chi(X_u) - chi(X_0) =", euler_jump(fam, 0, profile=profile))

# Equisingularity at infinity fails at 0 and holds at 1
for c in (0, 1):
    v = verdict(fam, c, profile=profile)
    print(f"c = {c}: equisingular at infinity = {v.t_equisingular_at_infinity}, {v.implied}")
