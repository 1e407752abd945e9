"""Global polar invariants of a one-parameter family of affine hypersurfaces.

For a family ``F(tau, x)`` the polar curve of a generic linear form ``l``
and the parameter ``t`` is cut out by ``F = dF/dx_2 = ... = dF/dx_n = 0``
(generic coordinates, ``x_1 = l``) with the components inside
``dF/dx_1 = 0`` removed. Its intersection number with a fibre ``X_c`` is
``gamma^{n-1}_c``; slicing with generic hyperplanes gives the lower levels
and ``gamma^0_c`` is the degree of the fibre. The values are constant
outside the finite set of parameter values over which the polar curve
reaches the hyperplane at infinity, and the drops there are the defects.

All counts are vector-space dimensions of zero-dimensional quotient
algebras; atypical values are carried as irreducible polynomials over Q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import sympy
from gmpy2 import mpq

from .family import DegenerateFamily, Family
from .groebner import (
    Ideal,
    MonomialOrder,
    NotZeroDimensional,
    eliminate,
    is_zero_dimensional,
    krull_dimension,
    quotient_dimension,
    saturate,
)
from .linalg import QMatrix, eigenvalue_zero_multiplicity, multiplication_matrix, rank
from .poly import Polynomial, VarSet, as_rational, format_polynomial, format_rational, gcd, squarefree_part

MATRIX_ENTRIES = (-3, -2, -1, 1, 2, 3)
SLICE_CONSTANTS = (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5)
DEFAULT_RETRIES = 8
MAX_CHOICES = 5

TRIVIAL_AT_INFINITY = "C-infinity-trivial-at-infinity"
TRIVIAL = "C-infinity-trivial"
TOPOLOGICALLY_TRIVIAL_AT_INFINITY = "topologically-trivial-at-infinity"
NOT_TOPOLOGICALLY_TRIVIAL_AT_INFINITY = "not-topologically-trivial-at-infinity"


class RetriesExhausted(RuntimeError):
    pass


class NonIsolatedSingularities(ValueError):
    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(f"fibre has non-isolated singularities (critical locus of dimension {dimension})")


class NegativeTopCellCount(ArithmeticError):
    pass


class HypothesisFailed(ValueError):
    def __init__(self, report: "HypothesisReport"):
        self.report = report
        super().__init__("; ".join(report.diagnostics) or "hypothesis failed")


class InvariantViolation(ArithmeticError):
    pass


# -- univariate polynomials in the parameter ---------------------------------


def irreducible_factors(p: Polynomial) -> list[Polynomial]:
    """Distinct monic irreducible factors over Q of a univariate polynomial."""
    if p.is_constant():
        return []
    (name,) = p.variables()
    coeffs = p.univariate_coefficients()
    sp = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)],
                    sympy.Symbol(name), domain="QQ")
    _, factors = sp.factor_list()
    out = []
    idx = p.varset.index(name)
    for f, _ in factors:
        terms = {}
        for (k,), c in f.monic().terms():
            e = [0] * len(p.varset)
            e[idx] = k
            terms[tuple(e)] = mpq(int(c.p), int(c.q))
        out.append(Polynomial(p.varset, terms))
    return sort_params(out)


def sort_params(polys):
    def key(p):
        return (p.total_degree(), [(-sum(e), str(c)) for e, c in p.items()])

    return sorted(polys, key=key)


def _lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    return (a * b).exact_div(gcd(a, b)).monic()


def _has_root(p: Polynomial, c) -> bool:
    return not p.evaluate({p.varset.names[0]: c})


def _param_poly_in(fam_vs: VarSet, p: Polynomial) -> Polynomial:
    return p.restrict(fam_vs)


# -- generic choices ------------------------------------------------------------


@dataclass(frozen=True)
class LevelChoice:
    level: int
    attempt: int
    matrix: tuple[tuple[int, ...], ...]
    hyperplane: tuple[tuple[int, ...], int] | None = None  # (coefficients, constant)


@dataclass(frozen=True)
class GenericChoice:
    """Seeded generic data: one coordinate change (and slice) per level."""

    seed: int
    chain: int = 0
    levels: tuple[LevelChoice, ...] = ()

    def rng(self, level: int, attempt: int) -> random.Random:
        return random.Random(f"polarinv:{self.seed}:{self.chain}:{level}:{attempt}")


def random_invertible_matrix(rng: random.Random, n: int) -> tuple[tuple[int, ...], ...]:
    while True:
        m = tuple(tuple(rng.choice(MATRIX_ENTRIES) for _ in range(n)) for _ in range(n))
        if rank(QMatrix(m)) == n:
            return m


def apply_generic_coordinates(fam: Family, matrix) -> Family:
    """Substitute ``x_i -> sum_j matrix[j][i] * x_j``; ``x_1`` becomes the generic form."""
    names = fam.space
    n = len(names)
    if len(matrix) != n or any(len(r) != n for r in matrix):
        raise ValueError("matrix size does not match the number of space variables")
    if rank(QMatrix(matrix)) != n:
        raise ValueError("coordinate change is singular")
    vs = fam.varset
    xs = [fam.var(v) for v in names]
    images = {}
    for i, v in enumerate(names):
        form = Polynomial.zero(vs)
        for j in range(n):
            if matrix[j][i]:
                form = form + xs[j].scale(matrix[j][i])
        images[v] = form
    return Family(fam.F.substitute(images, vs), fam.spec)


def slice_family(fam: Family, coeffs, constant) -> Family:
    """Intersect with ``x_n = sum a_j x_j + b`` (``j < n``)."""
    if fam.n < 2:
        raise ValueError("slicing needs at least two space variables")
    last = fam.space[-1]
    target = fam.varset.without([last])
    form = Polynomial.constant(target, constant)
    for a, v in zip(coeffs, fam.space[:-1]):
        form = form + Polynomial.variable(target, v).scale(a)
    G = fam.F.substitute_linear({last: form})
    return Family(G, fam.spec)


# -- polar curve --------------------------------------------------------------


def polar_ideal(fam: Family) -> Ideal:
    """Ideal of the polar curve of ``(x_1, t)`` on ``X`` (coordinates assumed generic)."""
    F = fam.F
    first, rest = fam.space[0], fam.space[1:]
    gens = [F] + [F.partial_derivative(v) for v in rest]
    return saturate(Ideal.of(gens), F.partial_derivative(first))


def _param_eq(fam: Family, c) -> Polynomial:
    return fam.var(fam.param) - as_rational(c)


def check_polar_genericity(fam: Family, I_polar: Ideal, c) -> bool:
    dim = krull_dimension(I_polar)
    if dim not in (-1, 1):
        return False
    if dim == -1:
        return True
    J = I_polar + _param_eq(fam, c)
    return J.is_unit() or is_zero_dimensional(J)


def gamma_top(fam: Family, I_polar: Ideal, c) -> int:
    """Intersection number of the polar curve with the fibre over ``c``."""
    if I_polar.is_unit():
        return 0
    J = I_polar + _param_eq(fam, c)
    if J.is_unit():
        return 0
    if not is_zero_dimensional(J):
        raise NotZeroDimensional(krull_dimension(J))
    return quotient_dimension(J)


def gamma_at_algebraic(fam: Family, I_polar: Ideal, p: Polynomial) -> tuple[int, int]:
    """``(sum over the roots of p, value per root)`` of the top polar number."""
    deg = p.total_degree()
    if I_polar.is_unit():
        return 0, 0
    J = I_polar + _param_poly_in(fam.varset, p)
    if J.is_unit():
        return 0, 0
    if not is_zero_dimensional(J):
        raise NotZeroDimensional(krull_dimension(J))
    total = quotient_dimension(J)
    if total % deg:
        raise NotZeroDimensional(0, f"value sum {total} is not divisible by deg {deg}")
    return total, total // deg


def space_graded_basis(I: Ideal, space) -> Ideal:
    return I.with_order(MonomialOrder.weighted({v: 1 for v in space}))


def infinity_image(fam: Family, I: Ideal) -> Polynomial | None:
    """Generator of the parameter image of ``closure(V(I))`` at infinity.

    Returns ``None`` when the closure does not reach infinity and raises
    ``ValueError`` when the image is not a finite set.
    """
    space = fam.space
    G = space_graded_basis(I, space)
    forms = [g.space_leading_form() for g in G.gb]
    pvs = _param_vs_from(fam.varset)
    total = None
    for v in space:
        one = {v: Polynomial.constant(fam.varset.without([v]), 1)}
        chart = [f.substitute(one) for f in forms]
        chart = [f for f in chart if f]
        sub_vs = fam.varset.without([v])
        drop = [w for w in space if w != v]
        if not chart:
            raise ValueError("closure meets infinity over every parameter value")
        E = eliminate(Ideal.of(chart, varset=sub_vs), drop)
        if E.is_unit():
            continue
        gens = [g.restrict(pvs) for g in E.gb]
        if not gens:
            raise ValueError("closure meets infinity over every parameter value")
        h = gens[0]
        for g in gens[1:]:
            h = gcd(h, g)
        total = h if total is None else _lcm(total, h)
    if total is None or total.is_constant():
        return None
    return total.monic()


def _param_vs_from(vs: VarSet) -> VarSet:
    return VarSet((vs.parameter,), ("parameter",))


def atypical_candidates_top(fam: Family, I_polar: Ideal) -> list[Polynomial]:
    """Irreducible parameter polynomials over which the polar curve reaches infinity."""
    if I_polar.is_unit():
        return []
    if krull_dimension(I_polar) != 1:
        raise ValueError("polar locus is not a curve")
    h = infinity_image(fam, I_polar)
    if h is None:
        return []
    return irreducible_factors(h)


# -- degree level -------------------------------------------------------------


def fiber_degree(fam: Family, c) -> int:
    """``gamma^0_c``: degree of the fibre (reduced when ``n >= 2``)."""
    Fc = fam.fiber(c)
    if not Fc:
        raise DegenerateFamily(f"the fibre over {format_rational(as_rational(c))} is all of affine space")
    if fam.n == 1:
        return Fc.space_degree()
    return squarefree_part(Fc).space_degree()


def _space_degree_coefficients(fam: Family) -> dict[int, list[Polynomial]]:
    """Coefficients (in the parameter) of the space monomials, grouped by space degree."""
    vs = fam.varset
    pvs = _param_vs_from(vs)
    pidx = vs.index(fam.param)
    groups: dict[int, dict] = {}
    for e, c in fam.F.terms.items():
        k = sum(a for i, a in enumerate(e) if i != pidx)
        mono = tuple(a if i != pidx else 0 for i, a in enumerate(e))
        groups.setdefault(k, {}).setdefault(mono, {})[(e[pidx],)] = c
    return {k: [Polynomial(pvs, t) for t in monos.values()] for k, monos in groups.items()}


def degree_candidates(fam: Family) -> list[Polynomial]:
    """Parameter values where the top-degree part of ``F`` vanishes identically."""
    top = _space_degree_coefficients(fam)[fam.d]
    g = Polynomial.zero(top[0].varset)
    for p in top:
        g = gcd(g, p)
    return irreducible_factors(g)


def degree_at_algebraic(fam: Family, p: Polynomial) -> int:
    """Space degree of ``F`` over the roots of ``p``."""
    groups = _space_degree_coefficients(fam)
    for k in sorted(groups, reverse=True):
        if any(q.divmod(p)[1] for q in groups[k]):
            return k
    raise DegenerateFamily(f"the fibres over the roots of {p} are all of affine space")


# -- profiles -------------------------------------------------------------------


@dataclass(frozen=True)
class AtypicalEntry:
    min_poly: Polynomial
    value_sum: int
    gamma: int
    defect: int

    @property
    def degree(self) -> int:
        return self.min_poly.total_degree()

    def contains(self, c) -> bool:
        return _has_root(self.min_poly, c)

    def as_dict(self) -> dict:
        return {
            "min_poly": format_polynomial(self.min_poly),
            "degree": self.degree,
            "gamma": self.gamma,
            "value_sum": self.value_sum,
            "defect": self.defect,
        }


@dataclass(frozen=True)
class LevelProfile:
    level: int
    generic: int
    atypical: tuple[AtypicalEntry, ...] = ()

    @property
    def candidates(self) -> tuple[Polynomial, ...]:
        return tuple(a.min_poly for a in self.atypical)

    def value_at(self, c) -> int:
        for a in self.atypical:
            if a.contains(c):
                return a.gamma
        return self.generic

    def defect_at(self, c) -> int:
        return self.generic - self.value_at(c)

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "generic": self.generic,
            "atypical": [a.as_dict() for a in self.atypical],
        }


@dataclass(frozen=True)
class GammaProfile:
    """Generic values and atypical entries for levels ``n-1, ..., 0``."""

    n: int
    levels: tuple[LevelProfile, ...]
    choices: tuple[GenericChoice, ...] = field(default=(), compare=False)
    raw_candidates: tuple[tuple[str, ...], ...] = field(default=(), compare=False)

    def level(self, i: int) -> LevelProfile:
        return self.levels[self.n - 1 - i]

    @property
    def generic(self) -> tuple[int, ...]:
        return tuple(lv.generic for lv in self.levels)

    def at(self, c) -> tuple[int, ...]:
        """``(gamma^{n-1}_c, ..., gamma^0_c)``."""
        return tuple(lv.value_at(c) for lv in self.levels)

    def defects(self, c) -> tuple[int, ...]:
        """``(lambda^{n-1}_c, ..., lambda^0_c)``."""
        return tuple(lv.defect_at(c) for lv in self.levels)

    def atypical_values(self) -> list[Polynomial]:
        seen = []
        for lv in self.levels:
            for p in lv.candidates:
                if p not in seen:
                    seen.append(p)
        return sort_params(seen)

    def as_dict(self) -> list[dict]:
        return [lv.as_dict() for lv in self.levels]


@dataclass
class _Level:
    fam: Family
    polar: Ideal
    generic: int
    candidates: list[Polynomial]
    values: dict
    choice: LevelChoice

    def value(self, p: Polynomial):
        key = format_polynomial(p)
        if key not in self.values:
            try:
                self.values[key] = gamma_at_algebraic(self.fam, self.polar, p)[1]
            except NotZeroDimensional:
                self.values[key] = None
        return self.values[key]


def _sample_values(rng: random.Random, avoid, k: int = 2) -> list:
    out = []
    while len(out) < k:
        c = mpq(rng.randint(-97, 97), rng.choice((1, 2, 3)))
        if c in out or any(_has_root(p, c) for p in avoid):
            continue
        out.append(c)
    return out


class _Chain:
    """One independent sequence of generic choices, computed level by level."""

    def __init__(self, fam: Family, seed: int, chain: int, retries: int):
        self.fam = fam
        self.choice = GenericChoice(seed, chain)
        self.retries = retries
        self._levels: dict[int, _Level] = {}

    def level(self, i: int) -> _Level:
        if i not in self._levels:
            self._levels[i] = self._compute(i)
        return self._levels[i]

    def _compute(self, i: int) -> _Level:
        n = self.fam.n
        parent = self.fam if i == n - 1 else self.level(i + 1).fam
        for attempt in range(self.retries):
            rng = self.choice.rng(i, attempt)
            hyper = None
            fam = parent
            if i < n - 1:
                coeffs = tuple(rng.choice(MATRIX_ENTRIES) for _ in range(parent.n - 1))
                const = rng.choice(SLICE_CONSTANTS)
                hyper = (coeffs, const)
                try:
                    fam = slice_family(parent, coeffs, const)
                except DegenerateFamily:
                    continue
                if fam.d != parent.d:
                    continue
            matrix = random_invertible_matrix(rng, fam.n)
            fam = apply_generic_coordinates(fam, matrix)
            polar = polar_ideal(fam)
            if krull_dimension(polar) not in (-1, 1):
                continue
            try:
                cands = atypical_candidates_top(fam, polar)
            except ValueError:
                continue
            samples = _sample_values(rng, cands)
            if not all(check_polar_genericity(fam, polar, c) for c in samples):
                continue
            vals = {gamma_top(fam, polar, c) for c in samples}
            if len(vals) != 1:
                continue
            level = _Level(fam, polar, vals.pop(), cands, {}, LevelChoice(i, attempt, matrix, hyper))
            if any(level.value(p) is None for p in cands):
                continue
            return level
        raise RetriesExhausted(f"no generic choice found at level {i} after {self.retries} attempts")


def _vote(values):
    """First value produced twice by the iterable; None if the iterable runs dry."""
    seen = []
    for v in values:
        if v is None:
            continue
        if v in seen:
            return v
        seen.append(v)
    return None


def gamma_star_profile(fam: Family, seed: int = 0, retries: int = DEFAULT_RETRIES) -> GammaProfile:
    """Generic polar numbers, atypical values and defects at every level.

    Each level is computed along independent chains of generic choices and a
    value is accepted once two chains agree on it.
    """
    n = fam.n
    chains: list[_Chain] = []

    def chain(k):
        while len(chains) <= k:
            chains.append(_Chain(fam, seed, len(chains), retries))
        return chains[k]

    def over_chains(fn):
        for k in range(MAX_CHOICES):
            try:
                yield fn(chain(k))
            except RetriesExhausted:
                if k == 0:
                    raise
                yield None

    levels = []
    raw = []
    for i in range(n - 1, 0, -1):
        generic = _vote(over_chains(lambda ch: ch.level(i).generic))
        if generic is None:
            raise RetriesExhausted(f"generic value at level {i} is not stable")
        union: list[Polynomial] = []
        for k in range(2):
            try:
                found = chain(k).level(i).candidates
            except RetriesExhausted:
                if k == 0:
                    raise
                continue
            for p in found:
                if p not in union:
                    union.append(p)
        raw.append(tuple(format_polynomial(p) for p in union))
        entries = []
        for p in sort_params(union):
            val = _vote(over_chains(lambda ch: ch.level(i).value(p)))
            if val is None:
                raise RetriesExhausted(f"value over {p} at level {i} is not stable")
            if val != generic:
                deg = p.total_degree()
                entries.append(AtypicalEntry(p, val * deg, val, generic - val))
        levels.append(LevelProfile(i, generic, tuple(entries)))

    levels.append(_degree_level(fam, seed))
    raw.append(tuple(format_polynomial(e.min_poly) for e in levels[-1].atypical))
    choices = tuple(
        GenericChoice(seed, ch.choice.chain, tuple(ch._levels[i].choice for i in sorted(ch._levels, reverse=True)))
        for ch in chains
    )
    return GammaProfile(n, tuple(levels), choices, tuple(raw))


def _degree_level(fam: Family, seed: int) -> LevelProfile:
    rng = random.Random(f"polarinv:{seed}:degree")
    cands = degree_candidates(fam)
    samples = _sample_values(rng, cands)
    vals = {fiber_degree(fam, c) for c in samples}
    if len(vals) != 1:
        raise RetriesExhausted("generic fibre degree is not stable")
    generic = vals.pop()
    entries = []
    for p in cands:
        if p.total_degree() == 1:
            root = -p.terms[(0,)] if (0,) in p.terms else mpq(0)
            val = fiber_degree(fam, root)
        else:
            val = degree_at_algebraic(fam, p)
        if val != generic:
            entries.append(AtypicalEntry(p, val * p.total_degree(), val, generic - val))
    return LevelProfile(0, generic, tuple(entries))


def gamma_star(fam: Family, c, seed: int = 0, profile: GammaProfile | None = None) -> tuple[int, ...]:
    """``gamma^*_c`` as ``(gamma^{n-1}_c, ..., gamma^0_c)``."""
    profile = profile or gamma_star_profile(fam, seed)
    return profile.at(as_rational(c))


# -- singularities ----------------------------------------------------------------


def milnor_total(fam: Family, c) -> int:
    """Sum of the Milnor numbers of the singular points of ``X_c``."""
    Fc = fam.fiber(c)
    J = Ideal.of([Fc.partial_derivative(v) for v in Fc.varset.names], varset=Fc.varset)
    if J.is_unit():
        return 0
    if not is_zero_dimensional(J):
        raise NonIsolatedSingularities(krull_dimension(J))
    return eigenvalue_zero_multiplicity(multiplication_matrix(Fc, J))


def singular_ideal(fam: Family) -> Ideal:
    F = fam.F
    return Ideal.of([F] + [F.partial_derivative(v) for v in fam.space])


def singular_values(fam: Family) -> Polynomial | None:
    """Generator of the parameter values carrying singular points (None: none at all).

    The zero polynomial means every fibre is singular.
    """
    S = singular_ideal(fam)
    if S.is_unit():
        return None
    E = eliminate(S, fam.space)
    pvs = _param_vs_from(fam.varset)
    gens = [g.restrict(pvs) for g in E.gb]
    if not gens:
        return Polynomial.zero(pvs)
    h = gens[0]
    for g in gens[1:]:
        h = gcd(h, g)
    return h.monic()


@dataclass(frozen=True)
class HypothesisReport:
    passed: bool
    smooth: bool
    diagnostics: tuple[str, ...] = ()
    singular_values: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "pass": self.passed,
            "smooth": self.smooth,
            "diagnostics": list(self.diagnostics),
            "singular_values": list(self.singular_values),
        }


def verify_hypothesis(fam: Family, seed: int = 0) -> HypothesisReport:
    """Check that singular points stay isolated and bounded in every fibre."""
    diags = []
    # identically vanishing fibres
    content = Polynomial.zero(_param_vs_from(fam.varset))
    for group in _space_degree_coefficients(fam).values():
        for p in group:
            content = gcd(content, p)
    if not content.is_constant():
        diags.append(f"fibres over the roots of {format_polynomial(content)} are all of affine space")
        return HypothesisReport(False, False, tuple(diags))
    S = singular_ideal(fam)
    if S.is_unit():
        return HypothesisReport(True, True, ("family is smooth",))
    dim = krull_dimension(S)
    if dim > 1:
        diags.append(f"singular locus of the family has dimension {dim}")
        return HypothesisReport(False, False, tuple(diags))
    sv = singular_values(fam)
    checks = []
    if sv is not None and not sv.is_zero():
        factors = irreducible_factors(sv)
        checks = factors
        for p in factors:
            J = S + p.restrict(fam.varset)
            if not (J.is_unit() or is_zero_dimensional(J)):
                diags.append(f"fibres over the roots of {format_polynomial(p)} have non-isolated singularities")
    else:
        rng = random.Random(f"polarinv:{seed}:hypothesis")
        for c in _sample_values(rng, []):
            J = S + _param_eq(fam, c)
            if not (J.is_unit() or is_zero_dimensional(J)):
                diags.append(f"fibre over {format_rational(c)} has non-isolated singularities")
    if not diags:
        try:
            at_inf = infinity_image(fam, S)
        except ValueError:
            diags.append("singular points tend to infinity over every parameter value")
        else:
            if at_inf is not None:
                diags.append(
                    f"singular points tend to infinity over the roots of {format_polynomial(at_inf)}"
                )
    names = tuple(format_polynomial(p) for p in checks)
    if sv is not None and sv.is_zero():
        names = ("every fibre",)
    if diags:
        return HypothesisReport(False, False, tuple(diags), names)
    return HypothesisReport(True, False, ("isolated singularities in a bounded region",), names)


# -- topology of fibres -------------------------------------------------------------


@dataclass(frozen=True)
class FiberReport:
    c: object
    mu: int
    gamma: tuple[int, ...]
    chi: int
    cells: tuple[int, ...]
    singular: bool

    def as_dict(self) -> dict:
        return {
            "c": format_rational(self.c),
            "mu": self.mu,
            "gamma": list(self.gamma),
            "chi": self.chi,
            "cells": list(self.cells),
            "singular": self.singular,
        }


def _chi_formula(n: int, mu: int, gammas: tuple[int, ...]) -> int:
    # gammas ordered (gamma^{n-1}, ..., gamma^0)
    total = (-1) ** n * mu
    for i, g in enumerate(reversed(gammas)):
        total += (-1) ** i * g
    return total


def cw_model(fam: Family, c, seed: int = 0, profile: GammaProfile | None = None) -> FiberReport:
    """Cell counts per dimension and Euler characteristic of ``X_c``."""
    c = as_rational(c)
    profile = profile or gamma_star_profile(fam, seed)
    gammas = profile.at(c)
    mu = milnor_total(fam, c)
    n = fam.n
    ascending = list(reversed(gammas))  # gamma^0 ... gamma^{n-1}
    cells = ascending[:-1] + [ascending[-1] - mu]
    if cells[-1] < 0:
        raise NegativeTopCellCount(
            f"gamma^{n - 1} - mu = {cells[-1]} < 0 at c = {format_rational(c)}"
        )
    chi = _chi_formula(n, mu, gammas)
    alt = sum((-1) ** i * k for i, k in enumerate(cells))
    if alt != chi:
        raise InvariantViolation("cell model and Euler formula disagree")
    return FiberReport(c, mu, gammas, chi, tuple(cells), mu > 0)


def euler_characteristic(fam: Family, c, seed: int = 0, profile: GammaProfile | None = None) -> int:
    return cw_model(fam, c, seed, profile).chi


def generic_value(fam: Family, profile: GammaProfile, seed: int = 0):
    """A rational parameter value off every atypical and singular value."""
    avoid = list(profile.atypical_values())
    sv = singular_values(fam)
    if sv is not None:
        if sv.is_zero():
            raise ValueError("every fibre is singular")
        avoid += irreducible_factors(sv)
    return _sample_values(random.Random(f"polarinv:{seed}:generic-fibre"), avoid, 1)[0]


def euler_jump(fam: Family, c, seed: int = 0, profile: GammaProfile | None = None) -> int:
    """``chi(X_u) - chi(X_c)`` for ``u`` near ``c``, from ``mu`` and the defects."""
    c = as_rational(c)
    profile = profile or gamma_star_profile(fam, seed)
    sv = singular_values(fam)
    if sv is not None and sv.is_zero():
        raise ValueError("nearby fibres are singular: the jump formula does not apply")
    n = fam.n
    mu = milnor_total(fam, c)
    lam = tuple(reversed(profile.defects(c)))  # lambda^0 ... lambda^{n-1}
    jump = (-1) ** (n - 1) * mu + sum((-1) ** i * v for i, v in enumerate(lam))
    u = generic_value(fam, profile, seed)
    if milnor_total(fam, u):
        raise ValueError("generic fibre is singular")
    direct = euler_characteristic(fam, u, seed, profile) - euler_characteristic(fam, c, seed, profile)
    if direct != jump:
        raise InvariantViolation(f"Euler jump {jump} disagrees with the fibre difference {direct}")
    return jump


# -- verdicts ------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    c: object
    t_equisingular_at_infinity: bool
    defects: tuple[int, ...]
    implied: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "c": format_rational(self.c),
            "t_equisingular_at_infinity": self.t_equisingular_at_infinity,
            "defects": list(self.defects),
            "implied": list(self.implied),
        }


def verdict(fam: Family, c, seed: int = 0, profile: GammaProfile | None = None,
            hypothesis: HypothesisReport | None = None, force: bool = False) -> Verdict:
    """Equisingularity at infinity at ``c`` and the conclusions it carries."""
    c = as_rational(c)
    hypothesis = hypothesis or verify_hypothesis(fam, seed)
    if not hypothesis.passed and not force:
        raise HypothesisFailed(hypothesis)
    profile = profile or gamma_star_profile(fam, seed)
    lam = profile.defects(c)
    equi = all(v == 0 for v in lam)
    if not hypothesis.passed:
        return Verdict(c, equi, lam, ())
    tags = []
    if equi:
        tags.append(TRIVIAL_AT_INFINITY)
        sv = singular_values(fam)
        if sv is None or (not sv.is_zero() and not _has_root(sv, c)):
            tags.append(TRIVIAL)
    if fam.n == 2 and lam[-1] == 0:
        tags.append(TOPOLOGICALLY_TRIVIAL_AT_INFINITY if lam[0] == 0 else NOT_TOPOLOGICALLY_TRIVIAL_AT_INFINITY)
    return Verdict(c, equi, lam, tuple(tags))

