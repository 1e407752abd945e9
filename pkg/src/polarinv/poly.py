"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
``gmpy2.mpq`` coefficients, tied to a :class:`VarSet` that fixes the variable
order and the role of each variable (parameter, space or auxiliary).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

import gmpy2
from gmpy2 import mpq, mpz

Rational = type(mpq(0))
RationalLike = Union[int, Fraction, str, "gmpy2.mpq"]

PARAMETER = "parameter"
SPACE = "space"
AUX = "aux"
_ROLES = (PARAMETER, SPACE, AUX)


class VarSetMismatch(ValueError):
    pass


class UnknownVariable(KeyError):
    pass


class DegreeUndefined:
    """Degree of the zero polynomial."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNDEFINED_DEGREE"

    def __bool__(self):
        return False


UNDEFINED_DEGREE = DegreeUndefined()


def as_rational(c: RationalLike) -> Rational:
    if isinstance(c, Rational):
        return c
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not accepted")
    return mpq(c)


@dataclass(frozen=True)
class VarSet:
    """Ordered, role-tagged variable names."""

    names: tuple[str, ...]
    roles: tuple[str, ...] = ()

    def __post_init__(self):
        names = tuple(self.names)
        roles = tuple(self.roles) if self.roles else (SPACE,) * len(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if len(roles) != len(names):
            raise ValueError("one role per variable is required")
        for r in roles:
            if r not in _ROLES:
                raise ValueError(f"unknown role {r!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "roles", roles)

    @classmethod
    def family(cls, param: str, space: Iterable[str]) -> "VarSet":
        space = tuple(space)
        return cls((param,) + space, (PARAMETER,) + (SPACE,) * len(space))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def role(self, name: str) -> str:
        return self.roles[self.index(name)]

    @property
    def space(self) -> tuple[str, ...]:
        return tuple(n for n, r in zip(self.names, self.roles) if r == SPACE)

    @property
    def space_indices(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.roles) if r == SPACE)

    @property
    def parameter(self) -> str | None:
        params = [n for n, r in zip(self.names, self.roles) if r == PARAMETER]
        if len(params) > 1:
            raise ValueError("more than one parameter variable")
        return params[0] if params else None

    def extend(self, names: Iterable[str], role: str = AUX) -> "VarSet":
        names = tuple(names)
        return VarSet(self.names + names, self.roles + (role,) * len(names))

    def without(self, names: Iterable[str]) -> "VarSet":
        drop = set(names)
        keep = [(n, r) for n, r in zip(self.names, self.roles) if n not in drop]
        return VarSet(tuple(n for n, _ in keep), tuple(r for _, r in keep))

    def fresh(self, base: str) -> str:
        name, k = base, 0
        while name in self.names:
            k += 1
            name = f"{base}{k}"
        return name


def grevlex_key(e: tuple[int, ...]) -> tuple:
    return (sum(e),) + tuple(-a for a in reversed(e))


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[tuple[int, ...], RationalLike] | None = None):
        self.varset = varset
        n = len(varset)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"monomial {e} does not match {n} variables")
                c = as_rational(c)
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, varset: VarSet, terms: dict) -> "Polynomial":
        # terms already clean: tuple keys, nonzero mpq values
        p = object.__new__(cls)
        p.varset = varset
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, varset: VarSet, c: RationalLike) -> "Polynomial":
        return cls(varset, {(0,) * len(varset): c})

    @classmethod
    def variable(cls, varset: VarSet, name: str) -> "Polynomial":
        e = [0] * len(varset)
        e[varset.index(name)] = 1
        return cls._raw(varset, {tuple(e): mpq(1)})

    @classmethod
    def zero(cls, varset: VarSet) -> "Polynomial":
        return cls._raw(varset, {})

    # -- structure --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Rational]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending grevlex) order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * len(self.varset), mpq(0))

    def variables(self) -> tuple[str, ...]:
        """Names of the variables that actually occur."""
        used = [False] * len(self.varset)
        for e in self._terms:
            for i, a in enumerate(e):
                if a:
                    used[i] = True
        return tuple(n for n, u in zip(self.varset.names, used) if u)

    def involves(self, name: str) -> bool:
        i = self.varset.index(name)
        return any(e[i] for e in self._terms)

    def total_degree(self):
        if not self._terms:
            return UNDEFINED_DEGREE
        return max(sum(e) for e in self._terms)

    def degree(self, name: str):
        if not self._terms:
            return UNDEFINED_DEGREE
        i = self.varset.index(name)
        return max(e[i] for e in self._terms)

    def space_degree(self):
        if not self._terms:
            return UNDEFINED_DEGREE
        idx = self.varset.space_indices
        return max(sum(e[i] for i in idx) for e in self._terms)

    def leading_term(self, key=grevlex_key) -> tuple[tuple[int, ...], Rational]:
        m = max(self._terms, key=key)
        return m, self._terms[m]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.varset != other.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.varset, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.varset, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.varset, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.varset, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: RationalLike) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.varset)
        return Polynomial._raw(self.varset, {e: c * v for e, v in self._terms.items()})

    def mul_monomial(self, m: tuple[int, ...], c: RationalLike = 1) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.varset)
        return Polynomial._raw(
            self.varset, {tuple(a + b for a, b in zip(e, m)): c * v for e, v in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.varset == other.varset and self._terms == other._terms
        try:
            c = as_rational(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    def monic(self, key=grevlex_key) -> "Polynomial":
        if not self._terms:
            return self
        _, c = self.leading_term(key)
        return self.scale(1 / c)

    # -- calculus and substitution ----------------------------------------

    def partial_derivative(self, name: str) -> "Polynomial":
        i = self.varset.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.varset, out)

    def evaluate(self, point: Mapping[str, RationalLike]) -> Rational:
        vals = []
        for name in self.varset.names:
            if name not in point:
                if any(e[self.varset.index(name)] for e in self._terms):
                    raise KeyError(f"no value for variable {name!r}")
                vals.append(mpq(0))
            else:
                vals.append(as_rational(point[name]))
        total = mpq(0)
        for e, c in self._terms.items():
            v = c
            for x, a in zip(vals, e):
                if a:
                    v *= x**a
            total += v
        return total

    def substitute(self, assignments: Mapping[str, "Polynomial"], target: VarSet | None = None) -> "Polynomial":
        """Simultaneous substitution of polynomials for variables.

        Each replacement must live in ``target`` (default: this VarSet minus
        the substituted names). Variables not substituted are mapped by name.
        """
        if target is None:
            target = self.varset.without(assignments)
        for p in assignments.values():
            if p.varset != target:
                raise VarSetMismatch("replacement polynomials must live in the target VarSet")
        images = []
        for name in self.varset.names:
            if name in assignments:
                images.append(assignments[name])
            elif name in target:
                images.append(Polynomial.variable(target, name))
            else:
                images.append(None)
        powers: dict = {}

        def power(i, a):
            key = (i, a)
            if key not in powers:
                powers[key] = images[i] ** a
            return powers[key]

        result = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, a in enumerate(e):
                if a:
                    if images[i] is None:
                        raise UnknownVariable(self.varset.names[i])
                    term = term * power(i, a)
            result = result + term
        return result

    def substitute_linear(self, assignments: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Replace variables by affine forms in the remaining variables."""
        if not assignments:
            raise ValueError("at least one variable must be eliminated")
        remaining = self.varset.without(assignments)
        for name, form in assignments.items():
            self.varset.index(name)
            if form.varset == self.varset:
                bad = set(form.variables()) & set(assignments)
                if bad:
                    raise ValueError(f"cyclic assignment: {name} -> uses {sorted(bad)}")
                form = form.restrict(remaining)
            if form.varset != remaining:
                raise VarSetMismatch("affine forms must use the remaining variables")
            if form and form.total_degree() > 1:
                raise ValueError(f"assignment for {name} is not affine")
        forms = {
            k: (v.restrict(remaining) if v.varset == self.varset else v) for k, v in assignments.items()
        }
        return self.substitute(forms, remaining)

    def restrict(self, target: VarSet) -> "Polynomial":
        """Re-express in ``target``; every occurring variable must exist there."""
        pos = []
        for name in target.names:
            pos.append(self.varset.names.index(name) if name in self.varset else None)
        for name in self.variables():
            if name not in target:
                raise UnknownVariable(f"{name} does not exist in the target VarSet")
        out = {}
        for e, c in self._terms.items():
            out[tuple(e[p] if p is not None else 0 for p in pos)] = c
        return Polynomial._raw(target, out)

    def homogenize_space(self, x0: str) -> "Polynomial":
        """Homogenize in the space variables with a new auxiliary variable."""
        if not self._terms:
            raise ValueError("cannot homogenize the zero polynomial")
        if x0 in self.varset:
            raise ValueError(f"{x0!r} is not a fresh variable")
        target = self.varset.extend([x0], AUX)
        idx = self.varset.space_indices
        d = self.space_degree()
        out = {}
        for e, c in self._terms.items():
            out[e + (d - sum(e[i] for i in idx),)] = c
        return Polynomial._raw(target, out)

    def dehomogenize(self, x0: str) -> "Polynomial":
        i = self.varset.index(x0)
        target = self.varset.without([x0])
        out: dict = {}
        for e, c in self._terms.items():
            f = e[:i] + e[i + 1:]
            v = out.get(f, 0) + c
            if v:
                out[f] = v
            else:
                out.pop(f, None)
        return Polynomial._raw(target, out)

    def space_leading_form(self) -> "Polynomial":
        """Sum of the terms of maximal space degree."""
        d = self.space_degree()
        idx = self.varset.space_indices
        return Polynomial._raw(
            self.varset, {e: c for e, c in self._terms.items() if sum(e[i] for i in idx) == d}
        )

    # -- univariate views -------------------------------------------------

    def coefficients_in(self, name: str) -> list["Polynomial"]:
        """Coefficients ``[c_0, ..., c_k]`` of ``self`` as a polynomial in ``name``."""
        i = self.varset.index(name)
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            f = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(e[i], {})[f] = c
        if not parts:
            return []
        return [Polynomial._raw(self.varset, parts.get(k, {})) for k in range(max(parts) + 1)]

    @classmethod
    def from_coefficients(cls, coeffs: list["Polynomial"], name: str) -> "Polynomial":
        vs = coeffs[0].varset
        i = vs.index(name)
        out = {}
        for k, p in enumerate(coeffs):
            for e, c in p._terms.items():
                if e[i]:
                    raise ValueError("coefficient involves the main variable")
                out[e[:i] + (k,) + e[i + 1:]] = c
        return cls._raw(vs, out)

    def univariate_coefficients(self) -> list[Rational]:
        """Coefficient list ``[c_0, ..., c_k]`` for a polynomial in one variable."""
        used = self.variables()
        if len(used) > 1:
            raise ValueError(f"not univariate: {used}")
        if not self._terms:
            return []
        deg = max(sum(e) for e in self._terms)
        out = [mpq(0)] * (deg + 1)
        for e, c in self._terms.items():
            out[sum(e)] = c
        return out

    # -- division, gcd ----------------------------------------------------

    def divmod(self, other: "Polynomial", key=grevlex_key) -> tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single polynomial."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = other.leading_term(key)
        p = dict(self._terms)
        q: dict = {}
        r: dict = {}
        while p:
            m = max(p, key=key)
            c = p[m]
            if all(a >= b for a, b in zip(m, lm)):
                s = tuple(a - b for a, b in zip(m, lm))
                f = c / lc
                q[s] = q.get(s, 0) + f
                for e, v in other._terms.items():
                    t = tuple(a + b for a, b in zip(e, s))
                    nv = p.get(t, 0) - f * v
                    if nv:
                        p[t] = nv
                    else:
                        p.pop(t, None)
            else:
                r[m] = c
                del p[m]
        return Polynomial._raw(self.varset, q), Polynomial._raw(self.varset, r)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, vars={list(self.varset.names)})"


def format_rational(c: Rational) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Render in the input grammar (``*`` for products, ``^`` for powers)."""
    if p.is_zero():
        return "0"
    names = p.varset.names
    pieces = []
    for e, c in p.items():
        factors = []
        for name, a in zip(names, e):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append(f"{name}^{a}")
        mag = abs(c)
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{format_rational(mag)}*{body}"
        else:
            body = format_rational(mag)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- gcd via primitive remainder sequences ------------------------------------


def _main_variable(p: Polynomial, q: Polynomial) -> str | None:
    used = set(p.variables()) | set(q.variables())
    for name in reversed(p.varset.names):
        if name in used:
            return name
    return None


def _content(coeffs: list[Polynomial]) -> Polynomial:
    g = Polynomial.zero(coeffs[0].varset)
    for c in coeffs:
        g = gcd(g, c)
        if g.is_constant() and g:
            break
    return g


def _prem(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of coefficient lists (index = degree)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(a) - 1 >= db and any(a):
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for k, bc in enumerate(b):
            a[k + shift] = a[k + shift] - bc * la
        a.pop()
        e -= 1
        while a and not a[-1]:
            a.pop()
    if e > 0 and a:
        f = lb**e
        a = [c * f for c in a]
    return a


def _numeric_primitive(coeffs: list[Polynomial]) -> list[Polynomial]:
    """Scale so that all rational coefficients become coprime integers."""
    den = mpz(1)
    for c in coeffs:
        for x in c._terms.values():
            den = gmpy2.lcm(den, x.denominator)
    num = mpz(0)
    for c in coeffs:
        for x in c._terms.values():
            num = gmpy2.gcd(num, x.numerator * (den // x.denominator))
    if num == 0:
        return coeffs
    f = mpq(den, num)
    return [c.scale(f) for c in coeffs]


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized to a monic grevlex leading term."""
    p._check(q)
    if not p:
        return q.monic() if q else q
    if not q:
        return p.monic()
    v = _main_variable(p, q)
    one = Polynomial.constant(p.varset, 1)
    if v is None:
        return one
    pc = p.coefficients_in(v)
    qc = q.coefficients_in(v)
    if len(pc) == 1 or len(qc) == 1:
        # one side is free of v: gcd divides every coefficient of the other
        if len(pc) == 1:
            return _content([pc[0]] + qc).monic()
        return _content([qc[0]] + pc).monic()
    cp, cq = _content(pc), _content(qc)
    cont = gcd(cp, cq)
    a = _numeric_primitive([c.exact_div(cp) for c in pc])
    b = _numeric_primitive([c.exact_div(cq) for c in qc])
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem(a, b)
        if not r:
            g = b
            break
        if len(r) == 1:
            g = [one]
            break
        cr = _content(r)
        a, b = b, _numeric_primitive([c.exact_div(cr) for c in r])
    gp = Polynomial.from_coefficients(g, v)
    if len(g) > 1:
        cg = _content(g)
        gp = gp.exact_div(cg)
    return (gp * cont).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of ``p`` (up to a constant)."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    g = p
    for name in p.variables():
        if g.is_constant():
            break
        g = gcd(g, p.partial_derivative(name))
    if g.is_constant():
        return p.monic()
    return p.exact_div(g).monic()
