"""One-parameter polynomial families of affine hypersurfaces."""

from __future__ import annotations

from dataclasses import dataclass, field

from .parser import parse_polynomial
from .poly import Polynomial, VarSet

FIBER = "fiber"
GENERAL = "general"


class DegenerateFamily(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    """Textual description of a family.

    In ``fiber`` mode the expression is ``f(x)`` and the family is
    ``F = f(x) - param``; in ``general`` mode it is ``F(param, x)`` itself.
    """

    expression: str
    space: tuple[str, ...]
    param: str = "t"
    mode: str = FIBER

    def __post_init__(self):
        object.__setattr__(self, "space", tuple(self.space))
        if self.mode not in (FIBER, GENERAL):
            raise ValueError(f"mode must be {FIBER!r} or {GENERAL!r}, not {self.mode!r}")
        if len(self.space) < 1:
            raise ValueError("at least one space variable is required")
        if self.param in self.space:
            raise ValueError(f"parameter {self.param!r} is also a space variable")


@dataclass(frozen=True)
class Family:
    """``F(tau, x_1..x_n)`` with its parameter and space variables."""

    F: Polynomial
    spec: FamilySpec | None = field(default=None, compare=False)

    def __post_init__(self):
        vs = self.F.varset
        if vs.parameter is None:
            raise ValueError("the family polynomial needs a parameter variable")
        if not vs.space:
            raise ValueError("at least one space variable is required")
        if self.F.is_zero() or self.F.space_degree() < 1:
            raise DegenerateFamily("F is constant in the space variables")

    @property
    def varset(self) -> VarSet:
        return self.F.varset

    @property
    def param(self) -> str:
        return self.varset.parameter

    @property
    def space(self) -> tuple[str, ...]:
        return self.varset.space

    @property
    def n(self) -> int:
        return len(self.space)

    @property
    def d(self) -> int:
        return self.F.space_degree()

    @property
    def is_constant_family(self) -> bool:
        return not self.F.involves(self.param)

    def fiber(self, c) -> Polynomial:
        """``F_c`` as a polynomial in the space variables only."""
        space_vs = VarSet(self.space)
        return self.F.substitute({self.param: _const(space_vs, c)}, space_vs)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(self.varset, name)

    def __str__(self):
        return str(self.F)


def _const(vs, c):
    return Polynomial.constant(vs, c)


def parse_family(spec: FamilySpec) -> Family:
    vs = VarSet.family(spec.param, spec.space)
    p = parse_polynomial(spec.expression, vs)
    if spec.mode == FIBER:
        if p.involves(spec.param):
            raise ValueError(f"parameter {spec.param!r} appears in a fiber-mode expression")
        p = p - Polynomial.variable(vs, spec.param)
    return Family(p, spec)
