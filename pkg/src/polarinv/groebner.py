"""Buchberger's algorithm and the ideal operations built on it.

Polynomials are handled internally as plain ``{exponents: mpq}`` dicts keyed
by a compiled monomial-order function; :class:`Ideal` wraps the public
:class:`~polarinv.poly.Polynomial` values and caches its reduced basis.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from gmpy2 import mpq

from .poly import Polynomial, VarSet, grevlex_key


class NotZeroDimensional(ValueError):
    def __init__(self, dimension: int, message: str | None = None):
        self.dimension = dimension
        super().__init__(message or f"ideal is not zero-dimensional (dimension {dimension})")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, compiled against a VarSet by :meth:`key_for`.

    ``kind`` is one of ``grevlex``, ``lex``, ``block`` (variables in ``block``
    are eliminated first, each block compared by grevlex) and ``weighted``
    (weighted degree first, grevlex to break ties).
    """

    kind: str = "grevlex"
    block: tuple[str, ...] = ()
    weights: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block", "weighted"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def elimination(cls, names):
        return cls("block", block=tuple(names))

    @classmethod
    def weighted(cls, weights: dict[str, int]):
        return cls("weighted", weights=tuple(sorted(weights.items())))

    def key_for(self, varset: VarSet):
        if self.kind == "grevlex":
            return grevlex_key
        if self.kind == "lex":
            return tuple
        if self.kind == "block":
            inside = tuple(varset.index(n) for n in self.block)
            outside = tuple(i for i in range(len(varset)) if i not in inside)

            def key(e):
                a = tuple(e[i] for i in inside)
                b = tuple(e[i] for i in outside)
                return grevlex_key(a) + grevlex_key(b)

            return key
        w = dict(self.weights)
        wv = tuple(w.get(n, 0) for n in varset.names)

        def key(e):
            return (sum(a * b for a, b in zip(wv, e)),) + grevlex_key(e)

        return key


GREVLEX = MonomialOrder.grevlex()


# -- dict-level kernel ----------------------------------------------------------


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Kernel:
    """Monomial bookkeeping shared by one run of the algorithm."""

    def __init__(self, key):
        self.key = key
        self._neg = {}

    def neg(self, m):
        k = self._neg.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._neg[m] = k
        return k

    def lead(self, p):
        return max(p, key=self.key)

    def reduce(self, p: dict, basis: list, full: bool = True) -> dict:
        """Remainder of ``p`` on division by ``basis`` (list of (lm, tail) monic)."""
        p = dict(p)
        heap = [(self.neg(m), m) for m in p]
        heapq.heapify(heap)
        r = {}
        neg = self.neg
        while heap:
            _, m = heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            for lm, tail in basis:
                if _divides(lm, m):
                    del p[m]
                    q = tuple(x - y for x, y in zip(m, lm))
                    for e, gc in tail:
                        t = tuple(x + y for x, y in zip(e, q))
                        old = p.get(t)
                        if old is None:
                            p[t] = -c * gc
                            heapq.heappush(heap, (neg(t), t))
                        else:
                            v = old - c * gc
                            if v:
                                p[t] = v
                            else:
                                del p[t]
                    break
            else:
                if not full:
                    r[m] = c
                    del p[m]
                    r.update(p)
                    return r
                r[m] = c
                del p[m]
        return r

    def monic(self, p: dict):
        lm = self.lead(p)
        inv = 1 / p[lm]
        tail = [(e, c * inv) for e, c in p.items() if e != lm]
        tail.sort(key=lambda t: self.key(t[0]), reverse=True)
        return lm, tail

    @staticmethod
    def as_dict(lm, tail) -> dict:
        d = {lm: mpq(1)}
        d.update(tail)
        return d

    def spoly(self, f, g):
        (lf, tf), (lg, tg) = f, g
        L = _lcm(lf, lg)
        qf = tuple(x - y for x, y in zip(L, lf))
        qg = tuple(x - y for x, y in zip(L, lg))
        out: dict = {}
        for e, c in tf:
            t = tuple(x + y for x, y in zip(e, qf))
            out[t] = out.get(t, 0) + c
        for e, c in tg:
            t = tuple(x + y for x, y in zip(e, qg))
            v = out.get(t, 0) - c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return {m: c for m, c in out.items() if c}


def _gb(polys: list[dict], key) -> list[tuple]:
    """Reduced Groebner basis as a list of monic (lm, tail) pairs, sorted descending."""
    K = _Kernel(key)
    store: list[tuple] = []  # every basis element ever added, by index
    live: list[int] = []  # indices forming the current (minimal) basis
    pairs: list = []  # heap of (lcm key, i, j)
    pair_set: set = set()

    def basis():
        return [store[i] for i in live]

    def update(h_idx):
        nonlocal live, pairs
        lh = store[h_idx][0]
        C = [(g, _lcm(lh, store[g][0])) for g in live]
        D = []
        # chain criterion among the new pairs
        for k, (g1, L1) in enumerate(C):
            if _coprime(lh, store[g1][0]):
                D.append((g1, L1))
                continue
            dominated = False
            for g2, L2 in C[k + 1:]:
                if _divides(L2, L1):
                    dominated = True
                    break
            if not dominated:
                for g2, L2 in D:
                    if _divides(L2, L1):
                        dominated = True
                        break
            if not dominated:
                D.append((g1, L1))
        E = [(g, L) for g, L in D if not _coprime(lh, store[g][0])]
        # drop old pairs made redundant by h
        kept = []
        for item in pairs:
            _, i, j = item
            L = _lcm(store[i][0], store[j][0])
            if _divides(lh, L) and _lcm(store[i][0], lh) != L and _lcm(store[j][0], lh) != L:
                pair_set.discard((i, j))
                continue
            kept.append(item)
        for g, L in E:
            i, j = (g, h_idx) if g < h_idx else (h_idx, g)
            if (i, j) not in pair_set:
                pair_set.add((i, j))
                kept.append((K.key(L), i, j))
        heapq.heapify(kept)
        pairs = kept
        live = [g for g in live if not _divides(lh, store[g][0])] + [h_idx]

    for p in polys:
        if not p:
            continue
        r = K.reduce(p, basis())
        if not r:
            continue
        store.append(K.monic(r))
        update(len(store) - 1)
        if not any(store[live[-1]][0]):
            break

    while pairs:
        if len(live) == 1 and not any(store[live[0]][0]):
            break
        _, i, j = heapq.heappop(pairs)
        pair_set.discard((i, j))
        s = K.spoly(store[i], store[j])
        if not s:
            continue
        r = K.reduce(s, basis())
        if not r:
            continue
        store.append(K.monic(r))
        update(len(store) - 1)

    G = basis()
    if any(not any(lm) for lm, _ in G):
        return [((0,) * len(G[0][0]), [])]
    # inter-reduce tails
    G.sort(key=lambda g: key(g[0]), reverse=True)
    out = []
    for k, (lm, tail) in enumerate(G):
        others = [g for m, g in enumerate(G) if m != k]
        t = K.reduce(dict(tail), others) if tail else {}
        out.append((lm, sorted(t.items(), key=lambda kv: key(kv[0]), reverse=True)))
    return out


# -- public API -----------------------------------------------------------------


def _check_varsets(gens):
    vs = gens[0].varset
    for g in gens:
        if g.varset != vs:
            raise ValueError("generators must share one VarSet")
    return vs


@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal of ``Q[varset]`` with a lazily cached reduced Groebner basis."""

    varset: VarSet
    generators: tuple[Polynomial, ...]
    order: MonomialOrder = field(default=GREVLEX)

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.varset != self.varset:
                raise ValueError("generators must share the ideal's VarSet")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, gens, order: MonomialOrder = GREVLEX, varset: VarSet | None = None) -> "Ideal":
        gens = list(gens)
        if varset is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit VarSet")
            varset = _check_varsets(gens)
        return cls(varset, tuple(gens), order)

    @cached_property
    def key(self):
        return self.order.key_for(self.varset)

    @cached_property
    def _basis(self) -> list[tuple]:
        return _gb([g._terms for g in self.generators], self.key)

    @cached_property
    def gb(self) -> tuple[Polynomial, ...]:
        return tuple(
            Polynomial._raw(self.varset, _Kernel.as_dict(lm, tail)) for lm, tail in self._basis
        )

    @cached_property
    def leading_monomials(self) -> tuple[tuple[int, ...], ...]:
        return tuple(lm for lm, _ in self._basis)

    def with_order(self, order: MonomialOrder) -> "Ideal":
        if order == self.order:
            return self
        # seed with the current basis when it's already known: usually smaller
        gens = self.gb if "_basis" in self.__dict__ else self.generators
        return Ideal(self.varset, tuple(gens), order)

    def is_unit(self) -> bool:
        return len(self._basis) == 1 and not any(self._basis[0][0])

    def is_zero(self) -> bool:
        return not self._basis

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.varset != self.varset:
            raise ValueError("polynomial lives in a different VarSet")
        K = _Kernel(self.key)
        return Polynomial._raw(self.varset, K.reduce(p._terms, self._basis))

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return (
            self.varset == other.varset
            and self.contains_ideal(other)
            and other.contains_ideal(self)
        )

    __hash__ = None

    def __add__(self, other):
        """Sum of ideals, or the ideal with extra generators appended."""
        if isinstance(other, Ideal):
            extra = other.generators
        elif isinstance(other, Polynomial):
            extra = (other,)
        else:
            extra = tuple(other)
        base = self.gb if "_basis" in self.__dict__ else self.generators
        return Ideal(self.varset, tuple(base) + tuple(extra), self.order)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal([{gens}], order={self.order.kind})"


def buchberger(gens, order: MonomialOrder = GREVLEX, varset: VarSet | None = None) -> Ideal:
    """Ideal with its reduced Groebner basis already computed."""
    I = Ideal.of(gens, order, varset)
    I.gb
    return I


def normal_form(p: Polynomial, I: Ideal) -> Polynomial:
    return I.normal_form(p)


def s_polynomial_audit(I: Ideal) -> bool:
    """Buchberger criterion: all S-polynomials of the basis reduce to zero."""
    return audit_basis(I._basis, I.key)


def audit_basis(B, key) -> bool:
    """Check that ``B`` (as ``(lm, tail)`` pairs) is a reduced Groebner basis."""
    K = _Kernel(key)
    for a, b in itertools.combinations(B, 2):
        s = K.spoly(a, b)
        if s and K.reduce(s, B):
            return False
    # reducedness: no basis monomial is divisible by another leading monomial
    for k, (lm, tail) in enumerate(B):
        for m, (lm2, _) in enumerate(B):
            if m == k:
                continue
            if _divides(lm2, lm) or any(_divides(lm2, e) for e, _ in tail):
                return False
    return True


def eliminate(I: Ideal, drop) -> Ideal:
    """Generators of ``I`` intersected with the subring free of ``drop``."""
    drop = tuple(drop)
    for name in drop:
        I.varset.index(name)
    if not drop:
        return I
    J = I.with_order(MonomialOrder.elimination(drop))
    target = I.varset.without(drop)
    keep = [g.restrict(target) for g in J.gb if not any(g.involves(v) for v in drop)]
    return Ideal(target, tuple(keep), GREVLEX)


def saturate(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g^oo`` computed with one auxiliary variable."""
    if not g:
        raise ValueError("cannot saturate by the zero polynomial")
    if g.is_constant():
        return I
    z = I.varset.fresh("_sat")
    big = I.varset.extend([z])
    gens = [p.restrict(big) for p in (I.gb if "_basis" in I.__dict__ else I.generators)]
    zz = Polynomial.variable(big, z)
    gens.append(1 - zz * g.restrict(big))
    J = Ideal(big, tuple(gens), MonomialOrder.elimination([z]))
    out = eliminate(J, [z])
    return Ideal(I.varset, out.generators, I.order)


def krull_dimension(I: Ideal) -> int:
    """Dimension of ``V(I)``; -1 for the unit ideal."""
    if I.is_unit():
        return -1
    n = len(I.varset)
    lms = I.leading_monomials
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in lms]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            s = frozenset(S)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def is_zero_dimensional(I: Ideal) -> bool:
    if I.is_unit():
        return False
    n = len(I.varset)
    pure = set()
    for m in I.leading_monomials:
        nz = [i for i, a in enumerate(m) if a]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == n


def staircase(I: Ideal) -> list[tuple[int, ...]]:
    """Monomials outside the leading ideal, in ascending order."""
    if I.is_unit():
        return []
    if not is_zero_dimensional(I):
        raise NotZeroDimensional(krull_dimension(I))
    n = len(I.varset)
    lms = I.leading_monomials
    out = []
    seen = {(0,) * n}
    stack = [(0,) * n]
    while stack:
        m = stack.pop()
        if any(_divides(l, m) for l in lms):
            continue
        out.append(m)
        for i in range(n):
            e = m[:i] + (m[i] + 1,) + m[i + 1:]
            if e not in seen:
                seen.add(e)
                stack.append(e)
    out.sort(key=I.key)
    return out


def quotient_dimension(I: Ideal) -> int:
    """``dim_Q Q[x]/I`` for a zero-dimensional (or unit) ideal."""
    return len(staircase(I))
