"""The rational Cherednik algebra H(G, k) of G = G(r,1,n) with PBW normal form.

Elements are finite sums of monomials ``x^a g y^b`` (x in V*, g in G, y in V).
Products are normalized by rewriting ``g x -> g(x) g``, ``y g -> g g^{-1}(y)`` and
``y x -> x y + [y, x]``; each step lowers the number of (y, x) inversions, so the
rewriting terminates without any completion.

The elements D_j = v_j alpha_j + sum_{i<j} k~_(i,j) s_{i,j} (Dunkl-type commuting
elements) are built here, and the cross-relation constant ``X_i = s_i D_i - D_{i+1} s_i`` is exported for the
abstract graded Hecke engine in :mod:`gghecke.ggha`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cyclo import CycloNum, field
from .refl_group import (GroupElem, identity, perm_elem, reflection, simple_reflection, theta,
                         torus_elem)

Mono = tuple[tuple[int, ...], GroupElem, tuple[int, ...]]


@dataclass(frozen=True)
class Params:
    """Parameter function k: value k_t on xi_i^t (t = 1..r-1) and kbar0 on all s_{u,v}^{[m]}."""

    r: int
    n: int
    k: tuple[CycloNum, ...]
    kbar0: CycloNum

    def __post_init__(self):
        F = field(self.r)
        k = tuple(F.const(v) if not isinstance(v, CycloNum) else v for v in self.k)
        if len(k) != self.r - 1:
            raise ValueError(f"need {self.r - 1} values k_1..k_{self.r - 1}, got {len(k)}")
        object.__setattr__(self, "k", k)
        if not isinstance(self.kbar0, CycloNum):
            object.__setattr__(self, "kbar0", F.const(self.kbar0))

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "k": [str(v) for v in self.k], "kbar0": str(self.kbar0)}


def _add_into(acc: dict, key, val) -> None:
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


def act_x(g: GroupElem, a: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """g(x^a) = z^e x^{a'}; returns (e, a')."""
    out = [0] * len(a)
    e = 0
    for j, aj in enumerate(a):
        if aj:
            ex, k = g.on_covector(j)
            e += ex * aj
            out[k] = aj
    return e, tuple(out)


def act_y(g: GroupElem, b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """g(y^b) = z^e y^{b'}; returns (e, b')."""
    out = [0] * len(b)
    e = 0
    for j, bj in enumerate(b):
        if bj:
            ex, k = g.on_vector(j)
            e += ex * bj
            out[k] = bj
    return e, tuple(out)


def _addv(a, b):
    return tuple(x + y for x, y in zip(a, b))


class CherednikAlgebra:
    """H(G(r,1,n), k) with cached structure constants."""

    def __init__(self, params: Params):
        self.params = params
        self.r, self.n = params.r, params.n
        self.F = field(self.r)
        self.e = identity(self.r, self.n)
        self.zero_deg = (0,) * self.n
        self._ynorm: dict = {}
        self._commx: dict = {}
        self._comm = {(i, j): self._commutator(i, j) for i in range(self.n) for j in range(self.n)}

    # -- defining relation ----------------------------------------------------

    def _commutator(self, i: int, j: int) -> dict[GroupElem, CycloNum]:
        r, n, F = self.r, self.n, self.F
        p = self.params
        out: dict[GroupElem, CycloNum] = {}
        if i == j:
            _add_into(out, self.e, F.one)
            for t in range(1, r):
                _add_into(out, theta(r, n, i, t), -p.k[t - 1])
        half = Fraction(1, 2)
        for m in range(r):
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    # <v_i, alpha_{u,v}^{[m]}> with alpha = z^{-m} alpha_u - alpha_v
                    left = F.zero
                    if i == u:
                        left = left + F.zeta(-m)
                    if i == v:
                        left = left - 1
                    if not left:
                        continue
                    # <v_{u,v}^{[m]}, alpha_j> with v = (z^m v_u - v_v) / 2
                    right = F.zero
                    if j == u:
                        right = right + F.zeta(m)
                    if j == v:
                        right = right - 1
                    if not right:
                        continue
                    s = reflection(r, n, "s", (u, v), m)
                    _add_into(out, s, -(p.kbar0 * left * right * half))
        return _clean(out)

    def commutator_yx(self, i: int, j: int) -> "CherElem":
        """[v_i, alpha_j] as an element of the group algebra."""
        return CherElem(self, {(self.zero_deg, g, self.zero_deg): c
                               for g, c in self._comm[(i, j)].items()})

    # -- normal ordering ------------------------------------------------------

    def _comm_mono(self, i: int, a: tuple[int, ...]) -> dict:
        """[y_i, x^a] = sum c x^{a'} h, keyed by (a', h)."""
        key = (i, a)
        hit = self._commx.get(key)
        if hit is not None:
            return hit
        seq = [j for j, aj in enumerate(a) for _ in range(aj)]
        out: dict = {}
        n = self.n
        for p, j in enumerate(seq):
            pre = [0] * n
            for q in seq[:p]:
                pre[q] += 1
            suf = [0] * n
            for q in seq[p + 1:]:
                suf[q] += 1
            suf = tuple(suf)
            for h, c in self._comm[(i, j)].items():
                ex, hs = act_x(h, suf)
                _add_into(out, (_addv(pre, hs), h), c * self.F.zeta(ex))
        out = _clean(out)
        self._commx[key] = out
        return out

    def ynorm(self, b: tuple[int, ...], c: tuple[int, ...]) -> dict:
        """Normal form of y^b x^c, keyed by monomial (a, g, b')."""
        key = (b, c)
        hit = self._ynorm.get(key)
        if hit is not None:
            return hit
        F, e = self.F, self.e
        if not any(b) or not any(c):
            out = {(c, e, b): F.one}
            self._ynorm[key] = out
            return out
        i = next(idx for idx, v in enumerate(b) if v)
        b1 = list(b)
        b1[i] -= 1
        prev = self.ynorm(tuple(b1), c)
        out: dict = {}
        for (a, g, ey), coef in prev.items():
            # y_i x^a g y^ey = x^a g g^{-1}(y_i) y^ey + [y_i, x^a] g y^ey
            ex, j = g.inverse().on_vector(i)
            ey2 = list(ey)
            ey2[j] += 1
            _add_into(out, (a, g, tuple(ey2)), coef * F.zeta(ex))
            for (a2, h), c2 in self._comm_mono(i, a).items():
                _add_into(out, (a2, h * g, ey), coef * c2)
        out = _clean(out)
        self._ynorm[key] = out
        return out

    def mul_mono(self, m1: Mono, m2: Mono) -> dict:
        a, g, b = m1
        c, h, d = m2
        hinv = h.inverse()
        out: dict = {}
        F = self.F
        for (a1, g1, b1), coef in self.ynorm(b, c).items():
            e1, a2 = act_x(g, a1)
            e2, b2 = act_y(hinv, b1)
            _add_into(out, (_addv(a, a2), g * g1 * h, _addv(b2, d)), coef * F.zeta(e1 + e2))
        return out

    # -- element constructors -------------------------------------------------

    def elem(self, terms: dict) -> "CherElem":
        return CherElem(self, _clean(terms))

    def scalar(self, c) -> "CherElem":
        c = c if isinstance(c, CycloNum) else self.F.const(c)
        return self.elem({(self.zero_deg, self.e, self.zero_deg): c})

    def one(self) -> "CherElem":
        return self.scalar(1)

    def zero(self) -> "CherElem":
        return CherElem(self, {})

    def x(self, i: int) -> "CherElem":
        a = [0] * self.n
        a[i] = 1
        return self.elem({(tuple(a), self.e, self.zero_deg): self.F.one})

    def y(self, i: int) -> "CherElem":
        b = [0] * self.n
        b[i] = 1
        return self.elem({(self.zero_deg, self.e, tuple(b)): self.F.one})

    def group(self, g: GroupElem) -> "CherElem":
        return self.elem({(self.zero_deg, g, self.zero_deg): self.F.one})

    def group_algebra(self, coeffs: dict[GroupElem, CycloNum]) -> "CherElem":
        return self.elem({(self.zero_deg, g, self.zero_deg): c for g, c in coeffs.items()})

    # -- Dunkl-type elements --------------------------------------------------

    def k_tilde(self, i: int, j: int) -> "CherElem":
        """(kbar0 / 2) sum_{m=0}^{r-1} (xi_i^m xi_j^{-m} + xi_j^m xi_i^{-m}) in C T."""
        r, n = self.r, self.n
        half = self.params.kbar0 * Fraction(1, 2)
        acc: dict = {}
        for m in range(r):
            for g in (theta(r, n, i, m) * theta(r, n, j, -m), theta(r, n, j, m) * theta(r, n, i, -m)):
                _add_into(acc, (self.zero_deg, g, self.zero_deg), half)
        return self.elem(acc)

    @cached_property
    def dunkl(self) -> list["CherElem"]:
        r, n = self.r, self.n
        out = []
        for j in range(n):
            d = self.y(j) * self.x(j)
            for i in range(j):
                # plus sign: with the minus sign the D_j fail to commute
                d = d + self.k_tilde(i, j) * self.group(reflection(r, n, "s", (i, j), 0))
            out.append(d)
        return out

    def dunkl_D(self, j: int) -> "CherElem":
        return self.dunkl[j]

    def simple(self, i: int) -> "CherElem":
        return self.group(perm_elem(self.r, simple_reflection(self.n, i)))

    def cross_constant(self, i: int) -> dict[GroupElem, CycloNum]:
        """X_i = s_i D_i - D_{i+1} s_i, which must lie in the group algebra."""
        s = self.simple(i)
        X = s * self.dunkl[i] - self.dunkl[i + 1] * s
        part = X.group_part()
        if part is None:
            raise ArithmeticError(f"s_{i} D_{i} - D_{i + 1} s_{i} has positive degree")
        return part

    @cached_property
    def cross_constants(self) -> list[dict[GroupElem, CycloNum]]:
        return [self.cross_constant(i) for i in range(self.n - 1)]


    def random_elem(self, rng, terms: int = 2, max_deg: int = 1) -> "CherElem":
        """Random element with x- and y-degrees at most max_deg (deterministic for a seeded rng)."""
        from .refl_group import all_elements
        group = all_elements(self.r, self.n)

        def deg():
            a = [0] * self.n
            for _ in range(rng.randint(0, max_deg)):
                a[rng.randrange(self.n)] += 1
            return tuple(a)

        acc: dict = {}
        for _ in range(terms):
            c = self.F.from_coeffs([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                    for _ in range(self.F.phi)])
            _add_into(acc, (deg(), rng.choice(group), deg()), c)
        return self.elem(acc)


class CherElem:
    """Element of H(G, k) in PBW normal form; zero coefficients are never stored."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: CherednikAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _lift(self, other) -> "CherElem":
        if isinstance(other, CherElem):
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(acc, k, v)
        return CherElem(self.alg, _clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return CherElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            if not other:
                return CherElem(self.alg, {})
            return CherElem(self.alg, {k: v * other for k, v in self.terms.items()})
        acc: dict = {}
        mul = self.alg.mul_mono
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for k, v in mul(m1, m2).items():
                    _add_into(acc, k, v * c)
        return CherElem(self.alg, _clean(acc))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        acc = self.alg.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, CherElem):
            other = self._lift(other)
        return self.terms == other.terms

    def __hash__(self):  # pragma: no cover - elements are mutable-looking values
        raise TypeError("CherElem is unhashable")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(a) + sum(b) for a, _, b in self.terms), default=-1)

    def top_part(self) -> dict:
        d = self.degree()
        return {k: v for k, v in self.terms.items() if sum(k[0]) + sum(k[2]) == d}

    def group_part(self) -> dict[GroupElem, CycloNum] | None:
        """The element as a group-algebra element, or None if it has positive degree."""
        out = {}
        for (a, g, b), c in self.terms.items():
            if any(a) or any(b):
                return None
            out[g] = c
        return out

    def to_json(self) -> list[dict]:
        return [{"x": list(a), "g": g.to_json(), "y": list(b), "c": str(c)}
                for (a, g, b), c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]

    @classmethod
    def from_json(cls, alg: CherednikAlgebra, data: list[dict]) -> "CherElem":
        terms: dict = {}
        for item in data:
            key = (tuple(item["x"]), GroupElem.from_json(item["g"], alg.r), tuple(item["y"]))
            _add_into(terms, key, CycloNum.parse(alg.r, item["c"]))
        return CherElem(alg, _clean(terms))

    def __repr__(self):
        return json.dumps(self.to_json())


def torus_part_only(coeffs: dict[GroupElem, CycloNum]) -> bool:
    return all(g.perm == tuple(range(g.n)) for g in coeffs)


__all__ = ["Params", "CherednikAlgebra", "CherElem", "act_x", "act_y", "torus_elem"]
