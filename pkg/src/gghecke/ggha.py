"""The generalized graded Hecke algebra H_k(r,n) as a normal-form engine.

Basis monomials are ``w theta^t D^a`` (permutation leftmost, then the torus
monomial, then a commuting D-monomial).  The only non-trivial rule moves a D past
a simple reflection::

    D_j s_i = s_i D_{s_i(j)} + Y_{i,j},   Y_{i,i+1} = -X_i,  Y_{i,i} = s_i X_i s_i,

where ``X_i = s_i D_i - D_{i+1} s_i`` is the group-algebra constant measured in
the Cherednik realization (:meth:`CherednikAlgebra.cross_constants`).
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from .cherednik import CherednikAlgebra, CherElem, Params
from .cyclo import CycloNum, field
from .refl_group import (GroupElem, Perm, compose, identity_perm, inverse_perm, inversion_set,
                         perm_elem, perm_from_str, perm_to_str, reduced_word, sign,
                         simple_reflection, torus_elem, transposition, twist)

Mono = tuple[Perm, tuple[int, ...], tuple[int, ...]]


def _add_into(acc: dict, key, val) -> None:
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


class GghaAlgebra:
    """H_k(r,n) with cross constants X_i given as group-algebra elements."""

    def __init__(self, r: int, n: int, kbar0, cross: list[dict[GroupElem, CycloNum]] | None = None):
        self.r, self.n = r, n
        self.F = field(r)
        self.kbar0 = kbar0 if isinstance(kbar0, CycloNum) else self.F.const(kbar0)
        if cross is None:
            cross = CherednikAlgebra(Params(r, n, (0,) * (r - 1), self.kbar0)).cross_constants
        self.id_perm = identity_perm(n)
        self.zero_t = (0,) * n
        self.zero_a = (0,) * n
        self._ds: dict = {}
        self._dw: dict = {}
        self.X = [self.group_algebra(c) for c in cross]
        self._Y = {}
        for i in range(n - 1):
            s = self.perm(simple_reflection(n, i))
            self._Y[(i, i + 1)] = -self.X[i]
            self._Y[(i, i)] = s * self.X[i] * s

    @classmethod
    def from_cherednik(cls, alg: CherednikAlgebra) -> "GghaAlgebra":
        return cls(alg.r, alg.n, alg.params.kbar0, alg.cross_constants)

    # -- constructors -----------------------------------------------------------

    def elem(self, terms: dict) -> "GghaElem":
        return GghaElem(self, _clean(terms))

    def scalar(self, c) -> "GghaElem":
        c = c if isinstance(c, CycloNum) else self.F.const(c)
        return self.elem({(self.id_perm, self.zero_t, self.zero_a): c})

    def one(self) -> "GghaElem":
        return self.scalar(1)

    def zero(self) -> "GghaElem":
        return GghaElem(self, {})

    def D(self, i: int) -> "GghaElem":
        a = [0] * self.n
        a[i] = 1
        return self.elem({(self.id_perm, self.zero_t, tuple(a)): self.F.one})

    def D_mono(self, a: tuple[int, ...]) -> "GghaElem":
        return self.elem({(self.id_perm, self.zero_t, tuple(a)): self.F.one})

    def theta(self, i: int, t: int = 1) -> "GghaElem":
        tor = [0] * self.n
        tor[i] = t % self.r
        return self.elem({(self.id_perm, tuple(tor), self.zero_a): self.F.one})

    def torus(self, t: tuple[int, ...]) -> "GghaElem":
        return self.elem({(self.id_perm, tuple(x % self.r for x in t), self.zero_a): self.F.one})

    def perm(self, w: Perm) -> "GghaElem":
        return self.elem({(tuple(w), self.zero_t, self.zero_a): self.F.one})

    def simple(self, i: int) -> "GghaElem":
        return self.perm(simple_reflection(self.n, i))

    def monomial(self, w: Perm, t, a) -> "GghaElem":
        return self.elem({(tuple(w), tuple(x % self.r for x in t), tuple(a)): self.F.one})

    def group(self, g: GroupElem) -> "GghaElem":
        # (t, w) = theta^t w = w theta^{t'}
        return self.elem({(g.perm, g.conjugate_torsion(), self.zero_a): self.F.one})

    def group_algebra(self, coeffs: dict[GroupElem, CycloNum]) -> "GghaElem":
        acc: dict = {}
        for g, c in coeffs.items():
            _add_into(acc, (g.perm, g.conjugate_torsion(), self.zero_a), c)
        return self.elem(acc)

    def k_tilde(self, i: int, j: int) -> "GghaElem":
        """(kbar0/2) sum_{m=0}^{r-1} (theta_i^m theta_j^{-m} + theta_j^m theta_i^{-m})."""
        half = self.kbar0 * Fraction(1, 2)
        acc: dict = {}
        for m in range(self.r):
            for a, b in ((i, j), (j, i)):
                t = [0] * self.n
                t[a] = (t[a] + m) % self.r
                t[b] = (t[b] - m) % self.r
                _add_into(acc, (self.id_perm, tuple(t), self.zero_a), half)
        return self.elem(acc)

    def generators(self) -> list[tuple[str, "GghaElem"]]:
        """The fixed generator list D_1..D_n, theta_1..theta_n, s_1..s_{n-1}."""
        gens = [(f"D{i + 1}", self.D(i)) for i in range(self.n)]
        gens += [(f"t{i + 1}", self.theta(i)) for i in range(self.n)]
        gens += [(f"s{i + 1}", self.simple(i)) for i in range(self.n - 1)]
        return gens

    def mono_word(self, key: Mono) -> tuple[str, ...]:
        """Generator word for w theta^t D^a (w spelled by its reduced word)."""
        w, t, a = key
        word = [f"s{i + 1}" for i in reduced_word(w)]
        for i, k in enumerate(t):
            word += [f"t{i + 1}"] * k
        for i, k in enumerate(a):
            word += [f"D{i + 1}"] * k
        return tuple(word)

    def relations(self) -> list:
        """Defining relations, as linear combinations of generator words acting by zero."""
        F, n = self.F, self.n
        one = F.one
        rels = []

        def comm(label, a, b):
            rels.append((label, [(one, a + b), (-one, b + a)]))

        for i in range(n):
            rels.append((f"t{i + 1}^r", [(one, (f"t{i + 1}",) * self.r), (-one, ())]))
            for j in range(n):
                if i < j:
                    comm(f"[D{i + 1},D{j + 1}]", (f"D{i + 1}",), (f"D{j + 1}",))
                    comm(f"[t{i + 1},t{j + 1}]", (f"t{i + 1}",), (f"t{j + 1}",))
                comm(f"[t{i + 1},D{j + 1}]", (f"t{i + 1}",), (f"D{j + 1}",))
        for i in range(n - 1):
            s = f"s{i + 1}"
            rels.append((f"{s}^2", [(one, (s, s)), (-one, ())]))
            for j in range(n - 1):
                if j == i + 1:
                    s2 = f"s{j + 1}"
                    rels.append((f"braid {s},{s2}", [(one, (s, s2, s)), (-one, (s2, s, s2))]))
                elif j > i + 1:
                    comm(f"[{s},s{j + 1}]", (s,), (f"s{j + 1}",))
            sw = simple_reflection(n, i)
            for j in range(n):
                rels.append((f"{s} t{j + 1}", [(one, (s, f"t{j + 1}")), (-one, (f"t{sw[j] + 1}", s))]))
                if j not in (i, i + 1):
                    comm(f"[{s},D{j + 1}]", (s,), (f"D{j + 1}",))
            terms = [(one, (s, f"D{i + 1}")), (-one, (f"D{i + 2}", s))]
            terms += [(-c, self.mono_word(k)) for k, c in self.X[i].terms.items()]
            rels.append((f"{s} D{i + 1} cross", terms))
        return rels

    # -- normal ordering --------------------------------------------------------

    def _times_group(self, terms: dict, u: Perm, t: tuple[int, ...], out: dict, coef) -> None:
        """Accumulate coef * (u theta^t) * terms into out."""
        r = self.r
        for (v, q, e), c in terms.items():
            # theta^t v = v theta^{v^{-1} t},  (v^{-1} t)_i = t_{v(i)}
            tt = tuple((t[v[i]] + q[i]) % r for i in range(self.n))
            _add_into(out, (compose(u, v), tt, e), c * coef)

    def d_times_simple(self, b: tuple[int, ...], i: int) -> dict:
        """Normal form of D^b s_i."""
        key = (b, i)
        hit = self._ds.get(key)
        if hit is not None:
            return hit
        s = simple_reflection(self.n, i)
        if not any(b):
            out = {(s, self.zero_t, self.zero_a): self.F.one}
            self._ds[key] = out
            return out
        j = next(idx for idx, v in enumerate(b) if v)
        b1 = list(b)
        b1[j] -= 1
        b1 = tuple(b1)
        out: dict = {}
        # D^{b1} D_j s_i = (D^{b1} s_i) D_{s_i(j)} + D^{b1} Y_{i,j}
        sj = s[j]
        for (u, t, e), c in self.d_times_simple(b1, i).items():
            e2 = list(e)
            e2[sj] += 1
            _add_into(out, (u, t, tuple(e2)), c)
        Y = self._Y.get((i, j))
        if Y is not None:
            for (u, t, e), c in Y.terms.items():
                # Y is a group-algebra element: u theta^t with e = 0
                for (v, q, f), c2 in self.d_times_perm(b1, u).items():
                    tt = tuple((q[k] + t[k]) % self.r for k in range(self.n))
                    _add_into(out, (v, tt, f), c * c2)
        out = _clean(out)
        self._ds[key] = out
        return out

    def d_times_perm(self, a: tuple[int, ...], w: Perm, word: tuple[int, ...] | None = None) -> dict:
        """Normal form of D^a w, peeling simple reflections along a reduced word of w."""
        if word is None:
            word = reduced_word(w)
        key = (a, w, word)
        hit = self._dw.get(key)
        if hit is not None:
            return hit
        if not any(a):
            out = {(tuple(w), self.zero_t, self.zero_a): self.F.one}
        else:
            cur = {(self.id_perm, self.zero_t, a): self.F.one}
            for i in word:
                nxt: dict = {}
                for (u, t, e), c in cur.items():
                    self._times_group(self.d_times_simple(e, i), u, t, nxt, c)
                cur = _clean(nxt)
            out = cur
        self._dw[key] = out
        return out

    def mul_mono(self, m1: Mono, m2: Mono) -> dict:
        w1, t1, a1 = m1
        w2, t2, a2 = m2
        out: dict = {}
        r, n = self.r, self.n
        for (u, s, b), c in self.d_times_perm(a1, w2).items():
            tt = tuple((t1[u[i]] + s[i] + t2[i]) % r for i in range(n))
            _add_into(out, (compose(w1, u), tt, tuple(x + y for x, y in zip(b, a2))), c)
        return out

    def multiply(self, *elems: "GghaElem") -> "GghaElem":
        acc = elems[0]
        for e in elems[1:]:
            acc = acc * e
        return acc

    # -- closed commutation formula ---------------------------------------------

    def commute_closed_form(self, w: Perm, zeta: list) -> "GghaElem":
        """Evaluate  w(zeta) w - sum_{(i,j) in R(w^{-1})} <i,j | w(zeta)> (i,j) w k~_{w^{-1}(i), w^{-1}(j)}.

        ``zeta`` lists the coefficients of zeta = sum_j zeta_j D_j.  The pairing
        that matches the rewriting engine is <i,j | y> = y_j - y_i (i < j).
        """
        F = self.F
        zeta = [z if isinstance(z, CycloNum) else F.const(z) for z in zeta]
        wz = twist(w, tuple(zeta))
        lin = self.zero()
        for i, c in enumerate(wz):
            if c:
                lin = lin + self.D(i) * c
        out = lin * self.perm(w)
        winv = inverse_perm(w)
        for i, j in sorted(inversion_set(winv)):
            coef = wz[j] - wz[i]
            if not coef:
                continue
            corr = self.perm(transposition(self.n, i, j)) * self.perm(w) * self.k_tilde(winv[i], winv[j])
            out = out - corr * coef
        return out

    # -- center, automorphisms --------------------------------------------------

    def center_check(self, z: "GghaElem") -> bool:
        gens = [self.D(i) for i in range(self.n)] + [self.theta(0)]
        gens += [self.simple(i) for i in range(self.n - 1)]
        return all((z * g - g * z).is_zero() for g in gens)

    def apply_morphism(self, kind: str, a: "GghaElem") -> "GghaElem":
        """delta (automorphism, theta -> det(theta) theta) or iota (anti-automorphism)."""
        F = self.F
        if kind == "delta":
            return self.elem({(w, t, e): c * F.zeta(sum(t)) for (w, t, e), c in a.terms.items()})
        if kind == "iota":
            out = self.zero()
            for (w, t, e), c in a.terms.items():
                # iota(w theta^t D^e) = (-1)^{|e|} D^e * det(theta^t) theta^{-t} * sign(w) w^{-1}
                coef = c * F.zeta(sum(t)) * ((-1) ** sum(e)) * sign(w)
                term = self.D_mono(e) * self.torus(tuple(-x for x in t)) * self.perm(inverse_perm(w))
                out = out + term * coef
            return out
        raise ValueError(f"unknown morphism {kind!r}")

    # -- realization --------------------------------------------------------------

    def psi(self, a: "GghaElem", cher: CherednikAlgebra) -> CherElem:
        """Image under e_i -> D_i, t_g -> g in the Cherednik algebra."""
        out = cher.zero()
        cache: dict = {}
        for (w, t, e), c in a.terms.items():
            g = perm_elem(self.r, w) * torus_elem(self.r, t)
            mono = cache.get(e)
            if mono is None:
                mono = cher.one()
                for i, k in enumerate(e):
                    for _ in range(k):
                        mono = mono * cher.dunkl[i]
                cache[e] = mono
            out = out + cher.group(g) * mono * c
        return out

    # -- random elements ----------------------------------------------------------

    def random_elem(self, rng: random.Random, terms: int = 3, max_deg: int = 2) -> "GghaElem":
        from .refl_group import all_perms
        perms = all_perms(self.n)
        acc: dict = {}
        for _ in range(terms):
            w = rng.choice(perms)
            t = tuple(rng.randrange(self.r) for _ in range(self.n))
            deg = rng.randint(0, max_deg)
            a = [0] * self.n
            for _ in range(deg):
                a[rng.randrange(self.n)] += 1
            c = self.F.from_coeffs([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                    for _ in range(self.F.phi)])
            _add_into(acc, (w, t, tuple(a)), c)
        return self.elem(acc)


class GghaElem:
    """Element of H_k(r,n) in PBW normal form; zero coefficients are never stored."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: GghaAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _lift(self, other) -> "GghaElem":
        if isinstance(other, GghaElem):
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(acc, k, v)
        return GghaElem(self.alg, _clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return GghaElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            if not other:
                return GghaElem(self.alg, {})
            return GghaElem(self.alg, {k: v * other for k, v in self.terms.items()})
        acc: dict = {}
        mul = self.alg.mul_mono
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for k, v in mul(m1, m2).items():
                    _add_into(acc, k, v * c)
        return GghaElem(self.alg, _clean(acc))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        acc = self.alg.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, GghaElem):
            other = self._lift(other)
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def d_degree(self) -> int:
        return max((sum(a) for _, _, a in self.terms), default=-1)

    def to_json(self) -> list[dict]:
        return [{"w": perm_to_str(w), "t": list(t), "a": list(a), "c": str(c)}
                for (w, t, a), c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]

    @classmethod
    def from_json(cls, alg: GghaAlgebra, data: list[dict]) -> "GghaElem":
        acc: dict = {}
        for item in data:
            key = (perm_from_str(item["w"]), tuple(int(x) % alg.r for x in item["t"]), tuple(item["a"]))
            _add_into(acc, key, CycloNum.parse(alg.r, item["c"]))
        return GghaElem(alg, _clean(acc))

    def __repr__(self):
        return json.dumps(self.to_json())


def elementary_symmetric_D(alg: GghaAlgebra, k: int) -> GghaElem:
    from itertools import combinations
    out = alg.zero()
    for idx in combinations(range(alg.n), k):
        a = [0] * alg.n
        for i in idx:
            a[i] = 1
        out = out + alg.D_mono(tuple(a))
    return out


def torus_orbit_sum(alg: GghaAlgebra, t: tuple[int, ...]) -> GghaElem:
    """Sum of the distinct S_n-permutations of theta^t (an element of C T^{S_n})."""
    from itertools import permutations
    seen = {tuple(t[i] for i in p) for p in permutations(range(alg.n))}
    out = alg.zero()
    for tt in sorted(seen):
        out = out + alg.torus(tt)
    return out
