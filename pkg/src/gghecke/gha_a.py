"""Graded Hecke algebras of type A x ... x A and their principal series.

The group is a Young subgroup W of S_n (given by contiguous blocks) and the
multiplicity is a single constant c.  Elements are stored in the basis
``w lambda^a``.  A polynomial f moves past a simple reflection s = s_i by the
divided-difference rule::

    f s = s (s.f) + c (f - s.f) / (lambda_{i+1} - lambda_i),

equivalently s lambda_i = lambda_{i+1} s - c on generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloNum, field
from .modrep import ModuleRep
from .refl_group import Perm, block_perms, compose, identity_perm, perm_to_str, reduced_word

Poly = dict[tuple[int, ...], CycloNum]


def _add_into(acc: dict, key, val) -> None:
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if v}


def _swap(a: tuple[int, ...], i: int) -> tuple[int, ...]:
    b = list(a)
    b[i], b[i + 1] = b[i + 1], b[i]
    return tuple(b)


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (lambda_{i+1} - lambda_i), computed monomial by monomial."""
    out: Poly = {}
    for a, c in f.items():
        p, q = a[i], a[i + 1]
        if p == q:
            continue
        lo, hi, sgn = (p, q, 1) if q > p else (q, p, -1)
        for k in range(hi - lo):
            b = list(a)
            b[i] = lo + (hi - lo - 1 - k)
            b[i + 1] = lo + k
            _add_into(out, tuple(b), c * sgn)
    return _clean(out)


def _blocks_of(blocks, n: int) -> tuple[tuple[int, ...], ...]:
    if blocks is None:
        return (tuple(range(n)),)
    return tuple(tuple(b) for b in blocks)


class GhaAlgebra:
    """H_gr(c) for the Young subgroup of S_n with the given contiguous blocks."""

    def __init__(self, r: int, n: int, blocks, c):
        self.r, self.n = r, n
        self.F = field(r)
        self.blocks = _blocks_of(blocks, n)
        for b in self.blocks:
            if list(b) != list(range(b[0], b[0] + len(b))):
                raise ValueError(f"block {b} is not an interval")
        self.c = c if isinstance(c, CycloNum) else self.F.const(c)
        self.simple_indices = [i for b in self.blocks for i in b[:-1]]
        self.group = block_perms(self.blocks)
        self.zero_a = (0,) * n
        self._pm: dict = {}

    def poly_times_simple(self, f_mono: tuple[int, ...], i: int) -> dict:
        """lambda^a s_i as {(w, a): coef} with w in {id, s_i}."""
        key = (f_mono, i)
        hit = self._pm.get(key)
        if hit is not None:
            return hit
        s = tuple(i + 1 if k == i else i if k == i + 1 else k for k in range(self.n))
        out = {(s, _swap(f_mono, i)): self.F.one}
        for b, c in divided_difference({f_mono: self.F.one}, i).items():
            _add_into(out, (identity_perm(self.n), b), c * self.c)
        out = _clean(out)
        self._pm[key] = out
        return out

    def poly_times_perm(self, a: tuple[int, ...], w: Perm) -> dict:
        cur = {(identity_perm(self.n), a): self.F.one}
        for i in reduced_word(w):
            nxt: dict = {}
            for (u, b), c in cur.items():
                for (v, e), c2 in self.poly_times_simple(b, i).items():
                    _add_into(nxt, (compose(u, v), e), c * c2)
            cur = _clean(nxt)
        return cur

    def mul_mono(self, m1, m2) -> dict:
        w1, a1 = m1
        w2, a2 = m2
        out: dict = {}
        for (u, b), c in self.poly_times_perm(a1, w2).items():
            _add_into(out, (compose(w1, u), tuple(x + y for x, y in zip(b, a2))), c)
        return out

    # -- elements -----------------------------------------------------------------

    def elem(self, terms: dict) -> "GhaElem":
        return GhaElem(self, _clean(terms))

    def one(self) -> "GhaElem":
        return self.elem({(identity_perm(self.n), self.zero_a): self.F.one})

    def lam(self, i: int) -> "GhaElem":
        a = [0] * self.n
        a[i] = 1
        return self.elem({(identity_perm(self.n), tuple(a)): self.F.one})

    def perm(self, w: Perm) -> "GhaElem":
        return self.elem({(tuple(w), self.zero_a): self.F.one})

    def simple(self, i: int) -> "GhaElem":
        if i not in self.simple_indices:
            raise ValueError(f"s_{i + 1} is not in the Young subgroup")
        s = tuple(i + 1 if k == i else i if k == i + 1 else k for k in range(self.n))
        return self.perm(s)

    def generators(self) -> list[tuple[str, "GhaElem"]]:
        gens = [(f"D{i + 1}", self.lam(i)) for i in range(self.n)]
        gens += [(f"s{i + 1}", self.simple(i)) for i in self.simple_indices]
        return gens

    def relations(self) -> list:
        one = self.F.one
        rels = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                rels.append((f"[D{i + 1},D{j + 1}]", [(one, (f"D{i + 1}", f"D{j + 1}")),
                                                      (-one, (f"D{j + 1}", f"D{i + 1}"))]))
        for i in self.simple_indices:
            s = f"s{i + 1}"
            rels.append((f"{s}^2", [(one, (s, s)), (-one, ())]))
            for j in self.simple_indices:
                s2 = f"s{j + 1}"
                if j == i + 1:
                    rels.append((f"braid {s},{s2}", [(one, (s, s2, s)), (-one, (s2, s, s2))]))
                elif j > i + 1:
                    rels.append((f"[{s},{s2}]", [(one, (s, s2)), (-one, (s2, s))]))
            for j in range(self.n):
                if j not in (i, i + 1):
                    rels.append((f"[{s},D{j + 1}]", [(one, (s, f"D{j + 1}")), (-one, (f"D{j + 1}", s))]))
            rels.append((f"{s} D{i + 1} cross", [(one, (s, f"D{i + 1}")), (-one, (f"D{i + 2}", s)),
                                                 (self.c, ())]))
        return rels


class GhaElem:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: GhaAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other: "GhaElem") -> "GhaElem":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(acc, k, v)
        return GhaElem(self.alg, _clean(acc))

    def __neg__(self):
        return GhaElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return GhaElem(self.alg, _clean({k: v * other for k, v in self.terms.items()}))
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for k, v in self.alg.mul_mono(m1, m2).items():
                    _add_into(acc, k, v * c1 * c2)
        return GhaElem(self.alg, _clean(acc))

    def __eq__(self, other):
        return isinstance(other, GhaElem) and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class KRRoot:
    i: int
    j: int
    difference: CycloNum
    sign: int  # +1 if lambda_i - lambda_j = c, -1 if = -c


def principal_series_A(lam, blocks, c, r: int = 1) -> ModuleRep:
    """M(lambda) = H_gr(c) (x)_{S(V)} C_lambda with basis t_w (x) m, w in W."""
    F = field(r)
    lam = tuple(x if isinstance(x, CycloNum) else F.const(x) for x in lam)
    n = len(lam)
    alg = GhaAlgebra(r, n, blocks, c)
    basis = alg.group
    index = {w: k for k, w in enumerate(basis)}
    d = len(basis)
    gens = {}
    for name, g in alg.generators():
        A = [[F.zero] * d for _ in range(d)]
        for col, w in enumerate(basis):
            prod = g * alg.perm(w)
            for (u, a), coef in prod.terms.items():
                val = coef
                for x, e in zip(lam, a):
                    if e:
                        val = val * x ** e
                A[index[u]][col] = A[index[u]][col] + val
        gens[name] = A
    params = {"algebra": "gha_a", "n": n, "blocks": [list(b) for b in alg.blocks],
              "c": str(alg.c), "lambda": [str(x) for x in lam]}
    return ModuleRep(r, [perm_to_str(w) for w in basis], gens, params,
                     tuple(f"D{i + 1}" for i in range(n)))


def kr_set(lam, blocks, c, r: int = 1) -> list[KRRoot]:
    """Positive roots e_i - e_j (i < j in one block) with lambda_i - lambda_j = +-c."""
    F = field(r)
    lam = [x if isinstance(x, CycloNum) else F.const(x) for x in lam]
    c = c if isinstance(c, CycloNum) else F.const(c)
    out = []
    for b in _blocks_of(blocks, len(lam)):
        for p, i in enumerate(b):
            for j in b[p + 1:]:
                diff = lam[i] - lam[j]
                if diff == c:
                    out.append(KRRoot(i, j, diff, 1))
                elif diff == -c:
                    out.append(KRRoot(i, j, diff, -1))
    return out


def gha_algebra_for(M: ModuleRep) -> GhaAlgebra:
    p = M.params
    return GhaAlgebra(M.r, p["n"], p["blocks"], CycloNum.parse(M.r, p["c"]))
