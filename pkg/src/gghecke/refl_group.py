"""The group G(r,1,n) = T x| S_n, its reflections, and symmetric-group combinatorics.

Conventions (used by every other module):

* permutations are 0-indexed tuples in one-line notation, ``w[i] = w(i)``, and
  compose as functions, ``(w * u)(i) = w(u(i))``;
* a group element ``(t, w)`` sends the basis vector ``e_i`` to
  ``z^{t_{w(i)}} e_{w(i)}``, i.e. it is ``theta^t`` after the permutation matrix of ``w``;
* twisting moves indices: ``(^w x)_i = x_{w^{-1}(i)}`` for characters and weights.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .cyclo import CycloNum, field

Perm = tuple[int, ...]


# -- permutations -------------------------------------------------------------

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(w: Perm, u: Perm) -> Perm:
    return tuple(w[i] for i in u)


def inverse_perm(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, j in enumerate(w):
        inv[j] = i
    return tuple(inv)


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(n))
    w[i], w[j] = j, i
    return tuple(w)


def simple_reflection(n: int, i: int) -> Perm:
    """s_i = (i, i+1), 0-indexed."""
    return transposition(n, i, i + 1)


def inversion_set(w: Perm) -> frozenset[tuple[int, int]]:
    """R(w) = {(i, j) : i < j, w(j) < w(i)}."""
    n = len(w)
    return frozenset((i, j) for i in range(n) for j in range(i + 1, n) if w[j] < w[i])


def length(w: Perm) -> int:
    return len(inversion_set(w))


def sign(w: Perm) -> int:
    return -1 if length(w) % 2 else 1


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.

    Built by repeatedly stripping the rightmost descent, so the word is
    deterministic for a given w.
    """
    word = []
    cur = list(w)
    n = len(cur)
    while True:
        # right descent of cur at i: cur(i) > cur(i+1); cur = cur' s_i
        desc = [i for i in range(n - 1) if cur[i] > cur[i + 1]]
        if not desc:
            break
        i = desc[-1]
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        word.append(i)
    return tuple(reversed(word))


def longest_element(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """S_n ordered by length, then lexicographically."""
    return tuple(sorted(itertools.permutations(range(n)), key=lambda w: (length(w), w)))


def twist(w: Perm, values: tuple) -> tuple:
    """Index transport (^w x)_i = x_{w^{-1}(i)}."""
    inv = inverse_perm(w)
    return tuple(values[inv[i]] for i in range(len(values)))


def perm_to_str(w: Perm) -> str:
    return "[" + ",".join(str(i + 1) for i in w) + "]"


def perm_from_str(text: str) -> Perm:
    vals = json.loads(text)
    w = tuple(int(v) - 1 for v in vals)
    if sorted(w) != list(range(len(w))):
        raise ValueError(f"not a permutation: {text}")
    return w


# -- the group ----------------------------------------------------------------

class GroupElem(NamedTuple):
    """Element (t, w) of G(r,1,n)."""

    torsion: tuple[int, ...]
    perm: Perm
    r: int

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "GroupElem") -> "GroupElem":  # type: ignore[override]
        t, w, r = self
        t2, w2, _ = other
        inv = inverse_perm(w)
        return GroupElem(tuple((t[i] + t2[inv[i]]) % r for i in range(len(w))),
                         compose(w, w2), r)

    def inverse(self) -> "GroupElem":
        t, w, r = self
        inv = inverse_perm(w)
        # (t,w)^{-1} = (-(w^{-1} t), w^{-1})
        return GroupElem(tuple((-t[w[i]]) % r for i in range(len(w))), inv, r)

    def is_identity(self) -> bool:
        return not any(self.torsion) and self.perm == tuple(range(len(self.perm)))

    def det(self) -> CycloNum:
        """det(t, w) = z^{sum t} sign(w)."""
        d = field(self.r).zeta(sum(self.torsion))
        return -d if sign(self.perm) < 0 else d

    def on_vector(self, i: int) -> tuple[int, int]:
        """Image of e_i as (exponent e, index j): e_i -> z^e e_j."""
        j = self.perm[i]
        return self.torsion[j], j

    def on_covector(self, i: int) -> tuple[int, int]:
        """Image of the dual basis vector alpha_i under the contragredient action."""
        j = self.perm[i]
        return (-self.torsion[j]) % self.r, j

    def matrix(self) -> list[list[CycloNum]]:
        F = field(self.r)
        n = self.n
        M = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            e, j = self.on_vector(i)
            M[j][i] = F.zeta(e)
        return M

    def conjugate_torsion(self) -> tuple[int, ...]:
        """Torsion t' with (t, w) = w * theta^{t'}, i.e. t'_i = t_{w(i)}."""
        t, w, _ = self
        return tuple(t[w[i]] for i in range(len(w)))

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "perm": [i + 1 for i in self.perm]}

    @classmethod
    def from_json(cls, data: dict, r: int) -> "GroupElem":
        return cls(tuple(int(x) % r for x in data["torsion"]),
                   tuple(int(i) - 1 for i in data["perm"]), r)


def identity(r: int, n: int) -> GroupElem:
    return GroupElem((0,) * n, identity_perm(n), r)


def theta(r: int, n: int, i: int, t: int = 1) -> GroupElem:
    """theta_i^t = xi_i^t: multiplies coordinate i by z^t."""
    tor = [0] * n
    tor[i] = t % r
    return GroupElem(tuple(tor), identity_perm(n), r)


def perm_elem(r: int, w: Perm) -> GroupElem:
    return GroupElem((0,) * len(w), tuple(w), r)


def torus_elem(r: int, t: tuple[int, ...]) -> GroupElem:
    return GroupElem(tuple(x % r for x in t), identity_perm(len(t)), r)


def reflection(r: int, n: int, kind: str, indices, exponent: int = 0) -> GroupElem:
    """Complex reflections of G(r,1,n).

    ``kind="xi"``: xi_i^t, indices = i, exponent = t.
    ``kind="s"``: s_{u,v}^{[m]} = theta_u^m theta_v^{-m} (u, v), indices = (u, v),
    exponent = m; it swaps z^m e_u + e_v into itself and negates z^m e_u - e_v.
    """
    if kind == "xi":
        return theta(r, n, int(indices), exponent)
    if kind == "s":
        u, v = indices
        if u == v:
            raise ValueError("s_{u,v} needs u != v")
        tor = [0] * n
        tor[u] = exponent % r
        tor[v] = (-exponent) % r
        return GroupElem(tuple(tor), transposition(n, u, v), r)
    raise ValueError(f"unknown reflection kind {kind!r}")


def all_reflections(r: int, n: int) -> list[GroupElem]:
    refl = [theta(r, n, i, t) for i in range(n) for t in range(1, r)]
    refl += [reflection(r, n, "s", (u, v), m)
             for u in range(n) for v in range(u + 1, n) for m in range(r)]
    return refl


def all_elements(r: int, n: int) -> list[GroupElem]:
    return [GroupElem(t, w, r)
            for w in all_perms(n) for t in itertools.product(range(r), repeat=n)]


def generated_group(gens: list[GroupElem]) -> set[GroupElem]:
    """Closure of a generating set under multiplication."""
    g0 = gens[0]
    seen = {identity(g0.r, g0.n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def group_order(r: int, n: int) -> int:
    return r**n * factorial(n)


# -- characters of T ----------------------------------------------------------

@dataclass(frozen=True)
class TChar:
    """Character of T sending theta_s to z^{index[s]}."""

    r: int
    index: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "index", tuple(int(x) % self.r for x in self.index))

    @property
    def n(self) -> int:
        return len(self.index)

    def r_index(self) -> tuple[int, ...]:
        return tuple(sum(1 for x in self.index if x == j) for j in range(self.r))

    def value(self, torsion: tuple[int, ...]) -> CycloNum:
        return field(self.r).zeta(sum(a * b for a, b in zip(self.index, torsion)))

    def twist(self, w: Perm) -> "TChar":
        return TChar(self.r, twist(w, self.index))

    def inverse(self) -> "TChar":
        return TChar(self.r, tuple(-x for x in self.index))

    def times_det(self, power: int = 1) -> "TChar":
        """Product with (the restriction to T of) det^power."""
        return TChar(self.r, tuple(x + power for x in self.index))

    def is_sorted(self) -> bool:
        return list(self.index) == sorted(self.index)


def det_char(r: int, n: int) -> TChar:
    return TChar(r, (1,) * n)


def orbit_representatives(r: int, n: int) -> list[TChar]:
    """The sorted characters mu_m, one per r-composition m of n."""
    reps = []
    for comp in itertools.product(range(n + 1), repeat=r):
        if sum(comp) == n:
            reps.append(TChar(r, tuple(j for j in range(r) for _ in range(comp[j]))))
    return sorted(reps, key=lambda c: c.index)


def all_chars(r: int, n: int) -> list[TChar]:
    return [TChar(r, idx) for idx in itertools.product(range(r), repeat=n)]


@dataclass(frozen=True)
class SortedChar:
    sigma: Perm
    mu: TChar
    blocks: tuple[tuple[int, ...], ...]


def sort_char(varpi: TChar) -> SortedChar:
    """Stable sort of the n-index: sigma with ^sigma varpi = mu_varpi.

    ``blocks`` are the maximal intervals on which mu_varpi is constant; they are
    the type-A factors of the stabilizer W_varpi (singletons included).
    """
    n = varpi.n
    order = tuple(sorted(range(n), key=lambda i: varpi.index[i]))  # sigma^{-1}
    sigma = inverse_perm(order)
    mu = varpi.twist(sigma)
    assert mu.is_sorted()
    # sigma only separates indices carrying different values
    for i, j in inversion_set(sigma):
        assert varpi.index[i] != varpi.index[j]
    blocks = []
    start = 0
    for i in range(1, n + 1):
        if i == n or mu.index[i] != mu.index[start]:
            blocks.append(tuple(range(start, i)))
            start = i
    return SortedChar(sigma, mu, tuple(blocks))


def stabilizer_transpositions(varpi: TChar) -> list[tuple[int, int]]:
    idx = varpi.index
    return [(u, v) for u in range(len(idx)) for v in range(u + 1, len(idx)) if idx[u] == idx[v]]


def stabilizer(varpi: TChar) -> list[Perm]:
    return [w for w in all_perms(varpi.n) if twist(w, varpi.index) == varpi.index]


def coset_representatives(varpi: TChar) -> list[Perm]:
    """Minimal-length representatives w_1 = id, w_2, ... of S_n / S_n(varpi).

    Two permutations lie in the same left coset iff they twist varpi equally.
    """
    reps: dict[tuple[int, ...], Perm] = {}
    for w in all_perms(varpi.n):
        reps.setdefault(twist(w, varpi.index), w)
    return list(reps.values())


def block_perms(blocks) -> list[Perm]:
    """The Young subgroup permuting indices within each block, in length order."""
    n = sum(len(b) for b in blocks)
    out = []
    for w in all_perms(n):
        if all(sorted(w[i] for i in b) == sorted(b) for b in blocks):
            out.append(w)
    return out
