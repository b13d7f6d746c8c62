"""Exact arithmetic in the cyclotomic field Q(z), z a primitive r-th root of unity.

Elements are stored as coefficient vectors of length phi(r) in the power basis
1, z, ..., z^(phi(r)-1), always reduced modulo the r-th cyclotomic polynomial,
so equality is plain tuple equality.

>>> z = zeta_pow(4, 1)
>>> z * z
-1
>>> zeta_pow(3, 1) + zeta_pow(3, 2)
-1
>>> CycloNum.parse(3, "1/2 - z^2")
3/2 + z
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = ["CycloNum", "CycloField", "field", "zeta_pow", "cyclotomic_poly", "totient"]


def totient(r: int) -> int:
    result, m, p = r, r, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # low-to-high coefficients; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1]
        q[i] = coef
        if coef:
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the r-th cyclotomic polynomial."""
    if r < 1:
        raise ValueError(f"root order must be positive, got {r}")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


class CycloField:
    """Per-r constants: degree, reduction table for z^e, cached roots of unity."""

    __slots__ = ("r", "phi", "modulus", "_reduce", "_powers", "zero", "one")

    def __init__(self, r: int):
        if r < 1:
            raise ValueError(f"root order must be positive, got {r}")
        self.r = r
        self.phi = totient(r)
        self.modulus = cyclotomic_poly(r)
        phi = self.phi
        # z^e reduced, for 0 <= e < max(2*phi - 1, r)
        table: list[tuple[Fraction, ...]] = []
        cur = [Fraction(0)] * phi
        cur[0] = Fraction(1)
        for _ in range(max(2 * phi - 1, r)):
            table.append(tuple(cur))
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                for k in range(phi):
                    nxt[k] -= top * self.modulus[k]
            cur = nxt
        self._reduce = table
        self.zero = CycloNum._make(r, (Fraction(0),) * phi)
        self.one = CycloNum._make(r, table[0])
        self._powers = tuple(CycloNum._make(r, table[e]) for e in range(r))

    def zeta(self, e: int) -> "CycloNum":
        return self._powers[e % self.r]

    def const(self, q) -> "CycloNum":
        vec = [Fraction(0)] * self.phi
        vec[0] = Fraction(q)
        return CycloNum._make(self.r, tuple(vec))

    def from_coeffs(self, coeffs) -> "CycloNum":
        """Element sum_e coeffs[e] z^e for an arbitrary-length coefficient list."""
        vec = [Fraction(0)] * self.phi
        for e, c in enumerate(coeffs):
            if not c:
                continue
            c = Fraction(c)
            row = self._reduce[e] if e < len(self._reduce) else self._reduce[e % self.r]
            for k, v in enumerate(row):
                if v:
                    vec[k] += c * v
        return CycloNum._make(self.r, tuple(vec))


@lru_cache(maxsize=None)
def field(r: int) -> CycloField:
    return CycloField(r)


def zeta_pow(r: int, e: int) -> "CycloNum":
    """The canonical element z_r^e."""
    return field(r).zeta(e)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] / lead
        q[i] = coef
        if coef:
            for j, d in enumerate(b):
                a[i + j] -= coef * d
    return q, _poly_trim(a[: len(b) - 1])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim([Fraction(x) for x in out])


class CycloNum:
    """Immutable element of Q(z_r)."""

    __slots__ = ("r", "c", "_hash")

    def __init__(self, r: int, coeffs=None):
        if r < 1:
            raise ValueError(f"root order must be positive, got {r}")
        F = field(r)
        if coeffs is None:
            coeffs = ()
        built = F.from_coeffs(coeffs)
        self.r = r
        self.c = built.c
        self._hash = None

    @classmethod
    def _make(cls, r: int, c: tuple) -> "CycloNum":
        obj = object.__new__(cls)
        obj.r = r
        obj.c = c
        obj._hash = None
        return obj

    # -- construction ---------------------------------------------------------

    @classmethod
    def rational(cls, r: int, q) -> "CycloNum":
        return field(r).const(q)

    @classmethod
    def parse(cls, r: int, text: str) -> "CycloNum":
        """Parse "a0 + a1*z + a2*z^2" style text; rationals may be written p/q."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty cyclotomic literal")
        if s[0] not in "+-":
            s = "+" + s
        # split before every sign that is not part of an exponent
        parts = re.findall(r"[+-](?:[^+\-^]|\^-?\d+)*", s)
        if "".join(parts) != s:
            raise ValueError(f"cannot parse cyclotomic literal {text!r}")
        coeffs: dict[int, Fraction] = {}
        for part in parts:
            sign, body = part[0], part[1:]
            if not body:
                raise ValueError(f"cannot parse cyclotomic literal {text!r}")
            if "z" in body:
                head, _, tail = body.partition("z")
                head = head.rstrip("*")
                coef = Fraction(head) if head else Fraction(1)
                if tail:
                    if not tail.startswith("^"):
                        raise ValueError(f"cannot parse cyclotomic literal {text!r}")
                    exp = int(tail[1:])
                else:
                    exp = 1
            else:
                try:
                    coef = Fraction(body)
                except ValueError as exc:
                    raise ValueError(f"cannot parse cyclotomic literal {text!r}") from exc
                exp = 0
            if sign == "-":
                coef = -coef
            exp %= r
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
        top = max(coeffs) if coeffs else 0
        return field(r).from_coeffs([coeffs.get(e, 0) for e in range(top + 1)])

    # -- helpers --------------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.r != self.r:
                raise ValueError(f"mismatched root orders {self.r} and {other.r}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return field(self.r).const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self) -> bool:
        return any(self.c)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._make(self.r, tuple(x + y for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.r, tuple(-x for x in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._make(self.r, tuple(x - y for x, y in zip(self.c, other.c)))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._make(self.r, tuple(x * other for x in self.c))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        phi = len(a)
        if phi == 1:
            return CycloNum._make(self.r, (a[0] * b[0],))
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        table = field(self.r)._reduce
        for e in range(phi, 2 * phi - 1):
            p = prod[e]
            if p:
                for k, v in enumerate(table[e]):
                    if v:
                        out[k] += p * v
        return CycloNum._make(self.r, tuple(Fraction(x) for x in out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse by the extended Euclidean algorithm against Phi_r."""
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero in Q(z)")
        if len(self.c) == 1:
            return CycloNum._make(self.r, (1 / self.c[0],))
        F = field(self.r)
        a = _poly_trim(list(self.c))
        m = [Fraction(x) for x in F.modulus]
        # invariant: s*a == old_r (mod m)
        old_r, cur_r = m, a
        old_s, cur_s = [], [Fraction(1)]
        while cur_r:
            q, rem = _poly_divmod(old_r, cur_r)
            old_r, cur_r = cur_r, rem
            old_s, cur_s = cur_s, _poly_sub(old_s, _poly_mul(q, cur_s))
        # old_r is a nonzero constant since Phi_r is irreducible
        assert len(old_r) == 1
        inv = [x / old_r[0] for x in old_s]
        return F.from_coeffs(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = field(self.r).one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.r == other.r and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.c[1:]):
                self._hash = hash(self.c[0])
            else:
                self._hash = hash((self.r, self.c))
        return self._hash

    # -- display --------------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for e, x in enumerate(self.c):
            if not x:
                continue
            if e == 0:
                body, neg = str(abs(x)), x < 0
            else:
                zpart = "z" if e == 1 else f"z^{e}"
                body = zpart if abs(x) == 1 else f"{abs(x)}*{zpart}"
                neg = x < 0
            if not terms:
                terms.append(("-" if neg else "") + body)
            else:
                terms.append((" - " if neg else " + ") + body)
        return "".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return str(self)

    def to_complex(self) -> complex:
        """Floating value under z -> exp(2 pi i / r); debug printing only."""
        w = cmath.exp(2j * cmath.pi / self.r)
        return sum(complex(float(x)) * w**e for e, x in enumerate(self.c))
