"""Brute-force irreducibility and composition length for small exact modules.

Every nonzero submodule contains a simultaneous eigenvector of the commutative
weight generators, so when all joint eigenspaces are lines it suffices to spin
each eigenvector.  Otherwise a Norton-type test is tried, and as a last resort
the eigenspace (dimension <= 2) is searched along a pencil.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .cyclo import CycloNum, field
from .linalg import (Matrix, Subspace, Vector, det, field_roots, identity, joint_eigenspaces,
                     matmul, matvec, nullspace, rref, transpose)
from .modrep import ModuleRep


class DeskScaleRefusal(RuntimeError):
    """The oracle will not decide this instance at desk scale."""


@dataclass
class SimplicityReport:
    verdict: str  # "simple" or "reducible"
    certificate: str
    witness: Vector | None = None
    submodule: list[Vector] | None = None
    composition_factor_dims: list[int] = dc_field(default_factory=list)

    @property
    def simple(self) -> bool:
        return self.verdict == "simple"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "certificate": self.certificate,
               "composition_factor_dims": sorted(self.composition_factor_dims)}
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
            out["submodule_dim"] = len(self.submodule or [])
        return out


def spin_with(mats: list[Matrix], v: Vector, r: int) -> list[Vector]:
    """Echelon basis of the smallest subspace containing v and stable under mats."""
    if not any(v):
        raise ValueError("cannot spin the zero vector")
    S = Subspace(len(v), r)
    S.add(v)
    queue = [v]
    while queue:
        u = queue.pop()
        for A in mats:
            x = matvec(A, u)
            if S.add(x):
                queue.append(x)
                if len(S) == len(v):
                    return S.rows
    return S.rows


def spin(M: ModuleRep, v: Vector) -> list[Vector]:
    return spin_with(M.gen_list(), v, M.r)


def _check_commuting(mats: list[Matrix]) -> None:
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if matmul(mats[i], mats[j]) != matmul(mats[j], mats[i]):
                raise ArithmeticError("weight generators do not commute: inconsistent module")


def _norton_candidates(M: ModuleRep, rng: random.Random, count: int):
    F = field(M.r)
    gens = M.gen_list()
    words = list(gens) + [matmul(a, b) for a in gens for b in gens]
    for _ in range(count):
        picks = rng.sample(range(len(words)), min(3, len(words)))
        acc = [[F.zero] * M.dim for _ in range(M.dim)]
        for k in picks:
            c = F.const(rng.randint(1, 5) * rng.choice((1, -1)))
            acc = [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(acc, words[k])]
        yield acc


def _norton(M: ModuleRep, attempts: int = 40) -> SimplicityReport | None:
    """Decide simplicity with an element whose kernel is a line, if one turns up."""
    r, d = M.r, M.dim
    F = field(r)
    rng = random.Random(12345)
    gens_t = [transpose(A) for A in M.gen_list()]
    for a in _norton_candidates(M, rng, attempts):
        for lam, _ in field_roots(_charpoly(a)):
            N = [[a[i][j] - (lam if i == j else F.zero) for j in range(d)] for i in range(d)]
            ker = nullspace(N, d, r)
            if len(ker) != 1:
                continue
            sub = spin(M, ker[0])
            if len(sub) < d:
                return SimplicityReport("reducible", "norton-kernel", ker[0], sub)
            kert = nullspace(transpose(N), d, r)
            subt = spin_with(gens_t, kert[0], r)
            if len(subt) < d:
                # the annihilator of span(subt) is a proper submodule
                ann = nullspace(subt, d, r)
                return SimplicityReport("reducible", "norton-cokernel", ann[0], spin(M, ann[0]))
            return SimplicityReport("simple", "norton")
    return None


def _charpoly(A: Matrix):
    from .linalg import charpoly
    return charpoly(A)


def algebra_span(M: ModuleRep) -> list[Matrix]:
    """A linear basis of the image of the algebra in End(M)."""
    d, r = M.dim, M.r
    S = Subspace(d * d, r)
    flat = lambda A: [x for row in A for x in row]
    I = identity(d, r)
    S.add(flat(I))
    found = [I]
    queue = [I]
    while queue:
        X = queue.pop()
        for A in M.gen_list():
            Y = matmul(A, X)
            if S.add(flat(Y)):
                found.append(Y)
                queue.append(Y)
    return found


def _pencil(M: ModuleRep, E: list[Vector]) -> SimplicityReport | None:
    """Search a 2-dimensional eigenspace for a vector spinning to a proper submodule.

    v(t) = e1 + t e2 (plus e2 itself) lies in a proper submodule iff the d x m
    matrix [x_k v(t)] over an algebra basis x_k drops rank; a nonvanishing d x d
    minor is a polynomial of degree <= d in t whose roots in the field are the
    only candidates.
    """
    d, r = M.dim, M.r
    F = field(r)
    e1, e2 = E
    sub = spin(M, e2)
    if len(sub) < d:
        return SimplicityReport("reducible", "pencil", e2, sub)
    basis = algebra_span(M)
    cols1 = [matvec(X, e1) for X in basis]
    cols2 = [matvec(X, e2) for X in basis]

    def mat_at(t):
        return [[cols1[k][i] + t * cols2[k][i] for k in range(len(basis))] for i in range(d)]

    # column selection with a nonzero minor at a rational point; the columns of
    # mat_at(t) span the cyclic submodule of v(t), so a rank drop is a witness
    A = mat_at(F.const(Fraction(1, 7)))
    _, probe = rref(A)
    if len(probe) < d:
        v = [a + Fraction(1, 7) * b for a, b in zip(e1, e2)]
        return SimplicityReport("reducible", "pencil", v, spin(M, v))
    pts = [F.const(k) for k in range(d + 1)]
    vals = [det([[row[c] for c in probe] for row in mat_at(t)]) for t in pts]
    coeffs = _interpolate(pts, vals)
    for t, _ in field_roots(coeffs):
        v = [a + t * b for a, b in zip(e1, e2)]
        sub = spin(M, v)
        if len(sub) < d:
            return SimplicityReport("reducible", "pencil", v, sub)
    return SimplicityReport("simple", "pencil")


def _interpolate(xs: list[CycloNum], ys: list[CycloNum]) -> list[CycloNum]:
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    F = field(xs[0].r)
    coeffs = [F.zero] * n
    for i in range(n):
        basis = [F.one]
        denom = F.one
        for j in range(n):
            if j == i:
                continue
            basis = [F.zero] + basis
            for k in range(len(basis) - 1):
                basis[k] = basis[k] - xs[j] * basis[k + 1]
            denom = denom * (xs[i] - xs[j])
        scale = ys[i] / denom
        for k in range(len(basis)):
            coeffs[k] = coeffs[k] + basis[k] * scale
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def find_submodule(M: ModuleRep) -> SimplicityReport:
    """Simplicity verdict with a proper submodule as witness when reducible."""
    d = M.dim
    if d == 1:
        return SimplicityReport("simple", "dimension-one")
    weights = M.weight_list()
    _check_commuting(weights)
    spaces = joint_eigenspaces(weights, d, M.r)
    wide = []
    for _, E in spaces:
        if len(E) == 1:
            sub = spin(M, E[0])
            if len(sub) < d:
                return SimplicityReport("reducible", "eigenvector", E[0], sub)
        else:
            wide.append(E)
    if not wide:
        return SimplicityReport("simple", "all-eigenvectors-spin-full")
    rep = _norton(M)
    if rep is not None:
        return rep
    for E in wide:
        if len(E) > 2:
            raise DeskScaleRefusal(f"eigenspace of dimension {len(E)} and no Norton element found")
    for E in wide:
        rep = _pencil(M, E)
        if rep is None:
            raise DeskScaleRefusal("pencil search inconclusive")
        if not rep.simple:
            return rep
    return SimplicityReport("simple", "pencil")


def submodule_rep(M: ModuleRep, rows: list[Vector]) -> ModuleRep:
    from .linalg import restrict
    gens = {}
    for k, A in M.gens.items():
        R = restrict(A, rows)
        if R is None:
            raise ArithmeticError("not a submodule")
        gens[k] = R
    return ModuleRep(M.r, [f"b{i}" for i in range(len(rows))], gens, dict(M.params), M.weight_gens)


def quotient_rep(M: ModuleRep, rows: list[Vector]) -> ModuleRep:
    S = Subspace(M.dim, M.r)
    for v in rows:
        S.add(v)
    free = [j for j in range(M.dim) if j not in S.pivots]
    gens = {}
    for k, A in M.gens.items():
        cols = []
        for j in free:
            x = S.reduce([A[i][j] for i in range(M.dim)])
            cols.append([x[i] for i in free])
        gens[k] = transpose(cols) if cols else []
    return ModuleRep(M.r, [f"q{i}" for i in range(len(free))], gens, dict(M.params), M.weight_gens)


def composition_length(M: ModuleRep, bound: int = 24) -> list[int]:
    """Sorted dimensions of the composition factors of M."""
    if M.dim > bound:
        raise DeskScaleRefusal(f"dimension {M.dim} exceeds the desk-scale bound {bound}")
    rep = find_submodule(M)
    if rep.simple:
        return [M.dim]
    sub = rep.submodule
    return sorted(composition_length(submodule_rep(M, sub), bound)
                  + composition_length(quotient_rep(M, sub), bound))


def is_simple(M: ModuleRep, factors: bool = False) -> SimplicityReport:
    rep = find_submodule(M)
    if rep.simple:
        rep.composition_factor_dims = [M.dim]
    else:
        sub = rep.submodule
        if not 0 < len(sub) < M.dim:
            raise AssertionError("witness does not span a proper submodule")
        if factors:
            rep.composition_factor_dims = composition_length(M)
    return rep
