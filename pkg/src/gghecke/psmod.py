"""Principal series modules M(gamma~) over H_k(r,n) as explicit matrices.

M(gamma~) is induced from the character gamma (x) mu of C = S(V_0) (x) CT.  Its
basis is {w (x) m : w in S_n} in length order; a generator g acts on w (x) m by
normalizing g.w in the ggha engine and evaluating the C-part on m.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycloNum, field
from .gha_a import gha_algebra_for
from .ggha import GghaAlgebra, GghaElem
from .linalg import (Matrix, det, joint_eigenspaces, nullspace, restrict, transpose,
                     zeros)
from .modrep import ModuleRep
from .refl_group import (Perm, TChar, all_chars, all_perms, block_perms, coset_representatives,
                         inverse_perm, longest_element, perm_to_str, reduced_word, sort_char,
                         stabilizer, stabilizer_transpositions, transposition, twist)


@dataclass(frozen=True)
class CChar:
    """gamma (x) mu: D_i -> gamma_i, theta^t -> mu(theta^t)."""

    gamma: tuple[CycloNum, ...]
    mu: TChar

    def __post_init__(self):
        F = field(self.mu.r)
        g = tuple(x if isinstance(x, CycloNum) else F.const(x) for x in self.gamma)
        if len(g) != self.mu.n:
            raise ValueError("gamma and mu have different ranks")
        object.__setattr__(self, "gamma", g)

    @property
    def r(self) -> int:
        return self.mu.r

    @property
    def n(self) -> int:
        return self.mu.n

    def value(self, t: tuple[int, ...], a: tuple[int, ...]) -> CycloNum:
        v = self.mu.value(t)
        for x, e in zip(self.gamma, a):
            if e:
                v = v * x ** e
        return v

    def twist(self, w: Perm) -> "CChar":
        return CChar(twist(w, self.gamma), self.mu.twist(w))

    def dual(self) -> "CChar":
        """Character of M(gamma~)*: (-^{w0}gamma) (x) det.(^{w0}mu)^{-1}."""
        w0 = longest_element(self.n)
        return CChar(tuple(-x for x in twist(w0, self.gamma)), self.mu.twist(w0).inverse().times_det())

    def naive_dual(self) -> "CChar":
        """(-^{w0}gamma) (x) (^{w0}mu)^{-1}, without the determinant factor."""
        w0 = longest_element(self.n)
        return CChar(tuple(-x for x in twist(w0, self.gamma)), self.mu.twist(w0).inverse())

    def to_json(self) -> dict:
        return {"gamma": [str(x) for x in self.gamma], "mu": list(self.mu.index)}


@lru_cache(maxsize=64)
def ggha_algebra(r: int, n: int, kbar0: CycloNum) -> GghaAlgebra:
    return GghaAlgebra(r, n, kbar0)


def _as_cyclo(r: int, x) -> CycloNum:
    return x if isinstance(x, CycloNum) else field(r).const(x)


def algebra_for(M: ModuleRep):
    if M.params.get("algebra") == "gha_a":
        return gha_algebra_for(M)
    p = M.params
    return ggha_algebra(M.r, p["n"], CycloNum.parse(M.r, p["kbar0"]))


def principal_series(chi: CChar, kbar0) -> ModuleRep:
    r, n = chi.r, chi.n
    kbar0 = _as_cyclo(r, kbar0)
    alg = ggha_algebra(r, n, kbar0)
    basis = all_perms(n)
    index = {w: k for k, w in enumerate(basis)}
    d = len(basis)
    gens = {}
    for name, g in alg.generators():
        A = zeros(d, d, r)
        for col, w in enumerate(basis):
            for (u, t, a), c in (g * alg.perm(w)).terms.items():
                A[index[u]][col] = A[index[u]][col] + c * chi.value(t, a)
        gens[name] = A
    params = {"algebra": "ggha", "r": r, "n": n, "kbar0": str(kbar0), "character": chi.to_json()}
    weight = tuple(f"D{i + 1}" for i in range(n)) + tuple(f"t{i + 1}" for i in range(n))
    return ModuleRep(r, [perm_to_str(w) for w in basis], gens, params, weight)


def represent(M: ModuleRep, x) -> Matrix:
    """Matrix of an algebra element, assembled from the generator matrices only."""
    acc = zeros(M.dim, M.dim, M.r)
    cache: dict = {}
    for key, c in x.terms.items():
        if isinstance(x, GghaElem):
            word = x.alg.mono_word(key)
        else:
            w, a = key
            word = tuple(f"s{i + 1}" for i in reduced_word(w))
            word += tuple(f"D{i + 1}" for i, k in enumerate(a) for _ in range(k))
        W = cache.get(word)
        if W is None:
            W = cache[word] = M.word(word)
        acc = [[p + c * q if q else p for p, q in zip(ra, rb)] for ra, rb in zip(acc, W)]
    return acc


def _elem_gens(alg) -> list[tuple[str, object]]:
    return alg.generators()


def twist_dual(M: ModuleRep, op: str, w: Perm | None = None) -> ModuleRep:
    """^wM (a acts by rho(w a w^{-1})), ^delta M, or the dual M* (a acts by rho(iota a)^T)."""
    alg = algebra_for(M)
    names = list(M.gens)
    gens_el = dict(_elem_gens(alg))
    new = {}
    if op == "twist":
        if w is None:
            raise ValueError("twist needs a permutation")
        pw, pwi = alg.perm(w), alg.perm(inverse_perm(w))
        for name in names:
            new[name] = represent(M, pw * gens_el[name] * pwi)
        return M.with_gens(new, twist=perm_to_str(w))
    if not isinstance(alg, GghaAlgebra):
        raise ValueError(f"{op} is only defined for H_k(r,n)-modules")
    if op == "delta":
        for name in names:
            new[name] = represent(M, alg.apply_morphism("delta", gens_el[name]))
        return M.with_gens(new, twist="delta")
    if op == "dual":
        for name in names:
            new[name] = transpose(represent(M, alg.apply_morphism("iota", gens_el[name])))
        return M.with_gens(new, twist="dual")
    raise ValueError(f"unknown operation {op!r}")


def intertwiners(M: ModuleRep, N: ModuleRep) -> list[Matrix]:
    """Basis of Hom(M, N): matrices X with X rho_M(g) = rho_N(g) X for every generator."""
    if list(M.gens) != list(N.gens):
        raise ValueError("modules have different generator lists")
    dm, dn = M.dim, N.dim
    F = field(M.r)
    rows = []
    for name in M.gens:
        A, B = M.gens[name], N.gens[name]
        for a in range(dn):
            for b in range(dm):
                row = [F.zero] * (dn * dm)
                for k in range(dm):
                    if A[k][b]:
                        row[a * dm + k] = row[a * dm + k] + A[k][b]
                for k in range(dn):
                    if B[a][k]:
                        row[k * dm + b] = row[k * dm + b] - B[a][k]
                if any(row):
                    rows.append(row)
    if not rows:
        vecs = nullspace([[F.zero] * (dn * dm)], dn * dm, M.r)
    else:
        vecs = nullspace(rows, dn * dm, M.r)
    return [[v[a * dm:(a + 1) * dm] for a in range(dn)] for v in vecs]


def find_isomorphism(M: ModuleRep, N: ModuleRep, tries: int = 20) -> Matrix | None:
    """An invertible intertwiner M -> N, or None if the modules are not isomorphic."""
    if M.dim != N.dim:
        return None
    basis = intertwiners(M, N)
    if not basis:
        return None
    for X in basis:
        if det(X):
            return X
    F = field(M.r)
    rng = random.Random(0)
    for _ in range(tries):
        X = zeros(M.dim, M.dim, M.r)
        for B in basis:
            c = F.const(rng.randint(-9, 9))
            X = [[x + c * b for x, b in zip(rx, rb)] for rx, rb in zip(X, B)]
        if det(X):
            return X
    return None


def weights(M: ModuleRep) -> list[tuple[CChar, int]]:
    """Generalized weights of M for C, with multiplicities."""
    n = M.params["n"]
    r = M.r
    F = field(r)
    spaces = joint_eigenspaces(M.weight_list(), M.dim, r, generalized=True)
    out = []
    for vals, basis in spaces:
        gamma = vals[:n]
        mu = []
        for v in vals[n:]:
            mu.append(next(e for e in range(r) if F.zeta(e) == v))
        out.append((CChar(tuple(gamma), TChar(r, tuple(mu))), len(basis)))
    return out


def module_character(M: ModuleRep) -> CChar:
    p = M.params["character"]
    return CChar(tuple(CycloNum.parse(M.r, x) for x in p["gamma"]), TChar(M.r, tuple(p["mu"])))


def _unit(d: int, k: int, r: int) -> list[CycloNum]:
    F = field(r)
    return [F.one if i == k else F.zero for i in range(d)]


def t_isotypic(M: ModuleRep) -> list[tuple[TChar, list[list[CycloNum]]]]:
    """T-isotypic decomposition E_1, ..., E_s, E_j carrying ^{w_j}varpi."""
    chi = module_character(M)
    varpi = chi.mu
    n, r = chi.n, chi.r
    tmats = [M.gens[f"t{i + 1}"] for i in range(n)]
    spaces = joint_eigenspaces(tmats, M.dim, r)
    if sum(len(b) for _, b in spaces) != M.dim:
        raise ArithmeticError("T does not act semisimply: inconsistent module")
    F = field(r)
    by_char = {}
    for vals, basis in spaces:
        idx = tuple(next(e for e in range(r) if F.zeta(e) == v) for v in vals)
        by_char[TChar(r, idx)] = basis
    out = []
    for w in coset_representatives(varpi):
        ch = varpi.twist(w)
        out.append((ch, by_char[ch]))
    if len(out) != len(by_char):
        raise ArithmeticError("unexpected T-characters in M")
    return out


def e1_module(M: ModuleRep) -> ModuleRep:
    """E_1 = span{w (x) m : w in S_n(varpi)} as a module over the subalgebra H_k(varpi)."""
    chi = module_character(M)
    n, r = chi.n, chi.r
    alg = algebra_for(M)
    labels = [perm_to_str(w) for w in all_perms(n)]
    stab = stabilizer(chi.mu)
    basis = [_unit(M.dim, labels.index(perm_to_str(w)), r) for w in stab]
    mats = {}
    for i in range(n):
        for name in (f"D{i + 1}", f"t{i + 1}"):
            mats[name] = M.gens[name]
    for u, v in stabilizer_transpositions(chi.mu):
        mats[f"({u + 1},{v + 1})"] = represent(M, alg.perm(transposition(n, u, v)))
    gens = {}
    for name, A in mats.items():
        R = restrict(A, basis)
        if R is None:
            raise ArithmeticError(f"E_1 is not stable under {name}")
        gens[name] = R
    params = dict(M.params)
    params["restricted_to"] = "E_1"
    return ModuleRep(r, [perm_to_str(w) for w in stab], gens, params, M.weight_gens)


def e1_as_gha(M: ModuleRep) -> ModuleRep:
    """E_1 of M(gamma (x) mu_varpi) viewed as a type-A graded Hecke module with c = r kbar0."""
    chi = module_character(M)
    if not chi.mu.is_sorted():
        raise ValueError("e1_as_gha needs the sorted character mu_varpi")
    n, r = chi.n, chi.r
    F = field(r)
    blocks = sort_char(chi.mu).blocks
    labels = [perm_to_str(w) for w in all_perms(n)]
    group = block_perms(blocks)
    basis = [_unit(M.dim, labels.index(perm_to_str(w)), r) for w in group]
    for i in range(n):
        R = restrict(M.gens[f"t{i + 1}"], basis)
        scalar = chi.mu.value(tuple(1 if k == i else 0 for k in range(n)))
        if R is None or R != [[scalar if a == b else F.zero for b in range(len(group))]
                              for a in range(len(group))]:
            raise ArithmeticError("T does not act on E_1 by mu_varpi")
    gens = {}
    names = [f"D{i + 1}" for i in range(n)]
    names += [f"s{i + 1}" for b in blocks for i in b[:-1]]
    for name in names:
        R = restrict(M.gens[name], basis)
        if R is None:
            raise ArithmeticError(f"E_1 is not stable under {name}")
        gens[name] = R
    kbar0 = CycloNum.parse(r, M.params["kbar0"])
    c = kbar0 * r
    params = {"algebra": "gha_a", "n": n, "blocks": [list(b) for b in blocks], "c": str(c),
              "lambda": [str(x) for x in chi.gamma]}
    return ModuleRep(r, [perm_to_str(w) for w in group], gens, params,
                     tuple(f"D{i + 1}" for i in range(n)))


def delta_characters(chi: CChar, kbar0) -> list[TChar]:
    """All mu' with ^delta M(gamma (x) mu) isomorphic to M(gamma (x) mu')."""
    M = twist_dual(principal_series(chi, kbar0), "delta")
    return [mu for mu in all_chars(chi.r, chi.n)
            if find_isomorphism(M, principal_series(CChar(chi.gamma, mu), kbar0)) is not None]


def random_character(r: int, n: int, rng: random.Random, spread: int = 4) -> CChar:
    """Random gamma with small rational (and, for r > 2, cyclotomic) coordinates."""
    from fractions import Fraction
    F = field(r)
    gamma = []
    for _ in range(n):
        coeffs = [Fraction(rng.randint(-spread, spread), rng.randint(1, 2))]
        coeffs += [Fraction(rng.randint(-1, 1)) for _ in range(F.phi - 1)]
        gamma.append(F.from_coeffs(coeffs))
    mu = TChar(r, tuple(rng.randrange(r) for _ in range(n)))
    return CChar(tuple(gamma), mu)


def basis_map(n: int, r: int, f) -> Matrix:
    """Permutation matrix sending the basis vector of g to that of f(g)."""
    F = field(r)
    perms = all_perms(n)
    idx = {w: k for k, w in enumerate(perms)}
    P = zeros(len(perms), len(perms), r)
    for g in perms:
        P[idx[f(g)]][idx[g]] = F.one
    return P


def is_intertwiner(X: Matrix, M: ModuleRep, N: ModuleRep) -> bool:
    from .linalg import matmul
    return all(matmul(X, M.gens[g]) == matmul(N.gens[g], X) for g in M.gens)


def conjugation_map(chi: CChar, kbar0, w: Perm) -> tuple[Matrix, ModuleRep, ModuleRep]:
    """g (x) m -> w g w^{-1} (x) m from M(^{w^{-1}}gamma~) to ^w M(gamma~)."""
    from .refl_group import compose
    winv = inverse_perm(w)
    M = principal_series(chi, kbar0)
    N = principal_series(chi.twist(winv), kbar0)
    P = basis_map(chi.n, chi.r, lambda g: compose(compose(w, g), winv))
    return P, N, twist_dual(M, "twist", w)


def sorting_maps(chi: CChar, kbar0) -> dict[str, tuple[Matrix, ModuleRep, ModuleRep]]:
    """The two isomorphisms out of M(^sigma gamma~), sigma sorting the T-character."""
    from .refl_group import compose
    sigma = sort_char(chi.mu).sigma
    M = principal_series(chi, kbar0)
    N = principal_series(chi.twist(sigma), kbar0)
    sinv = inverse_perm(sigma)
    P1 = basis_map(chi.n, chi.r, lambda g: compose(compose(sinv, g), sigma))
    P2 = basis_map(chi.n, chi.r, lambda g: compose(g, sigma))
    return {"to_twisted": (P1, N, twist_dual(M, "twist", sinv)), "to_original": (P2, N, M)}
