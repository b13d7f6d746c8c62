"""Dense exact linear algebra over Q(z_r).

Matrices are lists of rows, vectors are lists; entries are CycloNum.  Everything
here is small (dimension <= a few dozen), so plain Gaussian elimination is used.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import QQ

from .cyclo import CycloNum, field

Matrix = list[list[CycloNum]]
Vector = list[CycloNum]


def zeros(rows: int, cols: int, r: int) -> Matrix:
    z = field(r).zero
    return [[z] * cols for _ in range(rows)]


def identity(n: int, r: int) -> Matrix:
    F = field(r)
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def scalar_matrix(n: int, c: CycloNum) -> Matrix:
    z = field(c.r).zero
    return [[c if i == j else z for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    r = A[0][0].r if A[0] else B[0][0].r
    zero = field(r).zero
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * cols
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(cols):
                    b = brow[j]
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Vector) -> Vector:
    zero = field(v[0].r).zero if v else None
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, c) -> Matrix:
    return [[a * c for a in row] for row in A]


def is_zero_matrix(A: Matrix) -> bool:
    return all(not a for row in A for a in row)


def columns(A: Matrix) -> list[Vector]:
    return transpose(A)


def from_columns(cols: list[Vector]) -> Matrix:
    return transpose(cols)


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(row) for row in A]
    if not M:
        return M, []
    nrows, ncols = len(M), len(M[0])
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        if prow == nrows:
            break
        sel = next((i for i in range(prow, nrows) if M[i][col]), None)
        if sel is None:
            continue
        M[prow], M[sel] = M[sel], M[prow]
        inv = M[prow][col].inverse()
        M[prow] = [x * inv if x else x for x in M[prow]]
        pr = M[prow]
        for i in range(nrows):
            if i != prow:
                f = M[i][col]
                if f:
                    row = M[i]
                    M[i] = [x - f * y if y else x for x, y in zip(row, pr)]
        pivots.append(col)
        prow += 1
    return M[:prow], pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def nullspace(A: Matrix, ncols: int | None = None, r: int | None = None) -> list[Vector]:
    """Basis of {x : A x = 0} as a list of column vectors."""
    if ncols is None:
        ncols = len(A[0])
    if r is None:
        r = A[0][0].r
    F = field(r)
    R, pivots = rref(A) if A else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def span_basis(vectors: list[Vector]) -> list[Vector]:
    """Echelon basis (rref rows) of the span of the given vectors."""
    if not vectors:
        return []
    return rref(vectors)[0]


class Subspace:
    """Incrementally grown subspace kept in reduced echelon form."""

    def __init__(self, dim: int, r: int):
        self.dim = dim
        self.r = r
        self.rows: list[Vector] = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v: Vector) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Vector) -> bool:
        """Insert v; return True when the dimension grew."""
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = w[p].inverse()
        w = [x * inv if x else x for x in w]
        new_rows = []
        for row in self.rows:
            f = row[p]
            if f:
                row = [x - f * y if y else x for x, y in zip(row, w)]
            new_rows.append(row)
        new_rows.append(w)
        new_pivots = self.pivots + [p]
        order = sorted(range(len(new_pivots)), key=new_pivots.__getitem__)
        self.rows = [new_rows[i] for i in order]
        self.pivots = [new_pivots[i] for i in order]
        return True


def solve(A: Matrix, b: Vector) -> Vector | None:
    """One solution of A x = b, or None when inconsistent."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    F = field(b[0].r)
    x = [F.zero] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def coordinates(basis: list[Vector], v: Vector) -> Vector | None:
    """Coordinates of v in the given (independent) basis, or None if v is outside."""
    return solve(transpose(basis), v)


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    r = A[0][0].r
    aug = [list(row) + e for row, e in zip(A, identity(n, r))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def det(A: Matrix) -> CycloNum:
    n = len(A)
    r = A[0][0].r
    M = [list(row) for row in A]
    result = field(r).one
    for col in range(n):
        sel = next((i for i in range(col, n) if M[i][col]), None)
        if sel is None:
            return field(r).zero
        if sel != col:
            M[col], M[sel] = M[sel], M[col]
            result = -result
        piv = M[col][col]
        result = result * piv
        inv = piv.inverse()
        for i in range(col + 1, n):
            f = M[i][col]
            if f:
                f = f * inv
                M[i] = [x - f * y if y else x for x, y in zip(M[i], M[col])]
    return result


def charpoly(A: Matrix) -> list[CycloNum]:
    """Coefficients (low to high, monic) of det(x I - A), Faddeev-LeVerrier."""
    n = len(A)
    r = A[0][0].r
    F = field(r)
    coeffs = [F.zero] * (n + 1)
    coeffs[n] = F.one
    M = identity(n, r)
    AM = matmul(A, M)
    for k in range(1, n + 1):
        if k > 1:
            M = [[AM[i][j] + (coeffs[n - k + 1] if i == j else F.zero) for j in range(n)]
                 for i in range(n)]
            AM = matmul(A, M)
        tr = F.zero
        for i in range(n):
            tr = tr + AM[i][i]
        coeffs[n - k] = tr * Fraction(-1, k)
    return coeffs


def poly_eval(coeffs: list[CycloNum], x: CycloNum) -> CycloNum:
    acc = field(x.r).zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[CycloNum], root: CycloNum) -> list[CycloNum]:
    # synthetic division by (x - root); remainder assumed zero
    n = len(coeffs) - 1
    out = [None] * n
    carry = field(root.r).zero
    for i in range(n, 0, -1):
        carry = coeffs[i] + carry * root
        out[i - 1] = carry
    return out


@lru_cache(maxsize=None)
def _algebraic_field(r: int):
    K = QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / r))
    modulus = [Fraction(int(c.numerator), int(c.denominator)) for c in K.mod.to_list()]
    if modulus[::-1] != [Fraction(c) for c in field(r).modulus]:
        raise RuntimeError(f"sympy chose an unexpected generator for Q(z_{r})")
    return K


def _mpq(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _sympy_roots(coeffs: list[CycloNum]) -> list[CycloNum]:
    r = coeffs[0].r
    F = field(r)
    x = sympy.Symbol("x")
    if all(c.is_rational() for c in coeffs):
        poly = sympy.Poly([QQ(c.c[0].numerator, c.c[0].denominator) for c in reversed(coeffs)],
                          x, domain=QQ)
        roots = []
        for fac, _ in poly.factor_list()[1]:
            if fac.degree() == 1:
                a, b = fac.all_coeffs()
                roots.append(F.const(-Fraction(int(b.p), int(b.q)) / Fraction(int(a.p), int(a.q))))
        return roots
    K = _algebraic_field(r)

    def to_anp(c: CycloNum):
        return K([QQ(q.numerator, q.denominator) for q in reversed(c.c)])

    def from_anp(a) -> CycloNum:
        return F.from_coeffs([_mpq(q) for q in reversed(a.to_list())])

    poly = sympy.Poly.new(sympy.polys.polyclasses.DMP([to_anp(c) for c in reversed(coeffs)], K), x)
    roots = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.rep.to_list()
            roots.append(-from_anp(b) / from_anp(a))
    return roots


@lru_cache(maxsize=4096)
def _field_roots_cached(coeffs: tuple[CycloNum, ...]) -> tuple[tuple[CycloNum, int], ...]:
    coeffs = list(coeffs)
    r = coeffs[0].r
    F = field(r)
    found: dict[CycloNum, int] = {}
    # cheap exact candidates first: 0 and the r-th roots of unity
    for cand in [F.zero] + [F.zeta(e) for e in range(r)]:
        while len(coeffs) > 1 and not poly_eval(coeffs, cand):
            coeffs = _deflate(coeffs, cand)
            found[cand] = found.get(cand, 0) + 1
    while len(coeffs) > 1:
        rest = _sympy_roots(coeffs)
        degree = len(coeffs)
        for root in rest:
            while len(coeffs) > 1 and not poly_eval(coeffs, root):
                coeffs = _deflate(coeffs, root)
                found[root] = found.get(root, 0) + 1
        if len(coeffs) == degree:
            break
    return tuple(found.items())


def field_roots(coeffs: list[CycloNum]) -> list[tuple[CycloNum, int]]:
    """Roots lying in Q(z_r) with multiplicities; coefficients low to high.

    The total multiplicity is less than the degree exactly when the polynomial
    does not split over the field.
    """
    coeffs = list(coeffs)
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    lead = coeffs[-1]
    if lead != 1:
        inv = lead.inverse()
        coeffs = [c * inv for c in coeffs]
    return list(_field_roots_cached(tuple(coeffs)))


def restrict(A: Matrix, basis: list[Vector]) -> Matrix | None:
    """Matrix of A on span(basis) in that basis; None if the span is not A-stable."""
    B = transpose(basis)
    cols = []
    for v in basis:
        c = solve(B, matvec(A, v))
        if c is None:
            return None
        cols.append(c)
    return transpose(cols)


def quotient_data(dim: int, sub_rows: list[Vector], r: int) -> tuple[list[Vector], list[int]]:
    """Complement basis (unit vectors at non-pivot positions) for the quotient by span(sub_rows)."""
    R, pivots = rref(sub_rows) if sub_rows else ([], [])
    F = field(r)
    comp = []
    free = [j for j in range(dim) if j not in pivots]
    for j in free:
        e = [F.zero] * dim
        e[j] = F.one
        comp.append(e)
    return comp, free


def random_invertible(n: int, r: int, rng) -> Matrix:
    """A random exact invertible matrix (unit lower times unit upper, then permuted)."""
    F = field(r)

    def rnd():
        return F.from_coeffs([Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(F.phi)])

    L = [[F.one if i == j else (rnd() if j < i else F.zero) for j in range(n)] for i in range(n)]
    U = [[F.one if i == j else (rnd() if j > i else F.zero) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = [[F.one if perm[i] == j else F.zero for j in range(n)] for i in range(n)]
    return matmul(P, matmul(L, U))


def is_upper_triangular(A: Matrix) -> bool:
    return all(not A[i][j] for i in range(len(A)) for j in range(i))


def eigenvalues(A: Matrix) -> list[tuple[CycloNum, int]]:
    """Eigenvalues with algebraic multiplicity; ArithmeticError if they leave Q(z_r)."""
    if is_upper_triangular(A):
        found: dict[CycloNum, int] = {}
        for i in range(len(A)):
            found[A[i][i]] = found.get(A[i][i], 0) + 1
        return list(found.items())
    roots = field_roots(charpoly(A))
    if sum(m for _, m in roots) != len(A):
        raise ArithmeticError("characteristic polynomial does not split over Q(z_r)")
    return roots


def _power(A: Matrix, e: int) -> Matrix:
    out = identity(len(A), A[0][0].r)
    for _ in range(e):
        out = matmul(out, A)
    return out


def joint_eigenspaces(mats: list[Matrix], dim: int, r: int,
                      generalized: bool = False) -> list[tuple[tuple[CycloNum, ...], list[Vector]]]:
    """Simultaneous (generalized) eigenspaces of commuting matrices.

    Returns (eigenvalue tuple, basis) pairs; with ``generalized`` the spaces sum
    to the whole space.
    """
    F = field(r)
    unit = [[F.one if i == j else F.zero for j in range(dim)] for i in range(dim)]
    current: list[tuple[tuple, list[Vector]]] = [((), unit)]
    for A in mats:
        cands = [lam for lam, _ in eigenvalues(A)]
        nxt = []
        for vals, B in current:
            Ar = restrict(A, B)
            if Ar is None:
                raise ArithmeticError("matrices do not commute")
            d = len(B)
            total = 0
            for lam in cands:
                N = [[Ar[i][j] - (lam if i == j else F.zero) for j in range(d)] for i in range(d)]
                if generalized:
                    N = _power(N, d)
                ker = nullspace(N, d, r)
                if not ker:
                    continue
                total += len(ker)
                vecs = [[sum((c * B[k][i] for k, c in enumerate(v) if c), F.zero) for i in range(dim)]
                        for v in ker]
                nxt.append((vals + (lam,), vecs))
            if generalized and total != d:
                raise ArithmeticError("generalized eigenspaces do not exhaust the space")
        current = nxt
    return current
