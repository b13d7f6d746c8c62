import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from gghecke.cyclo import field
from gghecke.linalg import (charpoly, det, eigenvalues, field_roots, identity, inverse, matmul,
                            nullspace, random_invertible, rank, restrict, joint_eigenspaces)


def test_field_roots_rational():
    F = field(1)
    # (x - 1)^2 (x + 1/2)
    coeffs = [F.const(Fraction(1, 2)), F.const(0), F.const(Fraction(-3, 2)), F.one]
    assert sorted((x.to_fraction(), m) for x, m in field_roots(coeffs)) == [(Fraction(-1, 2), 1), (1, 2)]


def test_field_roots_cyclotomic():
    F = field(5)
    z = F.zeta(1)
    a = z + Fraction(1, 3)
    # (x - a)(x - z^2)(x^2 + 1), last factor irreducible over Q(z_5)
    poly = [F.one]
    for root in (a, F.zeta(2)):
        poly = [F.zero] + poly
        for k in range(len(poly) - 1):
            poly[k] = poly[k] - root * poly[k + 1]
    q = [F.zero] * (len(poly) + 2)
    for k, c in enumerate(poly):
        q[k] = q[k] + c
        q[k + 2] = q[k + 2] + c
    roots = dict(field_roots(q))
    assert roots == {a: 1, F.zeta(2): 1}


@settings(max_examples=25)
@given(seed=st.integers(0, 10 ** 6), r=st.sampled_from([1, 3, 4]))
def test_inverse_and_det(seed, r):
    rng = random.Random(seed)
    A = random_invertible(4, r, rng)
    assert matmul(A, inverse(A)) == identity(4, r)
    B = random_invertible(4, r, rng)
    assert det(matmul(A, B)) == det(A) * det(B)


def test_charpoly_cayley_hamilton():
    rng = random.Random(1)
    F = field(3)
    A = [[F.const(rng.randint(-3, 3)) + F.zeta(1) * rng.randint(-1, 1) for _ in range(4)] for _ in range(4)]
    cp = charpoly(A)
    acc = [[F.zero] * 4 for _ in range(4)]
    power = identity(4, 3)
    for c in cp:
        acc = [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(acc, power)]
        power = matmul(power, A)
    assert all(not x for row in acc for x in row)


def test_nullspace_and_rank():
    F = field(1)
    A = [[F.const(x) for x in row] for row in ([1, 2, 3], [2, 4, 6], [1, 0, 1])]
    assert rank(A) == 2
    (v,) = nullspace(A)
    assert all(not sum((a * b for a, b in zip(row, v)), F.zero) for row in A)


def test_joint_eigenspaces():
    F = field(1)
    c = F.const
    A = [[c(1), c(1)], [c(0), c(2)]]
    B = [[c(3), c(0)], [c(0), c(3)]]
    spaces = joint_eigenspaces([A, B], 2, 1)
    assert sorted(v[0].to_fraction() for v, _ in spaces) == [1, 2]
    assert restrict(A, [[c(1), c(1)]]) == [[c(2)]]
    assert restrict(A, [[c(0), c(1)]]) is None


def test_eigenvalues_refuse_outside_field():
    F = field(1)
    A = [[F.zero, F.one], [F.const(2), F.zero]]
    try:
        eigenvalues(A)
    except ArithmeticError:
        return
    raise AssertionError("sqrt 2 is not rational")
