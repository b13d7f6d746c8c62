import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gghecke.cyclo import field
from gghecke.gha_a import GhaAlgebra, divided_difference, kr_set, principal_series_A
from gghecke.modrep import relation_failures
from gghecke.psmod import find_isomorphism, intertwiners, twist_dual
from gghecke.simplicity import is_simple

F1 = field(1)


def test_divided_difference_examples():
    one = F1.one
    assert divided_difference({(0, 1): one}, 0) == {(0, 0): one}
    assert divided_difference({(1, 0): one}, 0) == {(0, 0): -one}
    assert divided_difference({(1, 1): one}, 0) == {}
    # (x^2 - y^2)/(y - x) = -(x + y)
    assert divided_difference({(2, 0): one}, 0) == {(1, 0): -one, (0, 1): -one}


@given(p=st.integers(0, 4), q=st.integers(0, 4), x=st.integers(-5, 5), y=st.integers(-5, 5))
def test_divided_difference_by_evaluation(p, q, x, y):
    if x == y:
        return
    dd = divided_difference({(p, q): F1.one}, 0)
    val = sum((c * Fraction(x) ** a * Fraction(y) ** b for (a, b), c in dd.items()), F1.zero)
    assert val == Fraction(x ** p * y ** q - x ** q * y ** p, y - x)


def test_cross_rule():
    A = GhaAlgebra(1, 2, None, 3)
    s = A.simple(0)
    assert s * A.lam(0) == A.lam(1) * s - A.one() * 3


def test_singleton_blocks_one_dimensional():
    M = principal_series_A((2, 5, -1), ((0,), (1,), (2,)), 1)
    assert M.dim == 1
    assert [M[f"D{i}"][0][0] for i in (1, 2, 3)] == [2, 5, -1]


def test_rank_one_matrices():
    x, y, c = Fraction(2), Fraction(7), Fraction(3)
    M = principal_series_A((x, y), None, c)
    assert M.basis == ["[1,2]", "[2,1]"]
    assert M["s1"] == [[0, 1], [1, 0]]
    assert M["D1"] == [[x, -c], [0, y]]
    assert M["D2"] == [[y, c], [0, x]]


@pytest.mark.parametrize("blocks", [None, ((0, 1), (2,)), ((0,), (1, 2))])
def test_relations(blocks):
    M = principal_series_A((1, Fraction(1, 2), -3), blocks, 2)
    A = GhaAlgebra(1, 3, blocks, 2)
    assert relation_failures(M, A.relations()) == []


def test_kr_examples():
    assert [(x.i, x.j, x.sign) for x in kr_set((1, 0), None, 1)] == [(0, 1, 1)]
    assert kr_set((0, 0), None, 1) == []
    assert [(x.i, x.j) for x in kr_set((5, 3), None, 2)] == [(0, 1)]
    assert not is_simple(principal_series_A((5, 3), None, 2)).simple


def test_kr_respects_blocks():
    assert kr_set((0, 1, 2), ((0,), (1, 2)), 1) == kr_set((0, 1, 2), ((0,), (1, 2)), 1)
    assert [(x.i, x.j) for x in kr_set((1, 0, 2), ((0,), (1, 2)), 2)] == [(1, 2)]


@pytest.mark.parametrize("lam", list(itertools.product(range(-3, 4), repeat=2)))
def test_kr_agreement_rank_one(lam):
    M = principal_series_A(lam, None, 2)
    assert is_simple(M).simple == (not kr_set(lam, None, 2))


def test_twist_invariance():
    M = principal_series_A((3, -1, 2), None, 1)
    A = GhaAlgebra(1, 3, None, 1)
    for w in A.group:
        assert find_isomorphism(M, twist_dual(M, "twist", w)) is not None


def test_isomorphism_classes_of_simple_modules():
    # simple M(lambda) is isomorphic to M(gamma) exactly for gamma in W.lambda
    lam = (0, 5)
    M = principal_series_A(lam, None, 1)
    assert is_simple(M).simple
    assert find_isomorphism(M, principal_series_A((5, 0), None, 1)) is not None
    assert find_isomorphism(M, principal_series_A((0, 4), None, 1)) is None
    assert len(intertwiners(M, M)) == 1
