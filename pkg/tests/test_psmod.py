import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gghecke.cyclo import field
from gghecke.gha_a import principal_series_A
from gghecke.ggha import GghaAlgebra
from gghecke.linalg import is_upper_triangular
from gghecke.modrep import relation_failures
from gghecke.psmod import (CChar, delta_characters, e1_as_gha, e1_module, find_isomorphism,
                           intertwiners, principal_series, random_character, represent, t_isotypic,
                           twist_dual, weights)
from gghecke.refl_group import TChar, all_perms, identity_perm, sort_char, twist


def test_rank_one_is_a_character():
    chi = CChar((Fraction(3),), TChar(3, (2,)))
    M = principal_series(chi, 1)
    F = field(3)
    assert M.dim == 1
    assert M["D1"] == [[F.const(3)]]
    assert M["t1"] == [[F.zeta(2)]]


def test_rank_two_shape():
    a, b = Fraction(2), Fraction(-5)
    M = principal_series(CChar((a, b), TChar(2, (0, 0))), 1)
    assert M.basis == ["[1,2]", "[2,1]"]
    assert is_upper_triangular(M["D1"])
    assert [M["D1"][0][0], M["D1"][1][1]] == [a, b]
    assert [M["D2"][0][0], M["D2"][1][1]] == [b, a]


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_relations_hold(r, n):
    chi = random_character(r, n, random.Random(r * 10 + n))
    M = principal_series(chi, Fraction(1, 2))
    assert relation_failures(M, GghaAlgebra(r, n, field(r).const(Fraction(1, 2))).relations()) == []


@settings(max_examples=15)
@given(seed=st.integers(0, 10 ** 6), r=st.sampled_from([2, 3]), n=st.sampled_from([2, 3]))
def test_weights_are_the_orbit(seed, r, n):
    chi = random_character(r, n, random.Random(seed))
    M = principal_series(chi, 1)
    got = sorted((tuple(map(str, c.gamma)), c.mu.index, m) for c, m in weights(M))
    expect = {}
    for w in all_perms(n):
        c = chi.twist(w)
        key = (tuple(map(str, c.gamma)), c.mu.index)
        expect[key] = expect.get(key, 0) + 1
    assert got == sorted(k + (m,) for k, m in expect.items())


def test_isotypic_pieces():
    gam = (Fraction(1), Fraction(2), Fraction(4))
    spread = t_isotypic(principal_series(CChar(gam, TChar(3, (0, 1, 2))), 1))
    assert [len(b) for _, b in spread] == [1] * 6
    flat = t_isotypic(principal_series(CChar(gam, TChar(3, (1, 1, 1))), 1))
    assert [len(b) for _, b in flat] == [6]
    mixed = t_isotypic(principal_series(CChar(gam, TChar(2, (0, 0, 1))), 1))
    assert [len(b) for _, b in mixed] == [2, 2, 2]
    assert mixed[0][0] == TChar(2, (0, 0, 1))


def test_twist_by_identity_is_the_same_module():
    M = principal_series(random_character(3, 3, random.Random(4)), 1)
    assert twist_dual(M, "twist", identity_perm(3)).gens == M.gens


@pytest.mark.parametrize("r", [2, 3, 4])
def test_dual_character(r):
    chi = random_character(r, 2, random.Random(r))
    D = twist_dual(principal_series(chi, 1), "dual")
    assert find_isomorphism(D, principal_series(chi.dual(), 1)) is not None
    assert find_isomorphism(twist_dual(D, "dual"), principal_series(chi, 1)) is not None


def test_dual_needs_the_determinant():
    chi = CChar((Fraction(1), Fraction(3)), TChar(3, (0, 1)))
    D = twist_dual(principal_series(chi, 1), "dual")
    assert find_isomorphism(D, principal_series(chi.naive_dual(), 1)) is None


def test_delta_twist_multiplies_by_det():
    chi = CChar((Fraction(1), Fraction(5, 2)), TChar(3, (0, 2)))
    assert delta_characters(chi, 1) == [TChar(3, (1, 0))]
    assert chi.mu.times_det() == TChar(3, (1, 0))


def test_represent_matches_generator_words():
    chi = random_character(2, 3, random.Random(7))
    M = principal_series(chi, 1)
    alg = GghaAlgebra(2, 3, field(2).one)
    x = alg.D(0) * alg.simple(1) * alg.theta(2)
    from gghecke.linalg import matmul
    assert represent(M, x) == matmul(matmul(M["D1"], M["s2"]), M["t3"])


def test_e1_examples():
    gam = (Fraction(3), Fraction(1), Fraction(0))
    M = principal_series(CChar(gam, TChar(2, (0, 0, 1))), 1)
    E = e1_module(M)
    assert E.dim == 2 and "(1,2)" in E.gens
    A = e1_as_gha(M)
    B = principal_series_A(gam, ((0, 1), (2,)), 2, 2)
    assert A.gens == B.gens


def test_e1_as_gha_rejects_unsorted():
    M = principal_series(CChar((1, 2, 3), TChar(2, (1, 0, 0))), 1)
    with pytest.raises(ValueError):
        e1_as_gha(M)


def test_sorting_agrees_with_twisted_module():
    chi = CChar((Fraction(1), Fraction(2), Fraction(3)), TChar(3, (2, 0, 2)))
    sc = sort_char(chi.mu)
    assert sc.mu.is_sorted()
    N = principal_series(chi.twist(sc.sigma), 1)
    assert len(intertwiners(N, principal_series(chi, 1))) >= 1
    assert twist(sc.sigma, chi.mu.index) == sc.mu.index
