import itertools

import pytest
from hypothesis import given, strategies as st

from gghecke.refl_group import (GroupElem, TChar, all_elements, all_perms, block_perms, compose,
                                coset_representatives, generated_group, group_order,
                                inversion_set, length, longest_element, orbit_representatives,
                                perm_elem, perm_from_str, perm_to_str, reduced_word, reflection, sign,
                                simple_reflection, sort_char, stabilizer, theta, twist)


def group_elems(r, n):
    return st.tuples(st.tuples(*[st.integers(0, r - 1)] * n), st.permutations(range(n))).map(
        lambda tw: GroupElem(tw[0], tuple(tw[1]), r))


@pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_group_order_by_closure(r, n):
    gens = [theta(r, n, 0, 1)] + [perm_elem(r, simple_reflection(n, i)) for i in range(n - 1)]
    assert len(generated_group(gens)) == group_order(r, n) == r ** n * len(all_perms(n))


@given(data=st.data(), r=st.integers(1, 4), n=st.integers(1, 4))
def test_group_axioms(data, r, n):
    a, b, c = (data.draw(group_elems(r, n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert a.inverse().inverse() == a


@given(data=st.data(), r=st.integers(2, 5), n=st.integers(1, 3))
def test_matrix_is_a_representation(data, r, n):
    from gghecke.linalg import matmul
    a, b = data.draw(group_elems(r, n)), data.draw(group_elems(r, n))
    assert matmul(a.matrix(), b.matrix()) == (a * b).matrix()


@given(data=st.data(), r=st.integers(2, 5), n=st.integers(1, 3))
def test_det_is_multiplicative(data, r, n):
    a, b = data.draw(group_elems(r, n)), data.draw(group_elems(r, n))
    assert (a * b).det() == a.det() * b.det()


def test_reflection_torsion():
    s = reflection(4, 3, "s", (0, 1), 1)
    assert s.torsion == (1, 3, 0)
    assert s.perm == (1, 0, 2)
    assert (s * s).is_identity()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduced_words(n):
    for w in all_perms(n):
        word = reduced_word(w)
        assert len(word) == length(w) == len(inversion_set(w))
        acc = tuple(range(n))
        for i in word:
            acc = compose(acc, simple_reflection(n, i))
        assert acc == w
        assert sign(w) == (-1) ** len(word)


def test_longest_element():
    w0 = longest_element(4)
    assert w0 == (3, 2, 1, 0)
    assert length(w0) == 6 == max(length(w) for w in all_perms(4))


def test_twist_convention():
    # (^w x)_i = x_{w^{-1}(i)}
    w = (1, 2, 0)
    assert twist(w, ("a", "b", "c")) == ("c", "a", "b")
    u = (2, 0, 1)
    assert twist(compose(w, u), "abc") == twist(w, twist(u, "abc"))


def test_perm_string_roundtrip():
    for w in all_perms(3):
        assert perm_from_str(perm_to_str(w)) == w
    assert perm_to_str((1, 0, 2)) == "[2,1,3]"


def test_json_roundtrip():
    for g in all_elements(3, 2):
        assert GroupElem.from_json(g.to_json(), 3) == g


@pytest.mark.parametrize("varpi,mu", [((0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 0, 1)), ((2, 0, 1), (0, 1, 2)),
                                      ((1, 1, 0, 0), (0, 0, 1, 1))])
def test_sort_char(varpi, mu):
    r = max(varpi) + 1
    sc = sort_char(TChar(r, varpi))
    assert sc.mu.index == mu
    assert TChar(r, varpi).twist(sc.sigma) == sc.mu
    for i, j in inversion_set(sc.sigma):
        assert varpi[i] != varpi[j]


def test_sort_blocks():
    sc = sort_char(TChar(3, (2, 0, 0, 2, 1)))
    assert sc.blocks == ((0, 1), (2,), (3, 4))


def test_orbit_representatives_count():
    # r-compositions of n
    assert len(orbit_representatives(2, 3)) == 4
    assert len(orbit_representatives(3, 2)) == 6
    assert all(c.is_sorted() for c in orbit_representatives(3, 3))


def test_stabilizer_and_cosets():
    varpi = TChar(2, (0, 0, 1))
    stab = stabilizer(varpi)
    assert len(stab) == 2
    reps = coset_representatives(varpi)
    assert len(reps) == 3 and reps[0] == (0, 1, 2)
    assert {varpi.twist(w) for w in reps} == {TChar(2, (0, 0, 1)), TChar(2, (0, 1, 0)), TChar(2, (1, 0, 0))}
    assert block_perms(((0, 1), (2,))) == stab


@given(n=st.integers(1, 4), data=st.data())
def test_character_twist_is_an_action(n, data):
    r = 3
    idx = data.draw(st.tuples(*[st.integers(0, r - 1)] * n))
    w = tuple(data.draw(st.permutations(range(n))))
    u = tuple(data.draw(st.permutations(range(n))))
    c = TChar(r, idx)
    assert c.twist(compose(w, u)) == c.twist(u).twist(w)


def test_character_values_match_group_twist():
    # theta^t w = w theta^{w^{-1} t}, so (^w mu)(t) = mu(w^{-1} t)
    r, n = 3, 3
    mu = TChar(r, (0, 1, 2))
    for w in all_perms(n):
        for t in itertools.product(range(r), repeat=n):
            winv_t = tuple(t[w[i]] for i in range(n))
            assert mu.twist(w).value(t) == mu.value(winv_t)
