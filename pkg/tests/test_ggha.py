import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gghecke.cherednik import CherednikAlgebra
from gghecke.ggha import GghaAlgebra, GghaElem, elementary_symmetric_D, torus_orbit_sum
from gghecke.refl_group import all_perms, longest_element, simple_reflection
from gghecke.suites import random_params


@pytest.fixture(scope="module")
def h33():
    H = CherednikAlgebra(random_params(3, 3, random.Random(33)))
    return H, GghaAlgebra.from_cherednik(H)


def test_theta_commutes_with_D():
    G = GghaAlgebra(3, 2, 1)
    assert G.theta(0) * G.D(1) == G.D(1) * G.theta(0)
    assert G.theta(0) * G.D(0) == G.D(0) * G.theta(0)


def test_far_transposition_commutes():
    G = GghaAlgebra(2, 3, 1)
    assert G.simple(0) * G.D(2) == G.D(2) * G.simple(0)


def test_cross_relation_uses_k_tilde():
    G = GghaAlgebra(2, 2, 1)
    s = G.simple(0)
    assert s * G.D(0) - G.D(1) * s == -G.k_tilde(0, 1)


def test_psi_transport_sampled(h33):
    H, G = h33
    rng = random.Random(0)
    monos = [(w, t, a) for w in all_perms(3) for t in itertools.product(range(3), repeat=3)
             for a in itertools.product(range(3), repeat=3) if sum(a) <= 2]
    for _ in range(60):
        m1, m2 = rng.choice(monos), rng.choice(monos)
        x, y = G.monomial(*m1), G.monomial(*m2)
        assert G.psi(x * y, H) == G.psi(x, H) * G.psi(y, H)


def test_closed_form_examples():
    G = GghaAlgebra(2, 3, 1)
    F = G.F
    zeta = [F.zero, F.zero, F.one]
    assert G.commute_closed_form((0, 1, 2), [F.one, F.zero, F.zero]) == G.D(0)
    assert G.commute_closed_form((1, 0, 2), zeta) == G.D(2) * G.simple(0)
    w0 = longest_element(3)
    assert G.commute_closed_form(w0, [F.one, F.zero, F.zero]) == G.perm(w0) * G.D(0)


@pytest.mark.parametrize("r,n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_closed_form_all_permutations(r, n):
    G = GghaAlgebra(r, n, 2)
    rng = random.Random(r + n)
    for w in all_perms(n):
        z = [G.F.const(rng.randint(-5, 5)) for _ in range(n)]
        lhs = G.perm(w) * sum((G.D(j) * z[j] for j in range(n)), G.zero())
        assert lhs == G.commute_closed_form(w, z)


@pytest.mark.parametrize("n", [3, 4])
def test_any_reduced_word_gives_same_normal_form(n):
    G = GghaAlgebra(2, n, 1)
    w0 = longest_element(n)

    def words(w):
        # all reduced words, by stripping right descents in every possible way
        if w == tuple(range(n)):
            return [()]
        out = []
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                u = tuple(w[simple_reflection(n, i)[k]] for k in range(n))
                out += [x + (i,) for x in words(u)]
        return out

    ws = words(w0)
    assert len(ws) > 1
    for a in [(1, 0, 2) + (0,) * (n - 3), (0, 2, 1) + (1,) * (n - 3)]:
        forms = [G.d_times_perm(a, w0, word) for word in ws[:8]]
        assert all(f == forms[0] for f in forms)


@pytest.mark.parametrize("r,n", [(2, 3), (3, 2), (3, 3)])
def test_center(r, n):
    G = GghaAlgebra(r, n, 1)
    for k in (1, 2):
        assert G.center_check(elementary_symmetric_D(G, k) * torus_orbit_sum(G, (1,) + (0,) * (n - 1)))
    assert not G.center_check(G.D(0))
    assert not G.center_check(G.theta(0))
    assert G.center_check(G.torus((1,) * n))


def test_iota_example():
    G = GghaAlgebra(3, 2, 1)
    z = G.F.zeta(1)
    got = G.apply_morphism("iota", G.D(0) * G.theta(0))
    assert got == G.torus((-1, 0)) * (-G.D(0)) * z


def test_delta_example():
    G = GghaAlgebra(3, 2, 1)
    assert G.apply_morphism("delta", G.theta(0)) == G.theta(0) * G.F.zeta(1)


def test_delta_fixes_k_tilde():
    G = GghaAlgebra(4, 3, 1)
    for i, j in itertools.combinations(range(3), 2):
        assert G.apply_morphism("delta", G.k_tilde(i, j)) == G.k_tilde(i, j)


@pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (2, 3)])
def test_morphisms(r, n):
    G = GghaAlgebra(r, n, 1)
    rng = random.Random(9)
    for _ in range(100):
        a = G.random_elem(rng, 2, 2)
        assert G.apply_morphism("iota", G.apply_morphism("iota", a)) == a
    for _ in range(15):
        a, b = G.random_elem(rng, 2, 1), G.random_elem(rng, 2, 1)
        assert G.apply_morphism("iota", a * b) == G.apply_morphism("iota", b) * G.apply_morphism("iota", a)
        assert G.apply_morphism("delta", a * b) == G.apply_morphism("delta", a) * G.apply_morphism("delta", b)


@settings(max_examples=40)
@given(seed=st.integers(0, 10 ** 6))
def test_filtration(seed):
    G = GghaAlgebra(2, 3, 1)
    rng = random.Random(seed)

    def mono():
        w = rng.choice(all_perms(3))
        t = tuple(rng.randrange(2) for _ in range(3))
        return w, t, tuple(rng.randint(0, 2) for _ in range(3))

    (w1, t1, a1), (w2, t2, a2) = mono(), mono()
    a, b = G.monomial(w1, t1, a1), G.monomial(w2, t2, a2)
    prod = a * b
    assert prod.d_degree() <= sum(a1) + sum(a2)
    # top-degree part: w1 w2 . theta-part . D^{w2^{-1}(a1) + a2}
    top = {k: v for k, v in prod.terms.items() if sum(k[2]) == sum(a1) + sum(a2)}
    from gghecke.refl_group import compose, inverse_perm, twist
    shifted = twist(inverse_perm(w2), a1)
    assert all(k[0] == compose(w1, w2) and k[2] == tuple(x + y for x, y in zip(shifted, a2)) for k in top)
    assert len(top) == 1


def test_json_roundtrip():
    G = GghaAlgebra(3, 3, 1)
    a = G.random_elem(random.Random(3), 4, 3)
    assert GghaElem.from_json(G, a.to_json()) == a


def test_generator_relations_hold_in_normal_form():
    G = GghaAlgebra(3, 3, 2)
    gens = dict(G.generators())
    for label, terms in G.relations():
        acc = G.zero()
        for c, word in terms:
            x = G.one()
            for g in word:
                x = x * gens[g]
            acc = acc + x * c
        assert acc.is_zero(), label
