import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exotic_springer.errors import BadParametersError, GroupTooLargeError, IndexOutOfRangeError, ParseError
from exotic_springer.weyl import (
    SignedPermutation,
    act_on_monomial,
    character_table,
    character_value,
    character_value_bruteforce,
    coxeter_relations,
    group_elements,
    group_order,
    inner_product,
    inner_product_bruteforce,
    operator_matrix,
    verify_generator_relations,
)
from oracles import action_matrix, signed_perms, trace

S = SignedPermutation


@st.composite
def elements(draw, m=None):
    m = m or draw(st.integers(1, 7))
    pi = draw(st.permutations(range(1, m + 1)))
    eps = draw(st.lists(st.sampled_from([1, -1]), min_size=m, max_size=m))
    return S(m, tuple(pi), tuple(eps))


def test_action_examples():
    assert act_on_monomial(S.generator(0, 4), [1]) == (-1, (1,))
    assert act_on_monomial(S.identity(4), [2, 4]) == (1, (2, 4))
    assert act_on_monomial(S.generator(1, 4), [1, 3]) == (1, (2, 3))
    with pytest.raises(IndexOutOfRangeError):
        act_on_monomial(S.identity(3), [4])
    with pytest.raises(IndexOutOfRangeError):
        S.generator(4, 4)


def test_character_examples():
    assert character_value(4, 3, 1, S.generator(0, 4)) == 2
    assert character_value(4, 3, 1, S.generator(1, 4)) == 2
    assert character_value(4, 3, 1, S.identity(4)) == 4
    with pytest.raises(BadParametersError):
        character_value(4, 3, 2, S.identity(4))


def test_inner_product_examples():
    assert inner_product(2, 1, 1, 1) == 1
    assert inner_product(4, 0, 0, 0) == 1
    assert inner_product(4, 2, 1, 2) == 0
    assert isinstance(inner_product(3, 0, 1, 2), Fraction)


def test_inner_product_bound(monkeypatch):
    with pytest.raises(GroupTooLargeError):
        inner_product(8, 0, 1, 1)
    monkeypatch.setenv("EXOTIC_BRUTE_BOUND", "3")
    with pytest.raises(GroupTooLargeError):
        inner_product(4, 0, 1, 1)
    monkeypatch.setenv("EXOTIC_BRUTE_BOUND", "lots")
    with pytest.raises(BadParametersError):
        inner_product(2, 0, 1, 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_orthonormality(m):
    for k in range(m + 1):
        for l in range(m - k + 1):
            for l2 in range(m - k + 1):
                assert inner_product(m, k, l, l2) == (1 if l == l2 else 0)


@pytest.mark.parametrize("m", range(1, 5))
def test_gram_against_oracle_traces(m):
    for l in range(m + 1):
        for l2 in range(m + 1):
            total = sum(
                trace(action_matrix(pi, eps, m, l)) * trace(action_matrix(pi, eps, m, l2)) for pi, eps in signed_perms(m)
            )
            assert inner_product(m, 0, l, l2) == Fraction(total, group_order(m))
    assert inner_product_bruteforce(3, 0, 1, 1) == 1


@pytest.mark.parametrize("m", range(1, 5))
def test_operator_matrices_match_oracle(m):
    for w in group_elements(m):
        for l in range(m + 1):
            assert operator_matrix(w, 0, l) == action_matrix(w.pi, w.eps, m, l)
            assert character_value(m, 0, l, w) == character_value_bruteforce(m, 0, l, w)


@given(elements(), st.data())
def test_action_is_a_homomorphism(w, data):
    v = data.draw(elements(w.m))
    for l in range(w.m + 1):
        a, b, ab = operator_matrix(v, 0, l), operator_matrix(w, 0, l), operator_matrix(v * w, 0, l)
        n = len(a)
        assert ab == [[sum(a[r][t] * b[t][c] for t in range(n)) for c in range(n)] for r in range(n)]


def test_class_function_random_conjugates():
    rng = random.Random(3)
    for _ in range(1000):
        m = rng.randint(1, 6)
        w = S(m, tuple(rng.sample(range(1, m + 1), m)), tuple(rng.choice((1, -1)) for _ in range(m)))
        g = S(m, tuple(rng.sample(range(1, m + 1), m)), tuple(rng.choice((1, -1)) for _ in range(m)))
        l = rng.randint(0, m)
        assert character_value(m, 0, l, g * w * g.inverse()) == character_value(m, 0, l, w)


def test_degree_zero_is_trivial():
    for w in group_elements(3):
        assert character_value(3, 1, 0, w) == 1


@given(elements())
def test_group_laws(w):
    e = S.identity(w.m)
    assert w * e == w == e * w
    assert w * w.inverse() == e
    for i in range(1, w.m + 1):
        assert abs(w(i)) == w.pi[i - 1]


def test_parsing():
    assert S.parse("s0 s1", 4) == S.parse("2 -1 3 4", 4)
    assert S.parse("s0 s1", 4).window() == "2 -1 3 4"
    assert S.parse("e", 3) == S.identity(3)
    assert str(S.parse("s0 s1", 4)) == "s0 s1"
    for bad in ["s0 t1", "1 2", "1 1 2", "x y z"]:
        with pytest.raises(ParseError):
            S.parse(bad, 3)


def test_relations():
    assert verify_generator_relations(4)
    assert verify_generator_relations(4, k=2).to_json()["ok"]
    s0, s1, s2 = (S.generator(i, 4) for i in range(3))
    a = operator_matrix(s1 * s2 * s1, 2, 2)
    assert a == operator_matrix(s2 * s1 * s2, 2, 2)
    assert operator_matrix(s0 * s2, 2, 2) == operator_matrix(s2 * s0, 2, 2)
    assert ("s0 s1 s0 s1", "s1 s0 s1 s0") in coxeter_relations(3)


def test_character_table_json():
    table = character_table(4, 3, 2)
    assert table["degree"] == 2
    assert table["values"][:2] == [{"w": "e", "chi": 4}, {"w": "s0", "chi": 2}]
    with pytest.raises(BadParametersError):
        character_table(4, 3, 3)
