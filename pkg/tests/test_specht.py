from math import factorial

import pytest
from hypothesis import given, strategies as st

from ubp.combinatorics import partitions, z
from ubp.green import perm_cycle_type
from ubp.specht import (
    character_sn, character_table_sn, generator_matrix, hook_count, is_standard,
    perm_matrix, reduced_word, standard_tableaux, straighten,
)
from strategies import partitions_of

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


def matmul(a, b):
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in zip(*b)) for r in a)


def cycle_type(w):
    return perm_cycle_type(tuple(x - 1 for x in w))


def test_character_table_s3():
    assert character_table_sn(3) == ((1, 1, 1), (-1, 0, 2), (1, -1, 1))


def test_character_values():
    assert character_sn((3, 1), (2, 2)) == -1
    assert character_sn((2, 2), (3, 1)) == -1
    assert character_sn((4, 4), (1,) * 8) == 14


def test_straighten_two_terms():
    # the first row is the longest; (2 1 / 3) is not standard
    assert straighten(((2, 1), (3,))) == {((1, 2), (3,)): 1, ((1, 3), (2,)): -1}


def test_straighten_standard_is_identity():
    t = ((1, 3), (2,))
    assert straighten(t) == {t: 1}


def test_straighten_with_labels():
    labels = [(2,), (5,), (7,)]
    t = ((labels[1], labels[0]), (labels[2],))
    assert straighten(t, labels) == {((labels[0], labels[1]), (labels[2],)): 1,
                                     ((labels[0], labels[2]), (labels[1],)): -1}


@pytest.mark.parametrize("n", range(0, 9))
def test_sum_of_squares(n):
    assert sum(hook_count(lam) ** 2 for lam in partitions(n)) == factorial(n)


@given(partitions_of(7))
def test_hook_count_counts_standard_tableaux(lam):
    tabs = standard_tableaux(lam)
    assert len(tabs) == hook_count(lam)
    assert all(is_standard(t) for t in tabs)


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    table = character_table_sn(n)
    parts = partitions(n)
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            inner = sum(x * y * factorial(n) // z(mu) for x, y, mu in zip(a, b, parts))
            assert inner == (factorial(n) if i == j else 0)


@given(perms, st.data())
def test_representation_is_homomorphism(w, data):
    n = len(w)
    v = data.draw(st.permutations(range(1, n + 1)).map(tuple))
    lam = data.draw(st.sampled_from(partitions(n)))
    vw = tuple(v[w[i] - 1] for i in range(n))
    assert perm_matrix(lam, vw) == matmul(perm_matrix(lam, v), perm_matrix(lam, w))


@given(perms, st.data())
def test_trace_is_character(w, data):
    lam = data.draw(st.sampled_from(partitions(len(w))))
    M = perm_matrix(lam, w)
    assert sum(M[i][i] for i in range(len(M))) == character_sn(lam, cycle_type(w))


@pytest.mark.parametrize("lam", [(3, 1), (2, 2), (2, 1, 1), (3, 2)])
def test_coxeter_relations(lam):
    n = sum(lam)
    one = perm_matrix(lam, tuple(range(1, n + 1)))
    S = {i: generator_matrix(lam, i) for i in range(1, n)}
    for i in S:
        assert matmul(S[i], S[i]) == one
        if i + 1 < n:
            a, b = S[i], S[i + 1]
            assert matmul(matmul(a, b), a) == matmul(matmul(b, a), b)


@given(perms)
def test_reduced_word_rebuilds_permutation(w):
    n = len(w)
    u = list(range(1, n + 1))
    for i in reversed(reduced_word(w)):
        u = [i + 1 if x == i else i if x == i + 1 else x for x in u]
    assert tuple(u) == w
