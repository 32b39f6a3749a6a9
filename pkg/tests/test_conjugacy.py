import pytest
from hypothesis import given, strategies as st

from ubp.combinatorics import enumerate_Ik, type_up, vector_partition
from ubp.conjugacy import (
    are_conjugate, b_coeff, b_matrix, b_matrix_bruteforce, class_rep, cycletype,
    merge_set, omega,
)
from ubp.diagram import enumerate_monoid, idempotent_of
from ubp.formats import parse_diagram, parse_setpartition
from goldens import B4
from strategies import diagrams, vector_partitions

X10 = parse_diagram("1,7' | 2,8' | 3,4,4',5' | 5,10,9',10' | 6,6' | 7,8,1',2' | 9,3'")
MU = vector_partition([(4, 2), (2,)], 10)



def test_idempotent_power_example():
    e, m = omega(X10)
    pi = parse_setpartition("6|12|78|3,4,5,9,10")
    assert e == idempotent_of(pi, 10)
    assert m == 2
    assert X10 ** 4 == e
    assert cycletype(X10) == vector_partition([(1,), (2,), (), (), (1,)], 10)


def test_x_power_five():
    x5 = X10 ** 5
    assert str(x5) == "1,2,7',8' | 3,4,5,9,10,3',4',5',9',10' | 6,6' | 7,8,1',2'"
    assert x5 == X10 ** 3


def test_class_rep_k34():
    mu = vector_partition([(2, 1), (), (3, 1, 1), (2, 2)], 34)
    expected = ("1,2' | 2,1' | 3,3' | 4,5,6,7',8',9' | 7,8,9,10',11',12' | "
                "10,11,12,4',5',6' | 13,14,15,13',14',15' | 16,17,18,16',17',18' | "
                "19,20,21,22,23',24',25',26' | 23,24,25,26,19',20',21',22' | "
                "27,28,29,30,31',32',33',34' | 31,32,33,34,27',28',29',30'")
    assert str(class_rep(mu)) == expected


def test_class_rep_k10():
    assert str(class_rep(MU)) == ("1,2' | 2,3' | 3,4' | 4,1' | 5,6' | 6,5' | "
                                  "7,8,9',10' | 9,10,7',8'")


@pytest.mark.parametrize("nu, expected", [
    ([(), (2, 1), (), (1,)], 2),
    ([(), (2,), (2,)], 4),
    ([(), (2, 2, 1)], 1),
])
def test_b_values_and_merge_sets(nu, expected):
    nu = vector_partition(nu, 10)
    assert b_coeff(MU, nu) == expected
    assert len(merge_set(class_rep(MU), nu)) == expected


def test_merge_set_by_type():
    d = class_rep(vector_partition([(2, 2)], 4))
    assert len(merge_set(d, (2, 2))) == 3


def test_b_matrix_k4():
    assert [list(r) for r in b_matrix(4)] == B4


@pytest.mark.parametrize("k", range(0, 6))
def test_b_formula_equals_bruteforce(k):
    assert b_matrix(k) == b_matrix_bruteforce(k)


@given(vector_partitions(max_k=7))
def test_class_rep_has_its_cycletype(mu):
    d = class_rep(mu)
    assert cycletype(d) == mu
    assert sorted(len(t) for t, _ in d.blocks) == sorted(type_up(mu))


@given(diagrams(max_k=6))
def test_cycletype_of_power(d):
    e, m = omega(d)
    assert e.is_idempotent()
    assert all(not (d ** j).is_idempotent() for j in range(1, m))
    assert cycletype(d) == cycletype(e * d)


@pytest.mark.parametrize("k", range(0, 4))
def test_conjugacy_classes_are_cycletypes(k):
    monoid = enumerate_monoid(k)
    reps = {mu: class_rep(mu) for mu in enumerate_Ik(k)}
    for d in monoid:
        ct = cycletype(d)
        assert are_conjugate(d, reps[ct], monoid)
    for mu in reps:
        for nu in reps:
            assert are_conjugate(reps[mu], reps[nu], monoid) == (mu == nu)
