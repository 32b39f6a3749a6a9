from hypothesis import given, strategies as st

from ubp.combinatorics import enumerate_setpartitions, partitions, sp_count, sp_type
from ubp.diagram import enumerate_monoid, idempotent_of
from ubp.formats import format_setpartition, parse_diagram, parse_setpartition
from ubp.green import (
    act_on_rep, canonical_pi, jclass, lclass, maximal_subgroup, orbit_rep,
)


def test_canonical_pi_example():
    pi = canonical_pi((3, 2, 2, 1, 1, 1, 1))
    assert format_setpartition(pi) == "1|2|3|4|5,6|7,8|9,10,11"


def test_jclass_sizes_k3():
    assert {lam: len(jclass(lam)) for lam in partitions(3)} == {
        (3,): 1, (2, 1): 9, (1, 1, 1): 6}


def test_lclass_sizes_k3():
    sizes = {format_setpartition(pi): len(lclass(pi)) for pi in enumerate_setpartitions(3)}
    assert sizes == {"123": 1, "1|23": 3, "2|13": 3, "3|12": 3, "1|2|3": 6}


def test_maximal_subgroup_example():
    G = maximal_subgroup(parse_setpartition("1|2|34|56"))
    assert len(G) == 4
    assert "1,2' | 2,1' | 3,4,5',6' | 5,6,3',4'" in {str(d) for d in G.diagrams()}


def test_orbit_representative_example():
    rep = orbit_rep(parse_setpartition("12|34"), parse_setpartition("13|24"))
    assert str(rep.diagram) == "1,3,1',2' | 2,4,3',4'"


def test_right_action_example():
    pi, gamma = parse_setpartition("12|34"), parse_setpartition("13|24")
    m = parse_diagram("1,4,1',3' | 2,3,2',4'")
    gamma2, g = act_on_rep(m, orbit_rep(pi, gamma))
    assert format_setpartition(gamma2) == "23|14"
    assert str(g.diagram) == "1,2,3',4' | 3,4,1',2'"


@given(st.integers(0, 4))
def test_jclasses_partition_monoid(k):
    elems = enumerate_monoid(k)
    total = 0
    for lam in partitions(k):
        J = jclass(lam, k)
        assert len(J) == len(set(J))
        assert all(sp_type(d.top()) == lam for d in J)
        total += len(J)
    assert total == len(elems)


@given(st.integers(0, 4))
def test_lclass_and_orbits(k):
    for pi in enumerate_setpartitions(k):
        L = lclass(pi)
        G = maximal_subgroup(pi)
        assert all(d.bot() == pi for d in L)
        orbits = {frozenset(l * g for g in G.diagrams()) for l in L}
        # free right action: every orbit has |G| elements, one per top partition
        assert all(len(o) == len(G) for o in orbits)
        assert len(orbits) == sp_count(k, sp_type(pi))
        assert len(L) == len(G) * len(orbits)


@given(st.integers(1, 5))
def test_maximal_subgroup_is_group(k):
    for pi in enumerate_setpartitions(k)[:6]:
        G = maximal_subgroup(pi)
        e = idempotent_of(pi, k)
        elems = set(G.diagrams())
        assert e in elems
        for g in list(elems)[:12]:
            assert g * g.involution() == e
            for h in list(elems)[:12]:
                assert g * h in elems
