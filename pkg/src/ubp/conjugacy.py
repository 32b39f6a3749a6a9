"""Idempotent powers, cycle types, class representatives and the merge
counts b_mu^nu (by formula and by brute force)."""
from collections import Counter
from fractions import Fraction
from functools import cache
from math import lcm

from .combinatorics import (
    enumerate_Ik, partition, restricted_growth_strings, rgs_to_blocks,
    set_partition, type_up, vector_partition, vp_z,
)
from .diagram import Diagram, ResourceError
from .green import canonical_pi, element_perms, perm_cycle_type, size_classes

MERGE_MAX_BLOCKS = 10


def omega(d: Diagram):
    """(e, m) with e = d^m idempotent and m minimal."""
    power, m = d, 1
    # every block maps into a chain that stabilises within k steps, and the
    # eventual permutation has order dividing lcm(1..k)
    bound = d.k + lcm(*range(1, d.k + 1)) if d.k else 1
    while not power.is_idempotent():
        power = power * d
        m += 1
        if m > bound:
            raise AssertionError(f"no idempotent power of {d} found up to {bound}")
    return power, m


def cycletype(d: Diagram) -> tuple:
    """Cycle type of d^(omega+1) as a block permutation, split by block size."""
    e, m = omega(d)
    y = e * d
    pi = e.top()
    perms = element_perms(pi, y)
    comps = [()] * d.k
    for size, perm in perms.items():
        comps[size - 1] = perm_cycle_type(perm)
    return tuple(comps)


def class_rep(mu) -> Diagram:
    """d_mu: on canonical_pi(type(mu)), the blocks of size i are cut into
    consecutive runs of lengths mu^(i), each run rotated one step."""
    k = len(mu)
    mu = vector_partition(mu, k)
    pi = canonical_pi(type_up(mu))
    classes = size_classes(pi)
    pairs = []
    for size, parts in enumerate(mu, start=1):
        blocks = classes.get(size, [])
        start = 0
        for r in parts:
            run = blocks[start:start + r]
            for j in range(r):
                pairs.append((run[j], run[(j + 1) % r]))
            start += r
    return Diagram._make(k, pairs)


def _groupings(n, weights, target):
    """Set partitions of range(n) (as lists of groups) whose group weights,
    as a multiset, equal ``target``; None means no constraint.  Groups are
    built in restricted-growth order with pruning on weight and count."""
    if target is None:
        for rgs in restricted_growth_strings(n):
            yield rgs_to_blocks(rgs, range(n))
        return
    target = Counter(target)
    cap = max(target, default=0)
    nparts = sum(target.values())
    groups, gw = [], []

    def rec(i):
        if i == n:
            if Counter(gw) == target:
                yield [list(g) for g in groups]
            return
        w = weights[i]
        for g in range(len(groups)):
            if gw[g] + w <= cap:
                groups[g].append(i)
                gw[g] += w
                yield from rec(i + 1)
                gw[g] -= w
                groups[g].pop()
        if len(groups) < nparts and w <= cap:
            groups.append([i])
            gw.append(w)
            yield from rec(i + 1)
            gw.pop()
            groups.pop()

    yield from rec(0)


def coarsenings(d: Diagram, sizes=None, max_blocks: int = MERGE_MAX_BLOCKS):
    """Diagrams obtained by merging blocks of d so that the merged top and
    bottom partitions coincide.  ``sizes`` optionally fixes the multiset of
    merged block sizes, which prunes the search."""
    n = d.n_blocks()
    if sizes is None and n > max_blocks:
        raise ResourceError(f"{n} blocks exceeds the merge bound {max_blocks}")
    blocks = d.blocks
    weights = [len(t) for t, _ in blocks]
    for groups in _groupings(n, weights, sizes):
        merged = []
        for grp in groups:
            top = tuple(sorted(x for i in grp for x in blocks[i][0]))
            bot = tuple(sorted(x for i in grp for x in blocks[i][1]))
            merged.append((top, bot))
        if set_partition(t for t, _ in merged) != set_partition(b for _, b in merged):
            continue
        yield Diagram._make(d.k, merged)


def merge_set(d: Diagram, target, max_blocks: int = MERGE_MAX_BLOCKS) -> list:
    """Coarsenings of d with top = bot and either type(top) = target (a
    partition) or cycletype = target (a vector partition)."""
    target = tuple(target)
    if any(isinstance(t, (tuple, list)) for t in target):
        want = vector_partition(target, d.k)
        return [c for c in coarsenings(d, type_up(want), max_blocks) if cycletype(c) == want]
    lam = partition(target)
    if sum(lam) != d.k:
        raise ValueError(f"partition {lam} does not have weight {d.k}")
    return list(coarsenings(d, lam, max_blocks))


def _scaled(tau, c):
    """Multiset of (alphabet, part) obtained by multiplying every part of tau
    by c."""
    return Counter((a, c * p) for a, comp in enumerate(tau, start=1) for p in comp)


def b_coeff(mu, nu) -> int:
    """Number of coarsenings of d_mu with top = bot and cycle type nu,
    summed over all assignments tau(i, j) in I_j of mu's cycles to nu's."""
    k = len(mu)
    mu = vector_partition(mu, k)
    nu = vector_partition(nu, k)
    need = Counter((a, p) for a, comp in enumerate(mu, start=1) for p in comp)
    slots = [(c, j) for j, comp in enumerate(nu, start=1) for c in comp]
    total = Fraction(0)

    def rec(idx, remaining, denom):
        nonlocal total
        if idx == len(slots):
            if not +remaining:
                total += Fraction(1, denom)
            return
        c, j = slots[idx]
        for tau in enumerate_Ik(j):
            used = _scaled(tau, c)
            if any(remaining[key] < n for key, n in used.items()):
                continue
            rec(idx + 1, remaining - used, denom * vp_z(tau))

    rec(0, need, 1)
    val = total * vp_z(mu) / vp_z(nu)
    assert val.denominator == 1, f"non-integral b coefficient {val}"
    return int(val)


@cache
def b_matrix(k: int) -> tuple:
    """Rows and columns in table order; entry [nu][mu] = b_mu^nu."""
    order = enumerate_Ik(k)
    return tuple(tuple(b_coeff(mu, nu) for mu in order) for nu in order)


def b_matrix_bruteforce(k: int) -> tuple:
    order = enumerate_Ik(k)
    rows = {nu: [0] * len(order) for nu in order}
    for col, mu in enumerate(order):
        for c in coarsenings(class_rep(mu)):
            rows[cycletype(c)][col] += 1
    return tuple(tuple(rows[nu]) for nu in order)


def are_conjugate(c: Diagram, d: Diagram, monoid) -> bool:
    """Brute-force conjugacy test: look for x in ``monoid`` with
    x~ x = c^w, x x~ = d^w and x c^(w+1) x~ = d^(w+1)."""
    ec, _ = omega(c)
    ed, _ = omega(d)
    c1, d1 = ec * c, ed * d
    for x in monoid:
        xi = x.involution()
        if xi * x == ec and x * xi == ed and x * c1 * xi == d1:
            return True
    return False
