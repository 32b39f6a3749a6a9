"""Green's classes, maximal subgroups and orbit representatives."""
from dataclasses import dataclass
from itertools import permutations, product

from .combinatorics import (
    enumerate_setpartitions, is_finer, partition, set_partition, sp_type,
)
from .diagram import Diagram, block_bijections, idempotent_of


def canonical_pi(lam) -> tuple:
    """Consecutive blocks, smallest blocks first: (1^4 2^2 3) ->
    1|2|3|4|56|78|9,10,11."""
    blocks, start = [], 1
    for size in sorted(partition(lam)):
        blocks.append(tuple(range(start, start + size)))
        start += size
    return set_partition(blocks)


def lclass(pi) -> list:
    """All d with bot(d) = pi."""
    k = sum(len(blk) for blk in pi)
    out = []
    for gamma in enumerate_setpartitions(k, sp_type(pi)):
        for pairs in block_bijections(gamma, pi):
            out.append(Diagram._make(k, pairs))
    return out


def jclass(lam, k: int | None = None) -> list:
    """All d whose top has type lam; the disjoint union of the L-classes."""
    lam = partition(lam)
    if k is None:
        k = sum(lam)
    if sum(lam) != k:
        raise ValueError(f"partition {lam} does not have weight {k}")
    out = []
    for pi in enumerate_setpartitions(k, lam):
        out += lclass(pi)
    return out


def size_classes(pi) -> dict:
    """size -> list of blocks of that size, in graded last letter order."""
    out = {}
    for blk in pi:
        out.setdefault(len(blk), []).append(blk)
    return out


@dataclass(frozen=True)
class GroupElement:
    """An element of the maximal subgroup at e_pi, as a diagram together with
    a permutation of block positions for each block size.

    ``perms[size][a] == b`` means the a-th block of that size (top) is joined
    to the b-th block of that size (bottom)."""
    diagram: Diagram
    perms: dict

    def cycle_type(self) -> dict:
        out = {}
        for size, perm in self.perms.items():
            out[size] = perm_cycle_type(perm)
        return out


def perm_cycle_type(perm) -> tuple:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        lengths.append(n)
    return partition(lengths)


def group_element(pi, perms: dict) -> GroupElement:
    k = sum(len(blk) for blk in pi)
    classes = size_classes(pi)
    pairs = []
    for size, blocks in classes.items():
        perm = perms[size]
        for a, blk in enumerate(blocks):
            pairs.append((blk, blocks[perm[a]]))
    return GroupElement(Diagram._make(k, pairs), {sz: tuple(p) for sz, p in perms.items()})


def element_perms(pi, g: Diagram) -> dict:
    """Block-position permutations of a diagram with top = bot = pi."""
    classes = size_classes(pi)
    pos = {blk: i for blocks in classes.values() for i, blk in enumerate(blocks)}
    perms = {size: [0] * len(blocks) for size, blocks in classes.items()}
    for top, bot in g.blocks:
        if top not in pos or bot not in pos:
            raise ValueError(f"{g} is not in the maximal subgroup at {pi}")
        perms[len(top)][pos[top]] = pos[bot]
    return {sz: tuple(p) for sz, p in perms.items()}


@dataclass(frozen=True)
class MaximalSubgroup:
    base_partition: tuple
    elements: tuple

    @property
    def identity(self) -> Diagram:
        return idempotent_of(self.base_partition)

    def diagrams(self) -> list:
        return [g.diagram for g in self.elements]

    def __len__(self):
        return len(self.elements)


def maximal_subgroup(pi) -> MaximalSubgroup:
    """All d with top(d) = bot(d) = pi."""
    classes = size_classes(pi)
    sizes = sorted(classes)
    elems = []
    for choice in product(*(permutations(range(len(classes[sz]))) for sz in sizes)):
        elems.append(group_element(pi, dict(zip(sizes, choice))))
    return MaximalSubgroup(pi, tuple(elems))


@dataclass(frozen=True)
class OrbitRepresentative:
    pi: tuple
    gamma: tuple
    diagram: Diagram


def orbit_rep(pi, gamma) -> OrbitRepresentative:
    """l_pi^gamma: top gamma, bottom pi, i-th block of gamma to i-th of pi."""
    if sp_type(pi) != sp_type(gamma):
        raise ValueError("orbit representative needs set partitions of equal type")
    k = sum(len(blk) for blk in pi)
    return OrbitRepresentative(pi, gamma, Diagram._make(k, list(zip(gamma, pi))))


def act_on_rep(m: Diagram, rep: OrbitRepresentative):
    """Solve m * l_pi^gamma = l_pi^gamma' * g.

    Returns None when the product drops blocks (bot(m) not finer than gamma),
    otherwise (gamma', g) with g a GroupElement at e_pi.
    """
    if m.k != rep.diagram.k:
        raise ValueError("diagrams on different k")
    if not is_finer(m.bot(), rep.gamma):
        return None
    prod_ = m * rep.diagram
    gamma2 = prod_.top()
    l2 = orbit_rep(rep.pi, gamma2).diagram
    g = l2.involution() * prod_
    assert l2 * g == prod_
    return gamma2, GroupElement(g, element_perms(rep.pi, g))
