"""The uniform block permutation monoid.

An element on [k] is a set partition of {1..k} and {1'..k'} whose blocks
each contain as many primed as unprimed points.  We store it as a tuple of
(top, bot) pairs: ``top`` the unprimed points of a block and ``bot`` the
primed points (as plain ints), both sorted, blocks sorted by min(top).

The product ``d * e`` stacks d above e: the primed row of d is glued to the
unprimed row of e, and the middle row is erased.  For permutations this
means ``(s * t)(i) = t(s(i))``.
"""
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from collections import Counter

from .combinatorics import (
    enumerate_setpartitions, partitions, set_partition, sp_count, sp_type,
)

DEFAULT_MAX_K = 6


class ResourceError(RuntimeError):
    """Raised when a request would exceed a configured size bound."""


@dataclass(frozen=True, slots=True)
class Diagram:
    k: int
    blocks: tuple

    @classmethod
    def from_blocks(cls, k: int, blocks) -> "Diagram":
        """Validated constructor.  ``blocks`` is an iterable of (top, bot)."""
        bl = []
        for top, bot in blocks:
            top, bot = tuple(sorted(top)), tuple(sorted(bot))
            if len(top) != len(bot) or not top:
                raise ValueError(f"block {_block_str(top, bot)} is not uniform")
            bl.append((top, bot))
        tops = sorted(x for t, _ in bl for x in t)
        bots = sorted(x for _, b in bl for x in b)
        full = list(range(1, k + 1))
        if tops != full:
            raise ValueError(f"unprimed points {tops} do not cover 1..{k} exactly once")
        if bots != full:
            raise ValueError(f"primed points {bots} do not cover 1'..{k}' exactly once")
        return cls._make(k, bl)

    @classmethod
    def _make(cls, k, blocks):
        return cls(k, tuple(sorted(blocks, key=lambda b: b[0][0])))

    def top(self) -> tuple:
        return set_partition(t for t, _ in self.blocks)

    def bot(self) -> tuple:
        return set_partition(b for _, b in self.blocks)

    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_map(self) -> dict:
        """top block -> bot block."""
        return {t: b for t, b in self.blocks}

    def __mul__(self, other: "Diagram") -> "Diagram":
        return multiply(self, other)

    def __pow__(self, m: int) -> "Diagram":
        if m < 0:
            raise ValueError("negative power")
        out = identity(self.k)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def involution(self) -> "Diagram":
        return involution(self)

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_permutation(self) -> bool:
        return all(len(t) == 1 for t, _ in self.blocks)

    def __str__(self):
        return " | ".join(_block_str(t, b) for t, b in self.blocks) or "{}"

    def __repr__(self):
        return f"Diagram({self.k}, '{self}')"


def _block_str(top, bot):
    return ",".join([str(x) for x in top] + [f"{x}'" for x in bot])


def multiply(d: Diagram, e: Diagram) -> Diagram:
    """Stack d on top of e and take connected components."""
    if d.k != e.k:
        raise ValueError(f"cannot multiply diagrams on {d.k} and {e.k} points")
    k = d.k
    # vertices: 0..k-1 top of d, k..2k-1 middle, 2k..3k-1 bottom of e
    parent = list(range(3 * k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for top, bot in d.blocks:
        r = top[0] - 1
        for x in top[1:]:
            union(r, x - 1)
        for x in bot:
            union(r, k + x - 1)
    for top, bot in e.blocks:
        r = k + top[0] - 1
        for x in top[1:]:
            union(r, k + x - 1)
        for x in bot:
            union(r, 2 * k + x - 1)
    comps = {}
    for i in range(k):
        comps.setdefault(find(i), ([], []))[0].append(i + 1)
    for i in range(k):
        comps.setdefault(find(2 * k + i), ([], []))[1].append(i + 1)
    blocks = []
    for top, bot in comps.values():
        if top or bot:
            assert len(top) == len(bot), "product left the uniform monoid"
            blocks.append((tuple(top), tuple(bot)))
    return Diagram._make(k, blocks)


def involution(d: Diagram) -> Diagram:
    """Flip the diagram upside down: swaps primed and unprimed points."""
    return Diagram._make(d.k, [(b, t) for t, b in d.blocks])


def identity(k: int) -> Diagram:
    return Diagram._make(k, [((i,), (i,)) for i in range(1, k + 1)])


def permutation(images) -> Diagram:
    """Diagram of the permutation i -> images[i-1]."""
    k = len(images)
    if sorted(images) != list(range(1, k + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{k}")
    return Diagram._make(k, [((i,), (images[i - 1],)) for i in range(1, k + 1)])


def as_permutation(d: Diagram) -> tuple:
    if not d.is_permutation():
        raise ValueError(f"{d} is not a permutation")
    return tuple(b[0] for _, b in d.blocks)


def idempotent_of(pi, k: int | None = None) -> Diagram:
    """e_pi = {A u A' : A in pi}."""
    if k is None:
        k = sum(len(b) for b in pi)
    return Diagram.from_blocks(k, [(b, b) for b in pi])


def s(i: int, k: int) -> Diagram:
    """Adjacent transposition of i and i+1."""
    if not 1 <= i < k:
        raise ValueError(f"generator index {i} out of range for k={k}")
    images = list(range(1, k + 1))
    images[i - 1], images[i] = i + 1, i
    return permutation(images)


def b(i: int, k: int) -> Diagram:
    """The idempotent merging {i, i+1} with {i', (i+1)'}."""
    if not 1 <= i < k:
        raise ValueError(f"generator index {i} out of range for k={k}")
    pi = [(j,) for j in range(1, k + 1) if j not in (i, i + 1)] + [(i, i + 1)]
    return idempotent_of(pi, k)


def generators(k: int) -> tuple:
    return [s(i, k) for i in range(1, k)], [b(i, k) for i in range(1, k)]


def relation_failures(k: int) -> list:
    """Check the defining relations on all generator indices.  Returns a list
    of human-readable descriptions of the relations that fail."""
    one = identity(k)
    S = {i: s(i, k) for i in range(1, k)}
    B = {i: b(i, k) for i in range(1, k)}
    bad = []

    def check(name, lhs, rhs):
        if lhs != rhs:
            bad.append(name)

    for i in range(1, k):
        check(f"s{i}^2 = 1", S[i] * S[i], one)
        check(f"b{i}^2 = b{i}", B[i] * B[i], B[i])
        check(f"b{i}s{i} = b{i}", B[i] * S[i], B[i])
        check(f"s{i}b{i} = b{i}", S[i] * B[i], B[i])
        if i + 1 < k:
            check(f"s{i}s{i+1}s{i} = s{i+1}s{i}s{i+1}",
                  S[i] * S[i + 1] * S[i], S[i + 1] * S[i] * S[i + 1])
            check(f"s{i}b{i+1}s{i} = s{i+1}b{i}s{i+1}",
                  S[i] * B[i + 1] * S[i], S[i + 1] * B[i] * S[i + 1])
        for j in range(1, k):
            if abs(i - j) > 1:
                check(f"s{i}s{j} = s{j}s{i}", S[i] * S[j], S[j] * S[i])
                check(f"b{i}s{j} = s{j}b{i}", B[i] * S[j], S[j] * B[i])
            check(f"b{i}b{j} = b{j}b{i}", B[i] * B[j], B[j] * B[i])
    return bad


def check_relations(k: int) -> bool:
    return not relation_failures(k)


def factorize(d: Diagram) -> Diagram:
    """Permutation sigma with d = e_top(d) * sigma = sigma * e_bot(d).

    sigma sends the j-th smallest point of each top block to the j-th
    smallest point of the matching bottom block.
    """
    images = [0] * d.k
    for top, bot in d.blocks:
        for x, y in zip(top, bot):
            images[x - 1] = y
    return permutation(images)


def monoid_size(k: int) -> int:
    """sum over lam |- k of sp(lam)^2 * prod(a_i!)."""
    total = 0
    for lam in partitions(k):
        total += sp_count(k, lam) ** 2 * prod(factorial(a) for a in Counter(lam).values())
    return total


def block_bijections(gamma, pi):
    """All size-preserving bijections between the blocks of gamma and pi,
    yielded as lists of (gamma block, pi block) pairs."""
    by_size_g, by_size_p = {}, {}
    for blk in gamma:
        by_size_g.setdefault(len(blk), []).append(blk)
    for blk in pi:
        by_size_p.setdefault(len(blk), []).append(blk)
    if sorted((s_, len(v)) for s_, v in by_size_g.items()) != \
            sorted((s_, len(v)) for s_, v in by_size_p.items()):
        return
    sizes = sorted(by_size_g)
    options = [permutations(by_size_p[sz]) for sz in sizes]
    for choice in product(*options):
        pairs = []
        for sz, perm in zip(sizes, choice):
            pairs += list(zip(by_size_g[sz], perm))
        yield pairs


def enumerate_monoid(k: int, max_k: int = DEFAULT_MAX_K) -> list:
    """Every element of the monoid on [k]."""
    if k > max_k:
        raise ResourceError(f"enumerating the monoid for k={k} exceeds the bound {max_k}")
    out = []
    by_type = {}
    for pi in enumerate_setpartitions(k):
        by_type.setdefault(sp_type(pi), []).append(pi)
    for lam in partitions(k):
        group = by_type.get(lam, [])
        for gamma in group:
            for pi in group:
                for pairs in block_bijections(gamma, pi):
                    out.append(Diagram._make(k, pairs))
    return out
