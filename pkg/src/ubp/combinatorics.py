"""Integer partitions, vector partitions and set partitions of [k].

Conventions used across the package:

* a partition is a tuple of positive ints in nonincreasing order;
* a vector partition of k is a tuple of exactly k partitions
  (lambda1, ..., lambdak) with sum(i * |lambda_i|) == k;
* a set partition of [k] is a tuple of blocks, each block a sorted tuple,
  blocks ordered by (size, max element) -- the graded last letter order.
"""
from collections import Counter
from functools import cache
from math import factorial, prod


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def partition(parts) -> tuple:
    """Normalize any iterable of positive ints into a partition."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


@cache
def partitions(n: int) -> tuple:
    """All partitions of n, in reverse-lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def multiplicities(lam) -> dict:
    return dict(Counter(lam))


def mult_factorial(lam) -> int:
    return prod(factorial(m) for m in Counter(lam).values())


def z(lam) -> int:
    """z_lambda = prod(parts) * prod(multiplicity!)."""
    return prod(lam) * mult_factorial(lam)


def conjugate(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def rl_key(lam):
    """Sort key for reverse-lex order: lam < mu iff lam_i > mu_i at the first
    differing index."""
    return tuple(-p for p in lam)


def exponential(lam) -> str:
    """Exponential notation, e.g. (3,1,1) -> '1^2 3'."""
    c = Counter(lam)
    out = []
    for i in sorted(c):
        out.append(f"{i}" if c[i] == 1 else f"{i}^{c[i]}")
    return " ".join(out)


# -- vector partitions --------------------------------------------------------

def vector_partition(components, k: int | None = None) -> tuple:
    """Build a vector partition, padding with empty partitions up to k slots."""
    comps = [partition(c) for c in components]
    if k is None:
        k = vp_size(comps)
    if len(comps) > k:
        if any(comps[k:]):
            raise ValueError(f"vector partition has nonempty slot beyond {k}")
        comps = comps[:k]
    comps += [()] * (k - len(comps))
    vp = tuple(comps)
    if vp_size(vp) != k:
        raise ValueError(f"{display_vp(vp)} is not a vector partition of {k}")
    return vp


def vp_size(vp) -> int:
    return sum(i * sum(c) for i, c in enumerate(vp, start=1))


def trim(vp) -> tuple:
    """Drop trailing empty partitions."""
    vp = tuple(vp)
    end = len(vp)
    while end and not vp[end - 1]:
        end -= 1
    return vp[:end]


def pad(vp, k: int) -> tuple:
    vp = trim(vp)
    if len(vp) > k:
        raise ValueError(f"{display_vp(vp)} does not fit in {k} slots")
    return vp + ((),) * (k - len(vp))


def display_vp(vp) -> str:
    comps = trim(vp)
    def one(c):
        return "∅" if not c else "(" + ",".join(map(str, c)) + ")"
    return "(" + ", ".join(one(c) for c in comps) + ")"


def type_up(vp) -> tuple:
    """The partition of k with |lambda_i| parts equal to i."""
    parts = []
    for i, c in enumerate(vp, start=1):
        parts += [i] * sum(c)
    return partition(parts)


def vp_z(vp) -> int:
    return prod(z(c) for c in vp)


def vp_mult_factorial(vp) -> int:
    return prod(mult_factorial(c) for c in vp)


def vp_length(vp) -> int:
    return sum(len(c) for c in vp)


def vp_key(vp):
    return (rl_key(type_up(vp)), tuple(rl_key(c) for c in vp))


@cache
def enumerate_Ik(k: int) -> tuple:
    """All vector partitions of k in table order: type-up by reverse-lex,
    ties broken component by component by reverse-lex."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = []
    for lam in partitions(k):
        counts = Counter(lam)
        choices = [partitions(counts.get(i, 0)) for i in range(1, k + 1)]

        def build(i, acc):
            if i == k:
                out.append(tuple(acc))
                return
            for c in choices[i]:
                build(i + 1, acc + [c])

        build(0, [])
    return tuple(sorted(out, key=vp_key))


# -- set partitions -----------------------------------------------------------

def block_key(block):
    return (len(block), max(block))


def set_partition(blocks) -> tuple:
    """Canonical form: blocks sorted ascending, ordered by (size, max)."""
    bl = [tuple(sorted(b)) for b in blocks]
    if any(not b for b in bl):
        raise ValueError("empty block in set partition")
    seen = [x for b in bl for x in b]
    if len(seen) != len(set(seen)):
        raise ValueError("blocks of a set partition must be disjoint")
    return tuple(sorted(bl, key=block_key))


def check_set_partition(pi, k: int):
    elems = sorted(x for b in pi for x in b)
    if elems != list(range(1, k + 1)):
        raise ValueError(f"{format_setpartition(pi)} is not a set partition of [{k}]")


def ground_size(pi) -> int:
    return sum(len(b) for b in pi)


def sp_type(pi) -> tuple:
    return partition(len(b) for b in pi)


def sp_count(k: int, lam) -> int:
    """Number of set partitions of [k] of type lam."""
    if sum(lam) != k:
        raise ValueError(f"partition {lam} does not have weight {k}")
    c = Counter(lam)
    return factorial(k) // prod(factorial(a) * factorial(i) ** a for i, a in c.items())


@cache
def bell(k: int) -> int:
    return sum(sp_count(k, lam) for lam in partitions(k))


def restricted_growth_strings(n: int):
    """All restricted growth strings of length n, lexicographically."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 2):
            a[i] = v
            yield from rec(i + 1, max(m, v))

    a[0] = 0
    yield from rec(1, 0)


def rgs_to_blocks(rgs, items) -> list:
    blocks = {}
    for label, item in zip(rgs, items):
        blocks.setdefault(label, []).append(item)
    return [blocks[i] for i in sorted(blocks)]


def enumerate_setpartitions(k: int, type_filter=None) -> list:
    """Set partitions of [k] in restricted-growth-string order."""
    if type_filter is not None:
        type_filter = partition(type_filter)
        if sum(type_filter) != k:
            raise ValueError(f"partition {type_filter} does not have weight {k}")
    out = []
    for rgs in restricted_growth_strings(k):
        pi = set_partition(rgs_to_blocks(rgs, range(1, k + 1)))
        if type_filter is None or sp_type(pi) == type_filter:
            out.append(pi)
    return out


def join(pi, gamma) -> tuple:
    """Finest common coarsening of two set partitions of the same ground set."""
    if sorted(x for b in pi for x in b) != sorted(x for b in gamma for x in b):
        raise ValueError("join needs set partitions of the same ground set")
    parent = {x: x for b in pi for x in b}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in list(pi) + list(gamma):
        r = find(b[0])
        for x in b[1:]:
            parent[find(x)] = r
    groups = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return set_partition(groups.values())


def is_finer(pi, gamma) -> bool:
    """True if every block of pi sits inside a block of gamma."""
    where = {x: i for i, b in enumerate(gamma) for x in b}
    return all(len({where[x] for x in b}) == 1 for b in pi)


def format_setpartition(pi) -> str:
    if not pi:
        return "∅"
    k = ground_size(pi)
    sep = "," if k > 9 else ""
    return "|".join(sep.join(map(str, b)) for b in pi)

