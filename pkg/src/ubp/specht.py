"""Specht modules of the symmetric group with exact integer straightening.

A tableau is a tuple of rows, longest row first, each row a tuple of labels.
Labels can be any hashable tokens; their order is given by an explicit
sequence (default: sorted order).  The module element attached to a tableau
T is its polytabloid e_T, and ``straighten`` writes e_T in the basis of
standard polytabloids.
"""
from functools import cache
from itertools import permutations, product
from math import factorial, prod

from .combinatorics import partition, partitions


def hook_count(lam) -> int:
    """f^lam, the number of standard tableaux of shape lam."""
    lam = partition(lam)
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


@cache
def _standard_ranks(lam) -> tuple:
    """Standard fillings of lam with 0..n-1, sorted by row reading word."""
    n = sum(lam)
    out = []

    def rec(v, rows):
        if v == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                rec(v + 1, rows)
                rows[i].pop()

    rec(0, [[] for _ in lam])
    return tuple(sorted(out, key=lambda t: sum(t, ())))


def _order(labels, tableau=None):
    if labels is None:
        labels = sorted(x for row in tableau for x in row)
    labels = list(labels)
    rank = {x: i for i, x in enumerate(labels)}
    if len(rank) != len(labels):
        raise ValueError("repeated labels")
    return labels, rank


def standard_tableaux(lam, labels=None) -> list:
    lam = partition(lam)
    if labels is None:
        labels = range(1, sum(lam) + 1)
    labels = list(labels)
    if len(labels) != sum(lam):
        raise ValueError(f"{len(labels)} labels for a shape of size {sum(lam)}")
    return [tuple(tuple(labels[v] for v in row) for row in t) for t in _standard_ranks(lam)]


def is_standard(tableau, labels=None) -> bool:
    _, rank = _order(labels, tableau)
    r = [[rank[x] for x in row] for row in tableau]
    for row in r:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(1, len(r)):
        if any(r[i - 1][j] >= r[i][j] for j in range(len(r[i]))):
            return False
    return True


def shape_of(tableau) -> tuple:
    return tuple(len(row) for row in tableau)


@cache
def _column_moves(rows):
    """For each column: list of (sign, [(label, row), ...])."""
    ncols = len(rows[0]) if rows else 0
    moves = []
    for c in range(ncols):
        col = [row[c] for row in rows if len(row) > c]
        opts = []
        for perm in permutations(range(len(col))):
            opts.append((_perm_sign(perm), [(col[perm[i]], i) for i in range(len(col))]))
        moves.append(opts)
    return moves


def _perm_sign(perm) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        x, n = start, 0
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        if n % 2 == 0:
            sign = -sign
    return sign


@cache
def polytabloid(rows) -> dict:
    """e_T as {tabloid: coefficient}; a tabloid is the tuple giving the row
    of each label 0..n-1.  ``rows`` is a filling with ranks."""
    n = sum(len(r) for r in rows)
    out = {}
    for choice in product(*_column_moves(rows)):
        sign, rowof = 1, [0] * n
        for sg, assign in choice:
            sign *= sg
            for label, r in assign:
                rowof[label] = r
        key = tuple(rowof)
        out[key] = out.get(key, 0) + sign
    return {t: c for t, c in out.items() if c}


def _tabloid_rows(tabloid, lam):
    rows = [[] for _ in lam]
    for label, r in enumerate(tabloid):
        rows[r].append(label)
    return tuple(tuple(r) for r in rows)


def straighten_ranks(rows) -> dict:
    """Expansion of e_rows over standard fillings (both in rank space)."""
    rows = tuple(tuple(r) for r in rows)
    lam = shape_of(rows)
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"row lengths {lam} are not a partition")
    flat = sorted(x for r in rows for x in r)
    if flat != list(range(len(flat))):
        raise ValueError("repeated labels")
    vec = dict(polytabloid(rows))
    out = {}
    while vec:
        # the most dominant tabloid left is {S} for a standard S
        t = min(vec)
        c = vec[t]
        std = _tabloid_rows(t, lam)
        assert _is_standard_ranks(std), f"straightening stalled at {std}"
        out[std] = c
        for tab, v in polytabloid(std).items():
            nv = vec.get(tab, 0) - c * v
            if nv:
                vec[tab] = nv
            else:
                vec.pop(tab, None)
    return out


def _is_standard_ranks(rows):
    for i in range(1, len(rows)):
        if any(rows[i - 1][j] >= rows[i][j] for j in range(len(rows[i]))):
            return False
    return True


def straighten(tableau, labels=None) -> dict:
    """{standard tableau: integer coefficient} with e_tableau = sum c e_S."""
    labels, rank = _order(labels, tableau)
    rows = tuple(tuple(rank[x] for x in row) for row in tableau)
    res = straighten_ranks(rows)
    return {tuple(tuple(labels[v] for v in row) for row in std): c for std, c in res.items()}


@cache
def perm_matrix(lam, w) -> tuple:
    """Matrix of w (i -> w[i-1]) acting on labels of the standard basis of
    shape lam.  Column j holds the expansion of w applied to the j-th
    standard tableau, so perm_matrix(v o w) = perm_matrix(v) perm_matrix(w)."""
    lam = partition(lam)
    basis = _standard_ranks(lam)
    index = {t: i for i, t in enumerate(basis)}
    n = len(basis)
    mat = [[0] * n for _ in range(n)]
    for j, t in enumerate(basis):
        moved = tuple(tuple(w[v] - 1 for v in row) for row in t)
        for std, c in straighten_ranks(moved).items():
            mat[index[std]][j] = c
    return tuple(tuple(r) for r in mat)


def generator_matrix(lam, i: int) -> tuple:
    n = sum(lam)
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = i + 1, i
    return perm_matrix(partition(lam), tuple(w))


def reduced_word(w) -> list:
    """Indices i1..ir with w = s_i1 o s_i2 o ... o s_ir (as maps)."""
    w = list(w)
    word = []
    # bubble sort from the left: w = s_i o w' where w' = s_i o w
    changed = True
    while changed:
        changed = False
        for v in range(1, len(w)):
            pos_v, pos_next = w.index(v), w.index(v + 1)
            if pos_v > pos_next:
                # swap values v and v+1: w <- s_v o w
                w[pos_v], w[pos_next] = v + 1, v
                word.append(v)
                changed = True
    return word


# -- characters --------------------------------------------------------------

@cache
def character_sn(lam, mu) -> int:
    """chi^lam at cycle type mu, by the Murnaghan-Nakayama rule."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different weights")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for sign, smaller in _rim_hooks(lam, r):
        total += sign * character_sn(smaller, rest)
    return total


def _rim_hooks(lam, r):
    """(sign, lam minus a rim hook of size r) for every such hook."""
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    bset = set(beta)
    out = []
    for x in beta:
        y = x - r
        if y < 0 or y in bset:
            continue
        between = sum(1 for z in beta if y < z < x)
        new = sorted((bset - {x}) | {y}, reverse=True)
        parts = [new[i] - (n - 1 - i) for i in range(n)]
        out.append(((-1) ** between, tuple(p for p in parts if p > 0)))
    return out


@cache
def character_table_sn(n: int) -> tuple:
    parts = partitions(n)
    return tuple(tuple(character_sn(lam, mu) for mu in parts) for lam in parts)
