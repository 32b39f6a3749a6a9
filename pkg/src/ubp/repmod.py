"""Irreducible modules on uniform tableaux.

A uniform tableau of shape (lam1, ..., lamk) is a tuple of tableaux; the
i-th is a standard tableau of shape lam_i whose entries are blocks of size i
(sorted tuples), ordered by their largest element, and together all entries
form a set partition of [k].
"""
from dataclasses import dataclass
from functools import cache
from itertools import product
from math import prod

from .combinatorics import (
    enumerate_Ik, enumerate_setpartitions, is_finer, set_partition, sp_count,
    type_up, vector_partition,
)
from .conjugacy import class_rep, cycletype, merge_set
from .diagram import Diagram, ResourceError
from .green import size_classes
from .specht import character_sn, hook_count, standard_tableaux, straighten

MODULE_MAX_K = 5


@dataclass(frozen=True, order=True)
class UniformTableau:
    shape: tuple
    tableaux: tuple

    @property
    def k(self) -> int:
        return len(self.shape)

    def entries(self) -> tuple:
        return set_partition(blk for t in self.tableaux for row in t for blk in row)


def _label_order(blocks):
    return sorted(blocks, key=max)


def basis(lam) -> list:
    lam = vector_partition(lam, len(lam))
    k = len(lam)
    out = []
    for gamma in enumerate_setpartitions(k, type_up(lam)):
        classes = size_classes(gamma)
        options = []
        for size, shape in enumerate(lam, start=1):
            labels = classes.get(size, [])
            options.append(standard_tableaux(shape, _label_order(labels)) if shape else [()])
        for choice in product(*options):
            out.append(UniformTableau(lam, tuple(choice)))
    return out


def dim(lam) -> int:
    lam = vector_partition(lam, len(lam))
    return sp_count(len(lam), type_up(lam)) * prod(hook_count(c) for c in lam if c)


class ModuleVector(dict):
    """Formal integer combination of uniform tableaux of one shape."""

    def __init__(self, shape, terms=()):
        super().__init__()
        self.shape = shape
        for t, c in dict(terms).items():
            if c:
                self[t] = c

    def __add__(self, other):
        out = ModuleVector(self.shape, self)
        for t, c in other.items():
            v = out.get(t, 0) + c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def scaled(self, c):
        return ModuleVector(self.shape, {t: c * v for t, v in self.items()})

    def __eq__(self, other):
        return dict.__eq__(self, other)

    __hash__ = None


def relabel(d: Diagram, S: UniformTableau):
    """Replace each entry B of S by the union of the top blocks of d joined
    to bottom blocks inside B.  None if bot(d) is not finer than the
    entries of S."""
    gamma = S.entries()
    if not is_finer(d.bot(), gamma):
        return None
    where = {x: blk for blk in gamma for x in blk}
    new = {blk: [] for blk in gamma}
    for top, bot in d.blocks:
        new[where[bot[0]]] += top
    new = {blk: tuple(sorted(v)) for blk, v in new.items()}
    comps = tuple(tuple(tuple(new[blk] for blk in row) for row in t) for t in S.tableaux)
    return comps


def act(d: Diagram, S: UniformTableau) -> ModuleVector:
    if d.k != S.k:
        raise ValueError(f"diagram on {d.k} points acting on a tableau for k={S.k}")
    comps = relabel(d, S)
    if comps is None:
        return ModuleVector(S.shape)
    expansions = []
    for t in comps:
        if not t:
            expansions.append({(): 1})
            continue
        labels = _label_order(blk for row in t for blk in row)
        expansions.append(straighten(t, labels))
    terms = {}
    for choice in product(*(e.items() for e in expansions)):
        coeff = prod(c for _, c in choice)
        key = UniformTableau(S.shape, tuple(t for t, _ in choice))
        terms[key] = terms.get(key, 0) + coeff
    return ModuleVector(S.shape, terms)


def act_vector(d: Diagram, v: ModuleVector) -> ModuleVector:
    out = ModuleVector(v.shape)
    for S, c in v.items():
        out = out + act(d, S).scaled(c)
    return out


@cache
def _basis_index(lam):
    return {S: i for i, S in enumerate(basis(lam))}


def matrix(d: Diagram, lam) -> tuple:
    """Column j is the expansion of d acting on the j-th basis element, so
    matrix(d * e) = matrix(d) @ matrix(e)."""
    lam = vector_partition(lam, len(lam))
    index = _basis_index(lam)
    n = len(index)
    mat = [[0] * n for _ in range(n)]
    for S, j in index.items():
        for T, c in act(d, S).items():
            mat[index[T]][j] = c
    return tuple(tuple(r) for r in mat)


def trace_of(d: Diagram, lam) -> int:
    lam = vector_partition(lam, len(lam))
    return sum(act(d, S).get(S, 0) for S in basis(lam))


def _check_bound(k, max_k):
    if k > max_k:
        raise ResourceError(f"module computations for k={k} exceed the bound {max_k}")


def char_trace(lam, mu, max_k: int = MODULE_MAX_K) -> int:
    _check_bound(len(lam), max_k)
    return trace_of(class_rep(mu), lam)


def subgroup_character(lam, nu) -> int:
    """Irreducible character lam of the maximal subgroup at cycle type nu
    (zero when the types differ)."""
    if type_up(lam) != type_up(nu):
        return 0
    return prod(character_sn(a, b) for a, b in zip(lam, nu) if a or b)


def char_merge(lam, mu, max_k: int = MODULE_MAX_K) -> int:
    """Character value as a sum over the coarsenings of d_mu of type(lam)."""
    _check_bound(len(lam), max_k)
    lam = vector_partition(lam, len(lam))
    total = 0
    for c in merge_set(class_rep(mu), type_up(lam)):
        total += subgroup_character(lam, cycletype(c))
    return total


@cache
def character_table_trace(k: int, max_k: int = MODULE_MAX_K) -> tuple:
    _check_bound(k, max_k)
    order = enumerate_Ik(k)
    reps = [class_rep(mu) for mu in order]
    return tuple(tuple(trace_of(d, lam) for d in reps) for lam in order)


@cache
def character_table_merge(k: int, max_k: int = MODULE_MAX_K) -> tuple:
    _check_bound(k, max_k)
    order = enumerate_Ik(k)
    return tuple(tuple(char_merge(lam, mu, max_k) for mu in order) for lam in order)
