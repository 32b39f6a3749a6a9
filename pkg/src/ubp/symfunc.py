"""Symmetric functions in several alphabets X1, X2, ... with exact rational
coefficients.

An element is stored in the power-sum basis: key (mu1, mu2, ...) stands for
p_mu1[X1] p_mu2[X2] ..., with trailing empty partitions dropped, so that
elements of different degrees can be multiplied freely.
"""
from fractions import Fraction
from functools import cache
from itertools import product

from .combinatorics import (
    enumerate_Ik, partition, partitions, trim, type_up, vp_size, vp_z, z,
)
from .conjugacy import b_matrix
from .diagram import ResourceError
from .specht import character_sn

SYMFUNC_MAX_K = 7


def _merge_keys(a, b):
    n = max(len(a), len(b))
    a, b = a + ((),) * (n - len(a)), b + ((),) * (n - len(b))
    return tuple(partition(x + y) for x, y in zip(a, b))


class MultiSym:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            key = trim(tuple(partition(p) for p in key))
            c = Fraction(c)
            if c:
                v = self.terms.get(key, 0) + c
                if v:
                    self.terms[key] = v
                else:
                    self.terms.pop(key)

    @classmethod
    def one(cls):
        return cls({(): 1})

    def items(self):
        return self.terms.items()

    def coefficient(self, key) -> Fraction:
        return self.terms.get(trim(key), Fraction(0))

    def degrees(self) -> set:
        return {vp_size(key) for key in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return MultiSym(out)

    def __neg__(self):
        return MultiSym({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiSym):
            return MultiSym({key: c * other for key, c in self.terms.items()})
        out = {}
        for (ka, ca), (kb, cb) in product(self.terms.items(), other.terms.items()):
            key = _merge_keys(ka, kb)
            out[key] = out.get(key, 0) + ca * cb
        return MultiSym(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return MultiSym({key: v / c for key, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, MultiSym) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*p{list(map(list, key))}" for key, c in sorted(self.terms.items()))


def p(mu) -> MultiSym:
    """The power sum p_mu[X] for a vector partition mu."""
    return MultiSym({tuple(mu): 1})


def p_single(r: int, alphabet: int) -> MultiSym:
    key = [()] * alphabet
    key[alphabet - 1] = (r,)
    return p(key)


def scalar(f: MultiSym, g: MultiSym) -> Fraction:
    """<p_mu, p_nu> = z_mu [mu = nu]."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    return sum((c * g.terms[key] * vp_z(key) for key, c in f.terms.items() if key in g.terms),
               Fraction(0))


@cache
def schur_single(lam, alphabet: int = 1) -> MultiSym:
    """s_lam[X_alphabet] in power sums."""
    lam = partition(lam)
    terms = {}
    for mu in partitions(sum(lam)):
        key = [()] * alphabet
        key[alphabet - 1] = mu
        terms[tuple(key)] = Fraction(character_sn(lam, mu), z(mu))
    return MultiSym(terms)


@cache
def s(lam) -> MultiSym:
    """s_lam[X] = prod_i s_{lam_i}[X_i]."""
    out = MultiSym.one()
    for i, comp in enumerate(lam, start=1):
        if comp:
            out = out * schur_single(comp, i)
    return out


def to_schur(f: MultiSym) -> dict:
    """Coefficients of f in the Schur basis, keyed by trimmed vector
    partitions."""
    out = {}
    types = {}
    for key in f.terms:
        types.setdefault(vp_size(key), set()).add(type_up(key))
    for k, tps in types.items():
        for lam in enumerate_Ik(k):
            if type_up(lam) in tps:
                c = scalar(f, s(lam))
                if c:
                    out[trim(lam)] = c
    return out


def from_schur(coeffs: dict) -> MultiSym:
    out = MultiSym()
    for lam, c in coeffs.items():
        out = out + s(lam) * Fraction(c)
    return out


def pleth_p(n: int, f: MultiSym) -> MultiSym:
    """p_n[f]: multiply every power-sum index by n, alphabets unchanged."""
    if n < 1:
        raise ValueError("plethysm index must be positive")
    return MultiSym({tuple(tuple(n * x for x in comp) for comp in key): c
                     for key, c in f.terms.items()})


def pleth_s(lam, f: MultiSym) -> MultiSym:
    """s_lam[f] = sum_mu chi^lam(mu)/z_mu prod_i p_{mu_i}[f]."""
    lam = partition(lam)
    cache_ = {}
    out = MultiSym()
    for mu in partitions(sum(lam)):
        chi = character_sn(lam, mu)
        if not chi:
            continue
        term = MultiSym.one()
        for part in mu:
            if part not in cache_:
                cache_[part] = pleth_p(part, f)
            term = term * cache_[part]
        out = out + term * Fraction(chi, z(mu))
    return out


@cache
def E(r: int) -> MultiSym:
    """Image of the trivial character: sum over I_r of p_mu / z_mu."""
    if r < 1:
        raise ValueError("r must be positive")
    return MultiSym({mu: Fraction(1, vp_z(mu)) for mu in enumerate_Ik(r)})


def E_from_schur(r: int) -> MultiSym:
    """The same element as a sum over partitions (1^a1 ... r^ar) of r of
    s_a1[X1] s_a2[X2] ... s_ar[Xr]."""
    out = MultiSym()
    for lam in partitions(r):
        term = MultiSym.one()
        for i in range(1, r + 1):
            a = lam.count(i)
            if a:
                term = term * schur_single((a,), i)
        out = out + term
    return out


@cache
def frob_char(lam) -> MultiSym:
    """prod_i s_{lam_i}[E_i]: the image of the irreducible character lam."""
    out = MultiSym.one()
    for i, comp in enumerate(lam, start=1):
        if comp:
            out = out * pleth_s(comp, E(i))
    return out


def frobenius_of_classfunction(values: dict) -> MultiSym:
    """sum_mu values[mu] p_mu / z_mu."""
    return MultiSym({mu: Fraction(v) / vp_z(mu) for mu, v in values.items()})


def class_values(f: MultiSym, k: int) -> dict:
    """Inverse of the Frobenius map on degree k."""
    return {mu: f.coefficient(mu) * vp_z(mu) for mu in enumerate_Ik(k)}


def _check_bound(k, max_k):
    if k > max_k:
        raise ResourceError(f"symmetric function matrices for k={k} exceed the bound {max_k}")


def _integral(val, what):
    if val.denominator != 1:
        raise AssertionError(f"{what} is not an integer: {val}")
    return int(val)


@cache
def X_matrix(k: int, max_k: int = SYMFUNC_MAX_K) -> tuple:
    """Character table: X[lam][mu] = <frob_char(lam), p_mu>."""
    _check_bound(k, max_k)
    order = enumerate_Ik(k)
    rows = []
    for lam in order:
        f = frob_char(lam)
        rows.append(tuple(_integral(f.coefficient(mu) * vp_z(mu), f"X[{lam}][{mu}]")
                          for mu in order))
    return tuple(rows)


@cache
def A_matrix(k: int, max_k: int = SYMFUNC_MAX_K) -> tuple:
    """A[lam][nu] = <s_lam, p_nu>: block diagonal subgroup character tables."""
    _check_bound(k, max_k)
    order = enumerate_Ik(k)
    rows = []
    for lam in order:
        f = s(lam)
        rows.append(tuple(_integral(f.coefficient(nu) * vp_z(nu), "A entry") for nu in order))
    return tuple(rows)


@cache
def U_matrix(k: int, max_k: int = SYMFUNC_MAX_K) -> tuple:
    """U[lam][nu] = <frob_char(lam), s_nu>: restriction multiplicities."""
    _check_bound(k, max_k)
    order = enumerate_Ik(k)
    rows = []
    for lam in order:
        f = frob_char(lam)
        row = []
        for nu in order:
            val = _integral(scalar(f, s(nu)), f"U[{lam}][{nu}]")
            if val < 0:
                raise AssertionError(f"negative multiplicity U[{lam}][{nu}] = {val}")
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def B_matrix(k: int) -> tuple:
    return b_matrix(k)


def b_from_scalar(mu, nu) -> Fraction:
    """(1/z_nu) <p_nu[E], p_mu[X]> where p_nu[E] = prod p_{nu_i^(j)}[E_j]."""
    f = MultiSym.one()
    for j, comp in enumerate(nu, start=1):
        for part in comp:
            f = f * pleth_p(part, E(j))
    return scalar(f, p(mu)) / vp_z(nu)


def restrict_to_first(f: MultiSym) -> MultiSym:
    """Set X2 = X3 = ... = 0."""
    return MultiSym({key: c for key, c in f.terms.items() if len(key) <= 1})


def plethysm_schur_expansion(lam) -> dict:
    """Schur expansion of s_lam1[s1] s_lam2[s2] ... s_lamk[sk], as
    {partition: multiplicity}."""
    f = restrict_to_first(frob_char(tuple(lam)))
    out = {}
    for key, c in to_schur(f).items():
        out[key[0] if key else ()] = _integral(c, "plethysm coefficient")
    return dict(sorted(out.items(), key=lambda kv: tuple(-x for x in kv[0])))


def plethysm_direct(lam) -> MultiSym:
    """Same product computed directly from s_r[X1] inner functions."""
    out = MultiSym.one()
    for i, comp in enumerate(lam, start=1):
        if comp:
            out = out * pleth_s(comp, schur_single((i,), 1))
    return out


def matmul(a, b) -> tuple:
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a)
