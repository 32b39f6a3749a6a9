"""Invariant suites shared by the ``verify`` command and the test-suite.

Every check takes a level ("fast" or "full") and returns a list of failure
messages; an empty list means the check passed.
"""
import random
import time
from collections import Counter
from fractions import Fraction
from math import factorial

from . import conjugacy, diagram, green, repmod, specht, symfunc
from .combinatorics import (
    bell, enumerate_Ik, enumerate_setpartitions, is_finer, join, partition,
    partitions, sp_count, sp_type, type_up, vector_partition, vp_z, z,
)
from .diagram import Diagram, identity, idempotent_of, enumerate_monoid, monoid_size

MONOID_SIZES = (1, 1, 3, 16, 131, 1496, 22482)


def _pick(level, fast, full):
    return full if level == "full" else fast


def matmul(a, b):
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a)


def random_diagram(k: int, rng: random.Random) -> Diagram:
    """Uniform choice of top partition labels and a random permutation; every
    element arises as e_top * sigma."""
    labels = [rng.randrange(k) for _ in range(k)]
    top = {}
    for x, lab in enumerate(labels, start=1):
        top.setdefault(lab, []).append(x)
    images = list(range(1, k + 1))
    rng.shuffle(images)
    return idempotent_of(list(top.values()), k) * diagram.permutation(images)


# -- monoid ---------------------------------------------------------------

def check_monoid_counts(level):
    bad = []
    top = _pick(level, 4, 5)
    for k in range(top + 1):
        elems = enumerate_monoid(k)
        if len(elems) != MONOID_SIZES[k] or len(set(elems)) != len(elems):
            bad.append(f"|U_{k}| enumerated as {len(elems)} ({len(set(elems))} distinct)")
    for k in range(7):
        if monoid_size(k) != MONOID_SIZES[k]:
            bad.append(f"closed formula gives {monoid_size(k)} for k={k}")
    return bad


def check_relations(level):
    return [f"k={k}: {f}" for k in range(2, 7) for f in diagram.relation_failures(k)]


def check_associativity(level):
    bad = []
    for k in range(4):
        elems = enumerate_monoid(k)
        for a in elems:
            for b in elems:
                ab = a * b
                for c in elems:
                    if ab * c != a * (b * c):
                        bad.append(f"({a})({b})({c}) not associative")
    rng = random.Random(1)
    for _ in range(_pick(level, 500, 10_000)):
        k = rng.randint(1, 5)
        a, b, c = (random_diagram(k, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append(f"({a})({b})({c}) not associative")
    return bad


def check_inverse_monoid(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        elems = enumerate_monoid(k)
        idem = {d for d in elems if d * d == d}
        expected = {idempotent_of(pi, k) for pi in enumerate_setpartitions(k)}
        if idem != expected:
            bad.append(f"k={k}: idempotents are not exactly the e_pi")
        for d in elems:
            t = d.involution()
            if d * t * d != d or t * d * t != t:
                bad.append(f"{d}: generalized inverse identities fail")
            if t * d != idempotent_of(d.bot(), k) or d * t != idempotent_of(d.top(), k):
                bad.append(f"{d}: d~d or dd~ is not the expected idempotent")
        for pi in enumerate_setpartitions(k):
            for gamma in enumerate_setpartitions(k):
                if idempotent_of(pi, k) * idempotent_of(gamma, k) != idempotent_of(join(pi, gamma), k):
                    bad.append(f"e_pi e_gamma != e_join for {pi}, {gamma}")
    for k in range(_pick(level, 3, 4) + 1):
        elems = enumerate_monoid(k)
        for d in elems:
            inv = [x for x in elems if d * x * d == d and x * d * x == x]
            if inv != [d.involution()]:
                bad.append(f"{d}: {len(inv)} generalized inverses")
        for tau in elems:
            if not tau.is_permutation():
                continue
            ti = tau.involution()
            inv = diagram.as_permutation(ti)
            for pi in enumerate_setpartitions(k):
                moved = [[inv[x - 1] for x in blk] for blk in pi]
                if tau * idempotent_of(pi, k) * ti != idempotent_of(moved, k):
                    bad.append(f"conjugating e_{pi} by {tau} failed")
    for k in range(1, 6):
        rng = random.Random(k)
        for _ in range(50):
            a, b = random_diagram(k, rng), random_diagram(k, rng)
            ab = a * b
            if (ab).involution() != b.involution() * a.involution():
                bad.append(f"involution is not an anti-homomorphism on {a}, {b}")
            if not is_finer(a.top(), ab.top()) or not is_finer(b.bot(), ab.bot()):
                bad.append(f"top/bot of {a} * {b} not coarser")
            if ab.n_blocks() > min(a.n_blocks(), b.n_blocks()):
                bad.append(f"{a} * {b} has too many blocks")
    return bad


def check_factorization(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        for d in enumerate_monoid(k):
            sigma = diagram.factorize(d)
            if idempotent_of(d.top(), k) * sigma != d or sigma * idempotent_of(d.bot(), k) != d:
                bad.append(f"{d} does not factor through {sigma}")
    return bad


# -- Green's classes ---------------------------------------------------------

def check_green(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        elems = set(enumerate_monoid(k))
        pis = enumerate_setpartitions(k)
        lcls = [green.lclass(pi) for pi in pis]
        if sum(map(len, lcls)) != len(elems) or set().union(*map(set, lcls)) != elems:
            bad.append(f"k={k}: L-classes do not partition the monoid")
        if len(lcls) != bell(k):
            bad.append(f"k={k}: {len(lcls)} L-classes")
        for pi, lc in zip(pis, lcls):
            idem = [d for d in lc if d * d == d]
            if idem != [idempotent_of(pi, k)]:
                bad.append(f"L_{pi} has idempotents {idem}")
        jcls = [green.jclass(lam, k) for lam in partitions(k)]
        if sum(map(len, jcls)) != len(elems) or len(jcls) != len(partitions(k)):
            bad.append(f"k={k}: J-classes do not partition the monoid")
        for pi in pis:
            order = 1
            for a in Counter(len(b) for b in pi).values():
                order *= factorial(a)
            g = green.maximal_subgroup(pi)
            ds = set(g.diagrams())
            if len(ds) != order or idempotent_of(pi, k) not in ds:
                bad.append(f"G at {pi} has order {len(ds)}, expected {order}")
            if any(x * y not in ds for x in ds for y in ds) or any(x.involution() not in ds for x in ds):
                bad.append(f"G at {pi} is not closed")
    for k in range(_pick(level, 3, 4) + 1):
        for pi in enumerate_setpartitions(k):
            G = green.maximal_subgroup(pi).diagrams()
            lc = set(green.lclass(pi))
            covered = set()
            for gamma in enumerate_setpartitions(k, sp_type(pi)):
                ell = green.orbit_rep(pi, gamma).diagram
                if ell.top() != gamma or ell.bot() != pi:
                    bad.append(f"orbit rep {ell} has wrong top/bottom")
                orbit = [ell * g for g in G]
                if len(set(orbit)) != len(G):
                    bad.append(f"right action on {ell} is not free")
                if any(x.top() != gamma for x in orbit):
                    bad.append(f"orbit of {ell} leaves L_pi^gamma")
                covered |= set(orbit)
            if covered != lc:
                bad.append(f"orbits do not cover L_{pi}")
            if green.orbit_rep(pi, pi).diagram != idempotent_of(pi, k):
                bad.append(f"l_pi^pi != e_pi for {pi}")
            for m in enumerate_monoid(k):
                for gamma in enumerate_setpartitions(k, sp_type(pi)):
                    rep = green.orbit_rep(pi, gamma)
                    res = green.act_on_rep(m, rep)
                    prod_ = m * rep.diagram
                    dropped = prod_.n_blocks() < rep.diagram.n_blocks()
                    if (res is None) != dropped:
                        bad.append(f"zero rule fails for {m} on {rep.diagram}")
                    if res is not None:
                        gamma2, g = res
                        if green.orbit_rep(pi, gamma2).diagram * g.diagram != prod_:
                            bad.append(f"{m} * {rep.diagram} not matched")
    return bad


# -- conjugacy ---------------------------------------------------------------

def check_conjugacy_classes(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        order = enumerate_Ik(k)
        counts = Counter(conjugacy.cycletype(d) for d in enumerate_monoid(k))
        if set(counts) != set(order):
            bad.append(f"k={k}: cycle types {len(counts)} vs |I_k| = {len(order)}")
        if sum(counts.values()) != monoid_size(k):
            bad.append(f"k={k}: classes do not cover the monoid")
    for k in range(_pick(level, 5, 6) + 1):
        for mu in enumerate_Ik(k):
            if conjugacy.cycletype(conjugacy.class_rep(mu)) != mu:
                bad.append(f"cycletype(d_{mu}) != {mu}")
    for k in range(_pick(level, 3, 4) + 1):
        elems = enumerate_monoid(k)
        reps = {mu: conjugacy.class_rep(mu) for mu in enumerate_Ik(k)}
        for d in elems:
            ct = conjugacy.cycletype(d)
            for mu, rep in reps.items():
                if conjugacy.are_conjugate(d, rep, elems) != (mu == ct):
                    bad.append(f"{d} conjugacy to d_{mu} disagrees with cycle type {ct}")
    return bad


def check_b_coefficients(level):
    bad = []
    for k in range(_pick(level, 4, 6) + 1):
        if conjugacy.b_matrix(k) != conjugacy.b_matrix_bruteforce(k):
            bad.append(f"k={k}: formula and merge count disagree")
    return bad


def check_cycle_merges(level):
    bad = []
    for r in range(1, _pick(level, 6, 8) + 1):
        d = conjugacy.class_rep(vector_partition([(r,)], r))
        got = sorted(conjugacy.cycletype(c) for c in conjugacy.coarsenings(d))
        want = sorted(vector_partition([()] * (r // s - 1) + [(s,)], r)
                      for s in range(1, r + 1) if r % s == 0)
        if got != want:
            bad.append(f"canonical {r}-cycle merges to {got}")
    for r in range(1, 5):
        for t in range(1, _pick(level, 2, 3) + 1):
            d = conjugacy.class_rep(vector_partition([(r,) * t], r * t))
            nu = vector_partition([()] * (t - 1) + [(r,)], r * t)
            n = len(conjugacy.merge_set(d, nu))
            if n != r ** (t - 1):
                bad.append(f"{t} canonical {r}-cycles merge into one in {n} ways")
    return bad


# -- Specht modules ----------------------------------------------------------

def check_specht(level):
    bad = []
    for n in range(_pick(level, 6, 8) + 1):
        if sum(specht.hook_count(lam) ** 2 for lam in partitions(n)) != factorial(n):
            bad.append(f"sum of f^2 != {n}!")
        for lam in partitions(n):
            if n <= 6 and len(specht.standard_tableaux(lam)) != specht.hook_count(lam):
                bad.append(f"standard tableaux count for {lam}")
    for n in range(_pick(level, 5, 7) + 1):
        ps = partitions(n)
        for a in ps:
            for b in ps:
                val = sum(Fraction(specht.character_sn(a, mu) * specht.character_sn(b, mu), z(mu))
                          for mu in ps)
                if val != (a == b):
                    bad.append(f"orthogonality fails for {a}, {b}")
    for n in range(1, _pick(level, 4, 6) + 1):
        for lam in partitions(n):
            gens = [specht.generator_matrix(lam, i) for i in range(1, n)]
            one = specht.perm_matrix(lam, tuple(range(1, n + 1)))
            for i, g in enumerate(gens):
                if matmul(g, g) != one:
                    bad.append(f"{lam}: s{i+1}^2 != 1")
                if i + 1 < len(gens):
                    h = gens[i + 1]
                    if matmul(matmul(g, h), g) != matmul(matmul(h, g), h):
                        bad.append(f"{lam}: braid relation fails at {i+1}")
                for j in range(i + 2, len(gens)):
                    if matmul(g, gens[j]) != matmul(gens[j], g):
                        bad.append(f"{lam}: s{i+1}, s{j+1} do not commute")
    for n in range(1, 6):
        for lam in partitions(n):
            for mu in partitions(n):
                w = _cycle_perm(mu)
                tr = sum(specht.perm_matrix(lam, w)[i][i] for i in range(specht.hook_count(lam)))
                if tr != specht.character_sn(lam, mu):
                    bad.append(f"trace of {mu} on {lam} is {tr}")
    return bad


def _cycle_perm(mu):
    images, start = [], 1
    for r in mu:
        images += [start + (j + 1) % r for j in range(r)]
        start += r
    return tuple(images)


# -- modules -----------------------------------------------------------------

def check_modules(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        total = 0
        for lam in enumerate_Ik(k):
            n = len(repmod.basis(lam))
            if n != repmod.dim(lam):
                bad.append(f"|basis{lam}| = {n} != dim")
            total += n * n
        if total != monoid_size(k):
            bad.append(f"k={k}: sum of dim^2 = {total}")
    rng = random.Random(7)
    for k in range(1, _pick(level, 3, 4) + 1):
        for lam in enumerate_Ik(k):
            for _ in range(_pick(level, 3, 10)):
                a, b = random_diagram(k, rng), random_diagram(k, rng)
                if repmod.matrix(a * b, lam) != matmul(repmod.matrix(a, lam), repmod.matrix(b, lam)):
                    bad.append(f"matrix({a} * {b}) on {lam} is not the product")
    for k in range(2, _pick(level, 3, 5) + 1):
        for lam in enumerate_Ik(k):
            S = {i: repmod.matrix(diagram.s(i, k), lam) for i in range(1, k)}
            B = {i: repmod.matrix(diagram.b(i, k), lam) for i in range(1, k)}
            one = repmod.matrix(identity(k), lam)
            n = len(one)
            if one != tuple(tuple(int(i == j) for j in range(n)) for i in range(n)):
                bad.append(f"identity does not act trivially on {lam}")
            for i in range(1, k):
                Bi = B[i]
                if any(Bi[r][c] for r in range(n) for c in range(n) if r != c) or \
                        any(Bi[r][r] not in (0, 1) for r in range(n)):
                    bad.append(f"b{i} on {lam} is not a diagonal projection")
                rels = [(matmul(S[i], S[i]), one), (matmul(Bi, Bi), Bi),
                        (matmul(Bi, S[i]), Bi), (matmul(S[i], Bi), Bi)]
                if i + 1 < k:
                    rels.append((matmul(matmul(S[i], S[i + 1]), S[i]),
                                 matmul(matmul(S[i + 1], S[i]), S[i + 1])))
                    rels.append((matmul(matmul(S[i], B[i + 1]), S[i]),
                                 matmul(matmul(S[i + 1], B[i]), S[i + 1])))
                for j in range(1, k):
                    if abs(i - j) > 1:
                        rels.append((matmul(S[i], S[j]), matmul(S[j], S[i])))
                        rels.append((matmul(Bi, S[j]), matmul(S[j], Bi)))
                    rels.append((matmul(Bi, B[j]), matmul(B[j], Bi)))
                if any(x != y for x, y in rels):
                    bad.append(f"relations fail on {lam} at index {i}")
    for k in range(1, _pick(level, 3, 4) + 1):
        elems = enumerate_monoid(k)
        for lam in enumerate_Ik(k):
            for S in repmod.basis(lam):
                for d in elems:
                    zero = not repmod.act(d, S)
                    if zero != (not is_finer(d.bot(), S.entries())):
                        bad.append(f"zero rule fails for {d} on {S}")
    return bad


def check_character_tables(level):
    bad = []
    for k in range(_pick(level, 4, 5) + 1):
        tr = repmod.character_table_trace(k)
        mg = repmod.character_table_merge(k)
        sf = symfunc.X_matrix(k)
        if not tr == mg == sf:
            bad.append(f"k={k}: trace, merge-sum and symmetric-function tables differ")
        dims = tuple(repmod.dim(lam) for lam in enumerate_Ik(k))
        if tuple(row[-1] for row in tr) != dims:
            bad.append(f"k={k}: identity column is not the dimensions")
    return bad


# -- symmetric functions -----------------------------------------------------

def _upper_unitriangular_nonneg(m):
    n = len(m)
    return all(m[i][i] == 1 for i in range(n)) and all(
        m[i][j] == 0 for i in range(n) for j in range(i)) and all(x >= 0 for row in m for x in row)


def check_symfunc(level):
    bad = []
    for r in range(1, _pick(level, 6, 8) + 1):
        if symfunc.E(r) != symfunc.E_from_schur(r):
            bad.append(f"two expansions of E_{r} differ")
    for k in range(_pick(level, 4, 5) + 1):
        X, A, U = symfunc.X_matrix(k), symfunc.A_matrix(k), symfunc.U_matrix(k)
        B = conjugacy.b_matrix(k)
        if matmul(A, B) != X:
            bad.append(f"k={k}: X != A B")
        if matmul(U, A) != X:
            bad.append(f"k={k}: X != U A")
        if not _upper_unitriangular_nonneg(B) or not _upper_unitriangular_nonneg(U):
            bad.append(f"k={k}: B or U not upper unitriangular and nonnegative")
        order = enumerate_Ik(k)
        for i, lam in enumerate(order):
            for j, nu in enumerate(order):
                expect = repmod.subgroup_character(lam, nu)
                if A[i][j] != expect:
                    bad.append(f"A[{lam}][{nu}] = {A[i][j]}, expected {expect}")
            if symfunc.frobenius_of_classfunction(dict(zip(order, X[i]))) != symfunc.frob_char(lam):
                bad.append(f"Frobenius image of row {lam} differs")
        for mu in order:
            for nu in order:
                if symfunc.b_from_scalar(mu, nu) != conjugacy.b_coeff(mu, nu):
                    bad.append(f"b({mu},{nu}) from scalar product differs")
        # isometry: indicator functions, with the class-function scalar
        # product evaluated over the representative subgroups
        weight = Counter()
        for lam in partitions(k):
            G = green.maximal_subgroup(green.canonical_pi(lam))
            for x in G.diagrams():
                weight[conjugacy.cycletype(x)] += Fraction(1, len(G))
        for mu in order:
            f = symfunc.frobenius_of_classfunction({mu: 1})
            for nu in order:
                lhs = weight[mu] if mu == nu else 0
                g = symfunc.frobenius_of_classfunction({nu: 1})
                if lhs != symfunc.scalar(f, g):
                    bad.append(f"isometry fails at {mu}, {nu}")
        # plethysm rows agree with the (1^k) block of U
        for i, lam in enumerate(order):
            row = {order[j][0]: U[i][j] for j in range(len(order))
                   if k and type_up(order[j]) == (1,) * k and U[i][j]}
            if k and symfunc.plethysm_schur_expansion(lam) != row:
                bad.append(f"plethysm of {lam} disagrees with U row")
            if symfunc.restrict_to_first(symfunc.frob_char(lam)) != symfunc.plethysm_direct(lam):
                bad.append(f"plethysm of {lam} differs from direct computation")
    for k in range(1, _pick(level, 5, 6) + 1):
        for lam in partitions(k):
            if symfunc.plethysm_schur_expansion(vector_partition([lam], k)) != {lam: 1}:
                bad.append(f"s_{lam}[s_1] != s_{lam}")
    return bad


CHECKS = [
    ("monoid counts", check_monoid_counts),
    ("presentation relations", check_relations),
    ("associativity", check_associativity),
    ("inverse monoid and idempotents", check_inverse_monoid),
    ("factorization", check_factorization),
    ("Green's classes and orbit structure", check_green),
    ("conjugacy classes", check_conjugacy_classes),
    ("b coefficients", check_b_coefficients),
    ("cycle merges", check_cycle_merges),
    ("Specht modules", check_specht),
    ("uniform tableau modules", check_modules),
    ("character tables", check_character_tables),
    ("symmetric functions", check_symfunc),
]


def run_all(level="fast", report=None):
    """Run every check; ``report(name, failures, seconds)`` is called after
    each.  Returns True when everything passed."""
    ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        failures = fn(level)
        if report:
            report(name, failures, time.perf_counter() - t0)
        ok = ok and not failures
    return ok
