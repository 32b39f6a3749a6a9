"""Command-line front end: ``ubp <subcommand> ...``."""
import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, conjugacy, diagram, green, repmod, specht, symfunc
from .combinatorics import (
    display_vp, enumerate_Ik, enumerate_setpartitions, partition, vector_partition,
)
from .diagram import ResourceError
from .formats import (
    ParseError, diagram_json, format_matrix, format_module_vector, format_multisym,
    format_setpartition, format_tableau, format_vp, matrix_json, module_vector_json,
    multisym_json, parse_diagram, parse_partition, parse_setpartition, parse_tableau,
    parse_vp, vp_to_json,
)

BOUNDS = {"monoid": diagram.DEFAULT_MAX_K, "module": repmod.MODULE_MAX_K,
          "symfunc": symfunc.SYMFUNC_MAX_K}


class UsageError(Exception):
    pass


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=None if args.compact else 2))
    else:
        print(text)


def _bound(args, kind):
    return args.max_k if args.max_k is not None else BOUNDS[kind]


def _require_k(args, k, kind):
    limit = _bound(args, kind)
    if k > limit:
        raise ResourceError(f"k={k} exceeds the {kind} bound {limit}; raise it with --max-k")
    if k < 0:
        raise UsageError("k must be nonnegative")


# -- subcommands ------------------------------------------------------------

def cmd_enumerate(args):
    k = args.k
    if args.object == "monoid":
        _require_k(args, k, "monoid")
        if args.count:
            elems = diagram.enumerate_monoid(k, max_k=_bound(args, "monoid"))
            _emit(args, {"k": k, "count": len(elems)}, str(len(elems)))
            return 0
        elems = diagram.enumerate_monoid(k, max_k=_bound(args, "monoid"))
        _emit(args, {"k": k, "elements": [str(d) for d in elems]},
              "\n".join(str(d) for d in elems))
    elif args.object == "set-partitions":
        lam = parse_partition(args.type) if args.type else None
        items = enumerate_setpartitions(k, lam)
        if args.count:
            _emit(args, {"k": k, "count": len(items)}, str(len(items)))
        else:
            _emit(args, {"k": k, "set_partitions": [format_setpartition(p) for p in items]},
                  "\n".join(format_setpartition(p) for p in items))
    else:
        items = enumerate_Ik(k)
        if args.count:
            _emit(args, {"k": k, "count": len(items)}, str(len(items)))
        else:
            _emit(args, {"k": k, "vector_partitions": [vp_to_json(v) for v in items]},
                  "\n".join(f"{format_vp(v)}  {display_vp(v)}" for v in items))
    return 0


def cmd_multiply(args):
    ds = [parse_diagram(t, args.k) for t in args.diagrams]
    k = ds[0].k
    if any(d.k != k for d in ds):
        raise UsageError("all diagrams must live on the same k (pass --k)")
    out = ds[0]
    for d in ds[1:]:
        out = out * d
    _emit(args, diagram_json(out), str(out))
    return 0


def cmd_factorize(args):
    d = parse_diagram(args.diagram, args.k)
    sigma = diagram.factorize(d)
    e_top = diagram.idempotent_of(d.top(), d.k)
    e_bot = diagram.idempotent_of(d.bot(), d.k)
    left, right = e_top * sigma == d, sigma * e_bot == d
    if not (left and right):
        raise AssertionError(f"factorization of {d} failed")
    payload = {"diagram": str(d), "sigma": str(sigma),
               "sigma_images": list(diagram.as_permutation(sigma)),
               "e_top": str(e_top), "e_bot": str(e_bot), "verified": True}
    text = (f"sigma  = {sigma}\n"
            f"d = e_top * sigma   with e_top = {e_top}\n"
            f"d = sigma * e_bot   with e_bot = {e_bot}")
    _emit(args, payload, text)
    return 0


def cmd_cycletype(args):
    d = parse_diagram(args.diagram, args.k)
    e, m = conjugacy.omega(d)
    ct = conjugacy.cycletype(d)
    payload = {"diagram": str(d), "omega_power": m, "idempotent": str(e),
               "cycletype": vp_to_json(ct)}
    _emit(args, payload, f"cycletype {format_vp(ct)}  {display_vp(ct)}\n"
                         f"d^{m} = {e} is idempotent")
    return 0


def cmd_class_rep(args):
    mu = parse_vp(args.mu, args.k)
    d = conjugacy.class_rep(mu)
    _emit(args, {"mu": vp_to_json(mu), **diagram_json(d)}, str(d))
    return 0


def cmd_green(args):
    k = args.k
    _require_k(args, k, "monoid")
    what = args.list[0]
    if what != "subgroup" and len(args.list) > 1:
        raise UsageError(f"--list {what} takes no argument")
    if what == "jclasses":
        data = {}
        for lam in reversed(list(_partitions(k))):
            data[",".join(map(str, lam))] = [str(d) for d in green.jclass(lam, k)]
        text = "\n".join(f"J{list(lam)}: size {len(green.jclass(lam, k))}"
                         for lam in reversed(list(_partitions(k))))
        _emit(args, {"k": k, "jclasses": data}, text)
    elif what == "lclasses":
        data = {format_setpartition(pi): [str(d) for d in green.lclass(pi)]
                for pi in enumerate_setpartitions(k)}
        text = "\n".join(f"L_{p}: size {len(v)}" for p, v in data.items())
        _emit(args, {"k": k, "lclasses": data}, text)
    elif what == "subgroup":
        text_pi = args.list[1] if len(args.list) > 1 else args.pi
        if text_pi is None:
            raise UsageError("subgroup needs a set partition, e.g. --list subgroup 1|2|34")
        pi = parse_setpartition(text_pi, k)
        G = green.maximal_subgroup(pi)
        items = [{"diagram": str(g.diagram),
                  "block_permutations": {str(sz): list(p) for sz, p in g.perms.items()}}
                 for g in G.elements]
        _emit(args, {"k": k, "pi": format_setpartition(pi), "order": len(G), "elements": items},
              "\n".join(str(g.diagram) for g in G.elements))
    else:
        raise UsageError(f"unknown --list value {what!r}")
    return 0


def _partitions(k):
    from .combinatorics import partitions
    return partitions(k)


def cmd_module(args):
    k = args.k
    if not args.act:
        _require_k(args, k, "module")
    lam = parse_vp(args.shape, k)
    if args.basis:
        B = repmod.basis(lam)
        _emit(args, {"shape": vp_to_json(lam), "dimension": len(B),
                     "basis": [format_tableau(S) for S in B]},
              "\n".join(format_tableau(S) for S in B))
    elif args.matrix:
        d = parse_diagram(args.matrix, k)
        M = repmod.matrix(d, lam)
        _emit(args, {"shape": vp_to_json(lam), "diagram": str(d),
                     "basis": [format_tableau(S) for S in repmod.basis(lam)],
                     "entries": [list(r) for r in M]},
              "\n".join(" ".join(f"{x:>3}" for x in r) for r in M))
    elif args.act:
        if not args.on:
            raise UsageError("--act needs --on TABLEAU")
        d = parse_diagram(args.act, k)
        S = parse_tableau(args.on, k)
        if S.shape != lam:
            raise UsageError(f"tableau has shape {format_vp(S.shape)}, expected {format_vp(lam)}")
        v = repmod.act(d, S)
        _emit(args, {"shape": vp_to_json(lam), "diagram": str(d), "tableau": format_tableau(S),
                     "result": module_vector_json(v)}, format_module_vector(v))
    else:
        raise UsageError("module needs one of --basis, --act, --matrix")
    return 0


def _trace_row(args):
    lam, k = args
    return tuple(repmod.trace_of(conjugacy.class_rep(mu), lam) for mu in enumerate_Ik(k))


def _trace_table(k, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return tuple(pool.map(_trace_row, [(lam, k) for lam in enumerate_Ik(k)]))
    return repmod.character_table_trace(k, max_k=k)


def cmd_char_table(args):
    k = args.k
    if args.method in ("trace", "both"):
        _require_k(args, k, "module")
    else:
        _require_k(args, k, "symfunc")
    tables = {}
    if args.method in ("trace", "both"):
        tables["trace"] = _trace_table(k, args.jobs)
    if args.method in ("frobenius", "both"):
        tables["frobenius"] = symfunc.X_matrix(k, max_k=k)
    first = next(iter(tables.values()))
    payload = matrix_json(k, first)
    payload["method"] = args.method
    text = format_matrix(k, first)
    status = 0
    if args.method == "both":
        diffs = [(lam, mu) for i, lam in enumerate(enumerate_Ik(k))
                 for j, mu in enumerate(enumerate_Ik(k))
                 if tables["trace"][i][j] != tables["frobenius"][i][j]]
        payload["agree"] = not diffs
        payload["mismatches"] = [[vp_to_json(a), vp_to_json(b)] for a, b in diffs]
        if diffs:
            text += f"\nMISMATCH in {len(diffs)} cells"
            status = 1
        else:
            text += "\ntrace and frobenius tables agree"
    _emit(args, payload, text)
    return status


def cmd_matrices(args):
    k = args.k
    _require_k(args, k, "symfunc")
    mats = {"X": symfunc.X_matrix(k, max_k=k), "A": symfunc.A_matrix(k, max_k=k),
            "B": conjugacy.b_matrix(k), "U": symfunc.U_matrix(k, max_k=k)}
    which = [w.strip().upper() for w in args.which.split(",") if w.strip()]
    for w in which:
        if w not in mats:
            raise UsageError(f"unknown matrix {w!r}; choose from X, A, B, U")
    ok_ab = checks.matmul(mats["A"], mats["B"]) == mats["X"]
    ok_ua = checks.matmul(mats["U"], mats["A"]) == mats["X"]
    payload = {"k": k, "order": [vp_to_json(v) for v in enumerate_Ik(k)],
               "matrices": {w: [list(r) for r in mats[w]] for w in which},
               "X_equals_AB": ok_ab, "X_equals_UA": ok_ua}
    text = "\n\n".join(f"{w}_{k} =\n{format_matrix(k, mats[w])}" for w in which)
    text += f"\n\nX = A B: {ok_ab}\nX = U A: {ok_ua}"
    _emit(args, payload, text)
    return 0 if ok_ab and ok_ua else 1


def _pleth_output(args, lam):
    exp = symfunc.plethysm_schur_expansion(lam)
    payload = {"shape": vp_to_json(lam),
               "schur": [{"partition": list(p), "coefficient": c} for p, c in exp.items()]}
    text = "\n".join(f"s[{','.join(map(str, p))}]: {c}" for p, c in exp.items()) or "0"
    _emit(args, payload, text)


def cmd_pleth(args):
    lam = parse_vp(args.shape, args.k)
    _require_k(args, len(lam), "symfunc")
    _pleth_output(args, lam)
    return 0


def cmd_sn_char(args):
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if sum(lam) != sum(mu):
        raise UsageError(f"{list(lam)} and {list(mu)} have different weights")
    val = specht.character_sn(lam, mu)
    _emit(args, {"lambda": list(lam), "mu": list(mu), "value": val}, str(val))
    return 0


def cmd_verify(args):
    lines = []

    def report(name, failures, seconds):
        status = "PASS" if not failures else "FAIL"
        lines.append({"check": name, "passed": not failures, "seconds": round(seconds, 3),
                      "failures": failures[:20]})
        if args.format != "json":
            print(f"{status}  {name}  ({seconds:.2f}s)", flush=True)
            for f in failures[:5]:
                print(f"      {f}")

    ok = checks.run_all(args.level, report)
    if args.format == "json":
        print(json.dumps({"level": args.level, "passed": ok, "checks": lines}, indent=2))
    else:
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


def cmd_conj(args):
    if args.cycletype:
        args.diagram = args.cycletype
        return cmd_cycletype(args)
    if args.rep:
        args.mu = args.rep
        return cmd_class_rep(args)
    if args.bmatrix:
        if args.k is None:
            raise UsageError("--bmatrix needs --k")
        _require_k(args, args.k, "symfunc")
        B = conjugacy.b_matrix(args.k)
        _emit(args, matrix_json(args.k, B), format_matrix(args.k, B))
        return 0
    raise UsageError("conj needs one of --cycletype, --rep, --bmatrix")


def cmd_symfunc(args):
    if args.E is not None:
        f = symfunc.E(args.E)
        _emit(args, {"E": args.E, "terms": multisym_json(f)}, format_multisym(f))
    elif args.frob:
        lam = parse_vp(args.frob)
        f = symfunc.frob_char(lam)
        _emit(args, {"shape": vp_to_json(lam), "terms": multisym_json(f)}, format_multisym(f))
    elif args.pleth:
        _pleth_output(args, parse_vp(args.pleth))
    else:
        for name, fn in (("xmatrix", symfunc.X_matrix), ("amatrix", symfunc.A_matrix),
                         ("umatrix", symfunc.U_matrix)):
            k = getattr(args, name)
            if k is not None:
                _require_k(args, k, "symfunc")
                M = fn(k, max_k=k)
                _emit(args, matrix_json(k, M), format_matrix(k, M))
                return 0
        raise UsageError("symfunc needs one of --E, --frob, --xmatrix, --amatrix, --umatrix, --pleth")
    return 0


# -- parser -----------------------------------------------------------------

def _global_options(suppress):
    opts = argparse.ArgumentParser(add_help=False)

    def default(v):
        return argparse.SUPPRESS if suppress else v

    opts.add_argument("--format", choices=["text", "json"], default=default("text"))
    opts.add_argument("--compact", action="store_true", default=default(False),
                      help="single-line JSON")
    opts.add_argument("--max-k", type=int, default=default(None),
                      help="override the size guard (also UBP_MAX_K)")
    opts.add_argument("--jobs", type=int, default=default(1), help="worker processes for tables")
    return opts


def build_parser():
    common = _global_options(suppress=True)
    p = argparse.ArgumentParser(prog="ubp", parents=[_global_options(suppress=False)],
                                description="Uniform block permutation monoid toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("enumerate", cmd_enumerate, "list or count monoid elements and index sets")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--object", choices=["monoid", "set-partitions", "vector-partitions"],
                    default="monoid")
    sp.add_argument("--type", help="set partition type filter, e.g. [2,2]")

    sp = add("multiply", cmd_multiply, "multiply diagrams left to right")
    sp.add_argument("diagrams", nargs="+")
    sp.add_argument("--k", type=int)

    sp = add("factorize", cmd_factorize, "d = e_top sigma = sigma e_bot")
    sp.add_argument("diagram")
    sp.add_argument("--k", type=int)

    sp = add("cycletype", cmd_cycletype, "cycle type and idempotent power")
    sp.add_argument("diagram")
    sp.add_argument("--k", type=int)

    sp = add("class-rep", cmd_class_rep, "canonical class representative")
    sp.add_argument("--mu", required=True, help="vector partition as JSON")
    sp.add_argument("--k", type=int)

    sp = add("green", cmd_green, "J-classes, L-classes, maximal subgroups")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--list", nargs="+", required=True, metavar="WHAT",
                    help="jclasses | lclasses | subgroup PI")
    sp.add_argument("--pi")

    sp = add("module", cmd_module, "irreducible modules on uniform tableaux")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--shape", required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--basis", action="store_true")
    g.add_argument("--act", metavar="DIAGRAM")
    g.add_argument("--matrix", metavar="DIAGRAM")
    sp.add_argument("--on", metavar="TABLEAU")

    sp = add("char-table", cmd_char_table, "character table of the monoid")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=["trace", "frobenius", "both"], default="both")

    sp = add("matrices", cmd_matrices, "X, A, B, U and the factorizations")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--which", default="X,A,B,U")

    sp = add("pleth", cmd_pleth, "Schur expansion of s_l1[s1] s_l2[s2] ...")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--k", type=int)

    sp = add("sn-char", cmd_sn_char, "symmetric group character value")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)

    sp = add("verify", cmd_verify, "run the invariant suites")
    sp.add_argument("--level", choices=["fast", "full"], default="fast")

    sp = add("conj", cmd_conj, "conjugacy data")
    sp.add_argument("--k", type=int)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--cycletype", metavar="DIAGRAM")
    g.add_argument("--rep", metavar="MU")
    g.add_argument("--bmatrix", action="store_true")

    sp = add("symfunc", cmd_symfunc, "symmetric function computations")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--E", type=int, metavar="R")
    g.add_argument("--frob", metavar="LAMBDAVEC")
    g.add_argument("--xmatrix", type=int, metavar="K")
    g.add_argument("--amatrix", type=int, metavar="K")
    g.add_argument("--umatrix", type=int, metavar="K")
    g.add_argument("--pleth", metavar="LAMBDAVEC")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_k is None and os.environ.get("UBP_MAX_K"):
        try:
            args.max_k = int(os.environ["UBP_MAX_K"])
        except ValueError:
            print("ubp: error: UBP_MAX_K must be an integer", file=sys.stderr)
            return 2
    if args.max_k is not None and args.max_k > max(BOUNDS.values()):
        print(f"ubp: warning: size guard raised to {args.max_k}; "
              "large k may take very long", file=sys.stderr)
    try:
        return args.func(args)
    except (ParseError, UsageError, ResourceError, ValueError) as exc:
        print(f"ubp: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"ubp: assertion failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
