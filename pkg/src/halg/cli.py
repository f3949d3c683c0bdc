"""``halg`` command line.

Exit codes: 0 holds/success, 1 violated or counterexample candidate,
2 input error, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import conjectures as cj
from .algebra import gabriel_quiver, matrix_algebra, path_algebra
from .corpus import corpus, corpus_names
from .errors import CounterexampleCandidate, HalgError, InputError
from .exactlin import GF, QQ
from .io import (
    action_from_json, action_to_json, algebra_from_json, algebra_to_json, emit_report,
    module_from_json, quiver_from_json, quiver_to_json, read_json,
)
from .modules import (
    indecomposable_injectives, indecomposable_projectives, minimal_resolution, regular_module, simples,
)

EXIT = {cj.HOLDS: 0, cj.VIOLATED: 1, cj.INCONCLUSIVE: 3}
EXIT_INPUT = 2


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cutoff", type=int, default=10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--corpus", metavar="NAME", help="built-in instance instead of --algebra/--action")
    common.add_argument("-o", "--output", metavar="PATH")

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--algebra", metavar="FILE")
    src.add_argument("--action", metavar="FILE")

    mod = argparse.ArgumentParser(add_help=False)
    mod.add_argument("--module", metavar="FILE", action="append", default=[])
    mod.add_argument("--target", action="append", default=[],
                     help="regular | simple:K | projective:K | injective:K (K index or label)")

    p = argparse.ArgumentParser(prog="halg", description="Exact homological algebra of finite-dimensional algebras.")
    p.add_argument("--list-corpus", action="store_true", help="print built-in instance names")
    sub = p.add_subparsers(dest="verb")

    b = sub.add_parser("build-path-algebra", parents=[common], help="path algebra of an acyclic quiver")
    b.add_argument("quiver", metavar="QUIVER_JSON")
    b.add_argument("--prime", type=int, help="work over GF(p) instead of Q")

    m = sub.add_parser("matrix-ext", parents=[common, src], help="matrix algebra M_n(A)")
    m.add_argument("-n", type=int, default=2)

    sub.add_parser("skew", parents=[common, src], help="skew group algebra")
    sub.add_parser("gabriel-quiver", parents=[common, src], help="Gabriel quiver and simple dimensions")

    r = sub.add_parser("resolve", parents=[common, src, mod], help="minimal resolution of a module")
    r.add_argument("--direction", choices=("projective", "injective"), default="projective")

    c = sub.add_parser("check", parents=[common, src], help="condition checkers")
    c.add_argument("claim", choices=("gsc", "nc", "agc", "sanity"))

    pr = sub.add_parser("probe", parents=[common, src, mod], help="vanishing probes")
    pr.add_argument("claim", choices=("snc", "gnc", "arc", "findim"))

    v = sub.add_parser("verify", parents=[common, src, mod], help="transfer verifiers")
    v.add_argument("claim", choices=("lemma31", "prop27", "prop35", "thm36", "adjoint"))
    v.add_argument("--extension", default=None, help="skew | mN (matrix size N); default skew when an action exists")
    v.add_argument("--i-max", type=int, default=5)
    v.add_argument("--n-target", default="regular", help="second module for prop35 (same syntax as --target)")
    return p


# ---------------------------------------------------------------------------
# loading

def _load_algebra_obj(path):
    obj = read_json(path)
    if isinstance(obj, dict) and "evidence" in obj and isinstance(obj["evidence"], dict) \
            and "algebra" in obj["evidence"]:
        return obj["evidence"]["algebra"]
    return obj


def _instance(args, need_action=False):
    if args.corpus:
        try:
            entry = corpus(args.corpus)
        except KeyError:
            raise InputError("", f"unknown corpus instance {args.corpus!r}; try --list-corpus") from None
        if need_action and entry.action is None:
            raise InputError("", f"corpus instance {args.corpus!r} has no group action")
        return entry.algebra, entry.action
    if not getattr(args, "algebra", None):
        raise InputError("", "need --algebra FILE or --corpus NAME")
    a = algebra_from_json(_load_algebra_obj(args.algebra))
    g = None
    if getattr(args, "action", None):
        g = action_from_json(read_json(args.action), a)
    elif need_action:
        raise InputError("", "need --action FILE (or a --corpus instance with an action)")
    return a, g


def _pick(mods, key, kind):
    if key.isdigit() and int(key) < len(mods):
        return mods[int(key)]
    labels = mods[0].algebra.decomposition.class_labels if mods else ()
    if key in labels:
        return mods[labels.index(key)]
    raise InputError("", f"no {kind} {key!r}; classes are {list(labels)}")


def _target(a, spec):
    if spec == "regular":
        return regular_module(a)
    kind, _, key = spec.partition(":")
    table = {"simple": simples, "projective": indecomposable_projectives, "injective": indecomposable_injectives}
    if kind not in table or not key:
        raise InputError("", f"bad target {spec!r}")
    return _pick(table[kind](a), key, kind)


def _modules(args, a, default):
    out = [(spec, _target(a, spec)) for spec in args.target]
    for path in args.module:
        out.append((path, module_from_json(read_json(path), a, base_dir=os.path.dirname(path))))
    return out or default


def _all_simple_targets(a):
    labels = a.decomposition.class_labels
    return [(f"simple:{labels[c]}", s) for c, s in enumerate(simples(a))]


# ---------------------------------------------------------------------------
# verbs

def _report(claim, verdict, evidence, args, certificates=None):
    return {"claim": claim, "verdict": verdict, "cutoff": args.cutoff, "seed": args.seed,
            "evidence": evidence, "certificates": certificates or []}


def _cmd_build(args):
    q = quiver_from_json(read_json(args.quiver))
    field = GF(args.prime) if args.prime else QQ
    try:
        a = path_algebra(field, q)
    except (HalgError, ValueError) as exc:
        raise InputError("/arrows", str(exc)) from None
    a.name = "kQ"
    return _report("build-path-algebra", cj.HOLDS,
                   {"dim": a.dim, "quiver": quiver_to_json(q), "algebra": algebra_to_json(a)}, args)


def _cmd_matrix(args):
    a, _ = _instance(args)
    if args.n < 1:
        raise InputError("", "-n must be at least 1")
    m = matrix_algebra(a, args.n)
    return _report("matrix-ext", cj.HOLDS, {"dim": m.dim, "n": args.n, "algebra": algebra_to_json(m)}, args)


def _cmd_skew(args):
    a, g = _instance(args, need_action=True)
    s = g.skew
    return _report("skew", cj.HOLDS, {"dim": s.dim, "group_order": g.order, "action": action_to_json(g),
                                      "algebra": algebra_to_json(s)}, args)


def _cmd_gabriel(args):
    a, _ = _instance(args)
    gq = gabriel_quiver(a)
    ev = {"dim": a.dim, "vertices": list(gq.quiver.vertices),
          "arrows": [{"from": s, "to": t, "count": c} for (s, t), c in sorted(gq.arrow_counts.items())],
          "n_arrows": gq.n_arrows, "simple_dims": gq.simple_dims, "radical_dim": a.radical.dim}
    return _report("gabriel-quiver", cj.HOLDS, ev, args)


def _cmd_resolve(args):
    a, _ = _instance(args)
    mods = _modules(args, a, [("regular", regular_module(a))])
    out = {}
    for name, m in mods:
        res = minimal_resolution(m, args.direction, args.cutoff)
        out[name] = res.to_json()
    verdict = cj.HOLDS
    return _report("resolve", verdict, {"direction": args.direction, "resolutions": out}, args)


def _cmd_check(args):
    a, _ = _instance(args)
    if args.claim == "sanity":
        res = cj.corpus_sanity(a, args.cutoff)
        return _report("corpus-sanity", cj.HOLDS, {k: v.to_report() for k, v in res.items()}, args)
    fn = {"gsc": cj.gsc_check, "nc": cj.nakayama_condition, "agc": cj.auslander_condition}[args.claim]
    v = fn(a, args.cutoff)
    v.seed = args.seed
    if args.claim == "nc" and v.kind == cj.HOLDS and not v.flags["self_injective"]:
        raise CounterexampleCandidate("nc-condition", v.to_report())
    if args.claim == "agc" and v.kind == cj.HOLDS and not v.flags["gorenstein"]:
        raise CounterexampleCandidate("agc-condition", v.to_report())
    return v.to_report()


def _aggregate(verdicts):
    verdicts = list(verdicts)
    if cj.VIOLATED in verdicts:
        return cj.VIOLATED
    if cj.INCONCLUSIVE in verdicts:
        return cj.INCONCLUSIVE
    return cj.HOLDS


def _cmd_probe(args):
    a, _ = _instance(args)
    if args.claim == "gnc":
        v = cj.gnc_probe(a, args.cutoff)
        rep = v.to_report()
    elif args.claim == "findim":
        mods = _modules(args, a, _all_simple_targets(a) + [
            (f"injective:{i}", m) for i, m in enumerate(indecomposable_injectives(a))])
        rep = cj.findim_report(a, [m for _, m in mods], args.cutoff).to_report()
        rep["evidence"]["modules"] = [n for n, _ in mods]
        v = None
    else:
        fn = cj.snc_probe if args.claim == "snc" else cj.arc_probe
        mods = _modules(args, a, _all_simple_targets(a))
        per = {name: fn(m, args.cutoff) for name, m in mods}
        rep = _report(f"{args.claim}-probe", _aggregate([x.kind for x in per.values()]),
                      {"modules": {k: x.to_report()["evidence"] for k, x in per.items()}}, args)
        if any(x.candidate for x in per.values()):
            rep["evidence"]["counterexample_candidate"] = True
        v = None
    rep["seed"] = args.seed
    if v is not None and v.candidate:
        rep["evidence"]["counterexample_candidate"] = True
    return rep


def _extension(args, a, g):
    ext = args.extension or ("skew" if g is not None else "m2")
    if ext == "skew":
        if g is None:
            raise InputError("", "skew extension needs a group action")
        return g
    if ext.startswith("m") and ext[1:].isdigit() and int(ext[1:]) >= 1:
        return int(ext[1:])
    raise InputError("", f"bad --extension {ext!r}")


def _merge(name, reports, args):
    verdict = _aggregate([r.verdict for r in reports.values()])
    certs = []
    for key, r in reports.items():
        for c in r.certificates:
            certs.append({"module": key} | c)
    ev = {key: r.to_report()["evidence"] for key, r in reports.items()}
    return _report(name, verdict, ev, args, certs)


def _cmd_verify(args):
    claim = args.claim
    if claim == "lemma31":
        a, g = _instance(args)
        rep = cj.verify_injective_dimension_transfer(a, _extension(args, a, g), args.cutoff)
        rep.seed = args.seed
        return rep.to_report()
    a, g = _instance(args, need_action=True)
    if claim == "prop27":
        default = _all_simple_targets(a) + [(f"projective:{a.decomposition.class_labels[c]}", p)
                                            for c, p in enumerate(indecomposable_projectives(a))]
        mods = _modules(args, a, default)
        reps = {name: cj.verify_induction_restriction(m, g, args.seed, args.cutoff) for name, m in mods}
        return _merge("prop2.7", reps, args)
    if claim == "prop35":
        n = _target(a, args.n_target)
        mods = _modules(args, a, _all_simple_targets(a))
        reps = {name: cj.verify_ext_transfer(m, n, g, args.i_max, args.seed) for name, m in mods}
        out = _merge("prop3.5", reps, args)
        out["evidence"]["n"] = args.n_target
        return out
    if claim == "thm36":
        rep = cj.verify_simple_induction(a, g, args.cutoff, args.seed)
        return rep.to_report()
    rep = cj.verify_adjunction(g)
    out = rep.to_report()
    out["seed"], out["cutoff"] = args.seed, args.cutoff
    return out


VERBS = {"build-path-algebra": _cmd_build, "matrix-ext": _cmd_matrix, "skew": _cmd_skew,
         "gabriel-quiver": _cmd_gabriel, "resolve": _cmd_resolve, "check": _cmd_check,
         "probe": _cmd_probe, "verify": _cmd_verify}


def _command(args, argv):
    """Canonical argv with every resolved option, so a report can be replayed."""
    out = ["halg", args.verb]
    if getattr(args, "claim", None):
        out.append(args.claim)
    skip = {"verb", "claim", "output", "list_corpus", "quiver"}
    if args.verb == "build-path-algebra":
        out.append(args.quiver)
    for key in sorted(vars(args)):
        if key in skip:
            continue
        val = getattr(args, key)
        if val is None or val == []:
            continue
        flag = "-n" if key == "n" else "--" + key.replace("_", "-")
        for item in (val if isinstance(val, list) else [val]):
            out += [flag, str(item)]
    return out


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    if args.list_corpus:
        stdout.write("\n".join(corpus_names()) + "\n")
        return 0
    if not args.verb:
        parser.print_usage(stderr)
        return EXIT_INPUT
    if args.cutoff < 0:
        stderr.write("error: --cutoff must be non-negative\n")
        return EXIT_INPUT
    try:
        report = VERBS[args.verb](args)
    except CounterexampleCandidate as exc:
        stderr.write(f"{exc.BANNER}\nclaim: {exc.claim}\n")
        report = {"claim": exc.claim, "verdict": cj.VIOLATED, "cutoff": args.cutoff, "seed": args.seed,
                  "evidence": {"counterexample_candidate": True}, "certificates": [exc.certificate]}
        report["command"] = _command(args, argv)
        emit_report(report, args.output, args.format, stdout)
        return 1
    except InputError as exc:
        stderr.write(f"input error at {exc}\n")
        return EXIT_INPUT
    except HalgError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    report["command"] = _command(args, argv)
    emit_report(report, args.output, args.format, stdout)
    if report.get("evidence", {}).get("counterexample_candidate"):
        stderr.write(f"{CounterexampleCandidate.BANNER}\nclaim: {report['claim']}\n")
        return 1
    return EXIT[report["verdict"]]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
