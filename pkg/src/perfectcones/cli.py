"""Command-line interface: enumeration databases, reduction, strata posets,
claim verification, DOT export and the selftest battery.

Exit status: 0 success, 1 a mathematical check that should hold FAILed,
2 usage error. Set VORONOI_CACHE_DIR to reuse enumeration databases between
runs; --force recomputes. --jobs caps the worker count (the exact kernels run
single-process; the cap is accepted for interface stability).
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from . import forms, minvec, equivalence, voronoi, facelattice, verify, jsonio
from .errors import PerfectConesError


def _cache_dir():
    return os.environ.get("VORONOI_CACHE_DIR")


def _cache_path(g):
    d = _cache_dir()
    return os.path.join(d, "g%d.classes.json" % g) if d else None


def _load_enumeration(g, force=False):
    path = _cache_path(g)
    if path and not force and os.path.exists(path):
        with open(path) as fh:
            return jsonio.dec_enumeration(json.load(fh))
    enum = voronoi.enumerate_perfect(g, force=force)
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            fh.write(jsonio.dumps(jsonio.enc_enumeration(enum, __version__)))
    return enum


def _read_form(path):
    with open(path) as fh:
        return jsonio.dec_form(json.load(fh))


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)
    print("wrote %s" % path)


def cmd_enumerate(args):
    enum = _load_enumeration(args.g, force=args.force)
    out = args.out
    _write(os.path.join(out, "classes.json"),
           jsonio.dumps(jsonio.enc_enumeration(enum, __version__)))
    _write(os.path.join(out, "graph.dot"), jsonio.enumeration_dot(enum))
    print("g=%d: %d classes" % (args.g, len(enum.classes)))
    return 0


def cmd_minvec(args):
    q = _read_form(args.form)
    md = minvec.min_data(q)
    if args.bound is not None:
        vectors = [v for v, _ in minvec.vectors_up_to(q, args.bound)]
    else:
        vectors = list(md.vectors)
    print(jsonio.dumps({"min": jsonio.enc_rat(md.min_norm),
                        "vectors": [jsonio.enc_vector(v) for v in vectors]}),
          end="")
    return 0


def cmd_equiv(args):
    a = _read_form(args.a)
    b = _read_form(args.b)
    u = equivalence.are_equivalent(a, b)
    print(jsonio.dumps({"equivalent": u is not None,
                        "witness": jsonio.enc_matrix(u) if u is not None else None}),
          end="")
    return 0


def cmd_reduce(args):
    f = _read_form(args.form)
    enum = _load_enumeration(len(f))
    loc = voronoi.locate(f, enum)
    comb = loc.combination
    print(jsonio.dumps({
        "class": loc.class_id,
        "objective": jsonio.enc_rat(loc.objective),
        "terminal_form": jsonio.enc_form(loc.terminal_form),
        "combination": {"rays": [jsonio.enc_vector(v) for v in comb.rays],
                        "coeffs": [jsonio.enc_rat(c) for c in comb.coeffs],
                        "target": jsonio.enc_matrix(comb.target)},
    }), end="")
    return 0


def cmd_faces(args):
    enum = _load_enumeration(args.g)
    report = {"version": jsonio.FORMAT_VERSION, "g": args.g, "classes": []}
    for cls in enum.classes:
        dom = voronoi.cached_domain(cls.representative)
        fs = facelattice.faces(dom)
        fvec = {}
        for face in fs:
            fvec[face.dim] = fvec.get(face.dim, 0) + 1
        report["classes"].append({"id": cls.id, "rays": len(dom.rays),
                                  "f_vector": {str(k): v for k, v in sorted(fvec.items())}})
    print(jsonio.dumps(report), end="")
    return 0


def cmd_strata(args):
    poset = facelattice.strata_poset(args.g)
    _write(os.path.join(args.out, "poset.json"),
           jsonio.dumps(jsonio.enc_poset(poset, __version__)))
    _write(os.path.join(args.out, "poset.dot"), jsonio.poset_dot(poset))
    print("g=%d: %d strata orbits" % (args.g, len(poset.nodes)))
    return 0


def _interior_corpus(g):
    """Deterministic psd forms of rank >= 2 expected interior, plus the root form."""
    corpus = [forms.root_form(g)]
    corpus.append(tuple(tuple(2 if i == j else 0 for j in range(g))
                        for i in range(g)))
    if g >= 2:
        corpus.append(forms.block_sum(forms.root_form(g - 1), ((4,),)))
    return corpus


def run_verify(g, claim="all"):
    """Run the requested claim checkers; returns (certificates, any_fail)."""
    certs = []
    if claim in ("BC-RAYS", "all"):
        certs.append(verify.check_rank1_rays(g))
    if claim in ("BC-INTERIOR", "all"):
        for f in _interior_corpus(g):
            certs.append(verify.check_interior(f))
    if claim in ("PRODUCT", "all"):
        # the rank-1 factor must be [2] so the minimal norms agree
        factor = lambda n: ((2,),) if n == 1 else forms.root_form(n)
        for a in range(1, g):
            certs.append(verify.check_product(factor(a), factor(g - a)))
    if claim in ("CLOSURE", "all") and g >= 2:
        poset = facelattice.strata_poset(g)
        for node in poset.nodes:
            if node.minimal and node.rank == g and node.dim > 0:
                certs.append(verify.check_closure(node.representative,
                                                  minimal_input=True))
    if claim in ("CODIM1", "all") and g >= 2:
        certs.append(verify.check_codim_one(forms.root_form(g - 1)))
    return certs, any(c.verdict == "FAIL" for c in certs)


def cmd_verify(args):
    certs, failed = run_verify(args.g, args.claim)
    _write(os.path.join(args.out, "certificates.json"),
           jsonio.dumps(jsonio.enc_certificates(certs, args.g, __version__)))
    for c in certs:
        print("%-12s %s" % (c.claim, c.verdict))
    return 1 if failed else 0


def cmd_export_dot(args):
    if args.what == "classes":
        enum = _load_enumeration(args.g)
        text = jsonio.enumeration_dot(enum)
        path = os.path.join(args.out, "graph.dot")
    else:
        poset = facelattice.strata_poset(args.g)
        text = jsonio.poset_dot(poset)
        path = os.path.join(args.out, "poset.dot")
    _write(path, text)
    return 0


def cmd_selftest(args):
    rows = []
    t_all = time.time()

    def record(name, ok, note=""):
        rows.append((name, "PASS" if ok else "FAIL", note))

    t0 = time.time()
    counts = {}
    for g in range(1, 5):
        counts[g] = len(_load_enumeration(g).classes)
    record("class counts g<=4", counts == {1: 1, 2: 1, 3: 1, 4: 2},
           "%s in %.1fs" % (counts, time.time() - t0))
    for g in range(1, 5):
        record("rank-1 rays g=%d" % g, verify.check_rank1_rays(g).verdict == "PASS")
    ok = all(verify.check_interior(f).verdict == "PASS"
             for f in _interior_corpus(3))
    ok = ok and verify.check_interior(forms.rank1((1, 0, 1))).verdict == "FAIL"
    record("interior test", ok)
    record("product A2+A2",
           verify.check_product(forms.root_form(2), forms.root_form(2)).verdict == "PASS")
    certs, failed = run_verify(3, "CLOSURE")
    record("closure g=3", bool(certs) and not failed)
    record("codim-1 r=2", verify.check_codim_one(forms.root_form(2)).verdict == "PASS")
    p2 = facelattice.strata_poset(2)
    p3 = facelattice.strata_poset(3)
    record("strata restriction",
           facelattice.posets_isomorphic(facelattice.restrict_poset(p3, 2), p2))

    width = max(len(r[0]) for r in rows)
    print("%-*s  %s" % (width, "check", "result"))
    for name, res, note in rows:
        print("%-*s  %-4s  %s" % (width, name, res, note))
    print("selftest finished in %.1fs" % (time.time() - t_all))
    return 1 if any(r[1] == "FAIL" for r in rows) else 0


def build_parser():
    p = argparse.ArgumentParser(prog="perfectcones", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--jobs", type=int, default=1,
                        help="worker cap (accepted for interface stability)")
        return sp

    sp = add("enumerate", cmd_enumerate, help="enumerate perfect form classes")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="ignore caches")
    sp.add_argument("--out", default=".")

    sp = add("minvec", cmd_minvec, help="minimal vectors of a form")
    sp.add_argument("--form", required=True)
    sp.add_argument("--bound", type=int)

    sp = add("equiv", cmd_equiv, help="test unimodular equivalence")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = add("reduce", cmd_reduce, help="locate a psd form in the decomposition")
    sp.add_argument("--form", required=True)

    sp = add("faces", cmd_faces, help="face counts of the perfect domains")
    sp.add_argument("--g", type=int, required=True)

    sp = add("strata", cmd_strata, help="GL-orbit poset of interior-meeting faces")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--out", default=".")

    sp = add("verify", cmd_verify, help="run claim checkers, write certificates")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--claim", default="all",
                    choices=["BC-RAYS", "BC-INTERIOR", "PRODUCT", "CLOSURE",
                             "CODIM1", "all"])
    sp.add_argument("--out", default=".")

    sp = add("export-dot", cmd_export_dot, help="write DOT graphs")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--what", default="classes", choices=["classes", "poset"])
    sp.add_argument("--out", default=".")

    add("selftest", cmd_selftest, help="run the acceptance battery for g <= 4")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PerfectConesError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
