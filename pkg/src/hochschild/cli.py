"""Command line entry points over the exact algebra file format.

Results go to stdout as a single JSON object with fixed key order and
canonical coefficient strings, so identical invocations are
byte-identical; diagnostics go to stderr.  Exit status: 0 success,
1 a check came out negative, 2 usage or input error.
"""

import argparse
import json
import sys

from .algebras import check_algebra, matrix_algebra, regular_bimodule
from .cochains import Cochain, HochschildRing, bracket, cup, sq
from .complexes import BarResolution, cohomology, cohomology_dims
from .contexts import BimoduleContext
from .extensions import (
    classes_equal,
    cocycle_to_extension,
    cocycles_cohomologous,
    extension_to_cocycle,
)
from .hopf import Bialgebra, Embedding, check_bialgebra, check_r_matrix, taft_r_matrix
from .io import SchemaError, parse_algebra_file, serialize_algebra
from .loops import loop_bracket
from .verify import (
    braided_vanish_suite,
    gerstenhaber_suite,
    retakh_suite,
    schwede_suite,
)


def _emit(doc):
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _fail(msg):
    sys.stderr.write(msg + "\n")
    return 2


def _load(path, check=True):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_file(fh.read(), check=check)


def _algebra_of(value):
    return value.algebra if isinstance(value, Bialgebra) else value


def _fmt_coords(f, coords):
    return [f.fmt(c) for c in coords]


def _basis_cochain(ring, degree, index, parser):
    if degree < 0 or degree > ring.top:
        parser.error("degree %d out of range" % degree)
    basis = ring.basis_cochains(degree)
    if index < 0 or index >= len(basis):
        parser.error(
            "class index %d out of range (dim HH^%d = %d)"
            % (index, degree, len(basis))
        )
    return basis[index]


def cmd_check(args, parser):
    value = _load(args.file, check=False)
    if isinstance(value, Bialgebra):
        rep = check_bialgebra(value)
        _emit({"kind": "bialgebra", "ok": rep["ok"], "report": rep})
        return 0 if rep["ok"] else 1
    bad = check_algebra(value)
    doc = {"kind": "algebra", "ok": bad is None}
    if bad is not None:
        doc["failure"] = {k: list(v) if isinstance(v, tuple) else v
                          for k, v in bad.items()}
    _emit(doc)
    return 0 if bad is None else 1


def cmd_dims(args, parser):
    a = _algebra_of(_load(args.file))
    ring = HochschildRing(a, args.max)
    _emit({"dims": ring.dims()})
    return 0


def _two_class_op(args, parser, op_degree, compute):
    if len(args.deg) != 2 or len(args.cls) != 2:
        parser.error("this operation takes --deg m n and --class i j")
    m, n = args.deg
    a = _algebra_of(_load(args.file))
    ring = HochschildRing(a, max(m, n, op_degree(m, n)))
    ci = _basis_cochain(ring, m, args.cls[0], parser)
    cj = _basis_cochain(ring, n, args.cls[1], parser)
    out = compute(ring, a, ci, cj, m, n)
    _emit(out)
    return 0


def cmd_cup(args, parser):
    def compute(ring, a, ci, cj, m, n):
        coords = ring.cup_classes(ci, cj)
        return {
            "degree": m + n,
            "class": _fmt_coords(a.field, coords),
        }
    return _two_class_op(args, parser, lambda m, n: m + n, compute)


def cmd_bracket(args, parser):
    def compute(ring, a, ci, cj, m, n):
        coords = ring.bracket_classes(ci, cj)
        return {
            "degree": m + n - 1,
            "class": _fmt_coords(a.field, coords),
        }
    return _two_class_op(args, parser, lambda m, n: m + n - 1, compute)


def cmd_sq(args, parser):
    if len(args.deg) != 1 or len(args.cls) != 1:
        parser.error("sq takes --deg m and --class i")
    m = args.deg[0]
    a = _algebra_of(_load(args.file))
    f = a.field
    if m % 2 != 0 and not (f.kind == "prime-field" and f.p == 2):
        parser.error("squaring needs an even degree away from characteristic 2")
    ring = HochschildRing(a, max(m, 2 * m - 1))
    ci = _basis_cochain(ring, m, args.cls[0], parser)
    coords = ring.sq_class(ci)
    _emit({"degree": 2 * m - 1, "class": _fmt_coords(f, coords)})
    return 0


def cmd_loop_bracket(args, parser):
    def compute(ring, a, ci, cj, m, n):
        bar = ring.resolution
        reg = ring.resolution.target
        ctx = BimoduleContext(a)
        xi = cocycle_to_extension(bar, reg, ci.mat, m)
        zeta = cocycle_to_extension(bar, reg, cj.mat, n)
        out = loop_bracket(ctx, xi, zeta)
        coc = extension_to_cocycle(bar, out)
        coords = ring.class_of(Cochain(a, m + n - 1, coc))
        return {
            "degree": m + n - 1,
            "class": _fmt_coords(a.field, coords),
        }
    return _two_class_op(args, parser, lambda m, n: m + n - 1, compute)


def cmd_ext(args, parser):
    a = _algebra_of(_load(args.file))
    if len(args.deg) != 1:
        parser.error("ext takes --deg n")
    n = args.deg[0]
    ring = HochschildRing(a, n)
    bar = ring.resolution
    reg = bar.target
    if args.action == "convert":
        if len(args.cls) != 1:
            parser.error("ext convert takes --class i")
        ci = _basis_cochain(ring, n, args.cls[0], parser)
        ext = cocycle_to_extension(bar, reg, ci.mat, n)
        back = extension_to_cocycle(bar, ext)
        ok = cocycles_cohomologous(bar, reg, ci.mat, back, n)
        _emit({
            "degree": n,
            "mid_dims": [m.dim for m in ext.mids],
            "roundtrip_class_preserved": ok,
        })
        return 0 if ok else 1
    if len(args.cls) != 2:
        parser.error("ext compare takes --class i j")
    ci = _basis_cochain(ring, n, args.cls[0], parser)
    cj = _basis_cochain(ring, n, args.cls[1], parser)
    e1 = cocycle_to_extension(bar, reg, ci.mat, n)
    e2 = cocycle_to_extension(bar, reg, cj.mat, n)
    equal = classes_equal(bar, reg, e1, e2)
    _emit({"degree": n, "equal": equal})
    return 0 if equal else 1


def _require_bialgebra(value, parser):
    if not isinstance(value, Bialgebra):
        parser.error("this command needs a bialgebra file (comul/counit)")
    return value


def cmd_hopf(args, parser):
    value = _load(args.file)
    b = _require_bialgebra(value, parser)
    f = b.field
    if args.action == "check-r":
        if args.alpha is not None:
            try:
                r = taft_r_matrix(b, f.of(args.alpha))
            except AssertionError as exc:
                parser.error(str(exc))
        elif b.r is not None:
            r = b.r
        else:
            parser.error("file declares no r_matrix and no --alpha given")
        rep = check_r_matrix(b, r)
        _emit({"mode": args.mode, "pass": rep[args.mode], "report": rep})
        return 0 if rep[args.mode] else 1

    emb = Embedding(b)
    if args.action == "embed":
        n = args.n
        hcx = emb.trivial_cochain_complex(n + 1)
        sp = cohomology(hcx, n)
        idxs = args.cls if args.cls else list(range(sp.dim))
        ring = HochschildRing(b.algebra, n)
        images = []
        nonzero = []
        for i in idxs:
            if i < 0 or i >= sp.dim:
                parser.error(
                    "class index %d out of range (dim H^%d = %d)"
                    % (i, n, sp.dim)
                )
            phi = emb.cocycle_matrix(sp.reps.col(i), n)
            img = emb.embed(phi, n)
            coords = ring.class_of(Cochain(b.algebra, n, img))
            images.append(_fmt_coords(f, coords))
            nonzero.append(any(c != f.zero for c in coords))
        _emit({
            "degree": n,
            "h_dim": sp.dim,
            "images": images,
            "nonzero": nonzero,
        })
        return 0

    # vanish: pairwise brackets of embedded positive-degree classes
    top = args.max
    hcx = emb.trivial_cochain_complex(top)
    spaces = {n: cohomology(hcx, n) for n in range(1, top)}
    embedded = {}
    for n, sp in spaces.items():
        embedded[n] = [
            Cochain(b.algebra, n, emb.embed(emb.cocycle_matrix(sp.reps.col(i), n), n))
            for i in range(sp.dim)
        ]
    bar = emb.bar
    reg = emb.reg
    checked = 0
    all_vanish = True
    for m in range(1, top):
        for n in range(1, top):
            if m + n > top:
                continue
            for ci in embedded[m]:
                for cj in embedded[n]:
                    br = bracket(ci, cj)
                    zero = Cochain.zero(b.algebra, m + n - 1)
                    if not cocycles_cohomologous(
                        bar, reg, br.mat, zero.mat, m + n - 1
                    ):
                        all_vanish = False
                    checked += 1
    _emit({"max_total_degree": top, "pairs": checked, "all_vanish": all_vanish})
    return 0 if all_vanish else 1


def cmd_morita(args, parser):
    a = _algebra_of(_load(args.file))
    mat = matrix_algebra(a, args.n)
    dims_a = HochschildRing(a, args.max).dims()
    dims_m = HochschildRing(mat, args.max).dims()
    equal = dims_a == dims_m
    _emit({
        "n": args.n,
        "dims_base": dims_a,
        "dims_matrix": dims_m,
        "equal": equal,
    })
    return 0 if equal else 1


def cmd_verify(args, parser):
    value = _load(args.file)
    a = _algebra_of(value)
    if args.suite == "gerstenhaber":
        rep = gerstenhaber_suite(a, args.seed, args.trials)
    elif args.suite == "retakh":
        rep = retakh_suite(a, args.seed, args.trials)
    elif args.suite == "schwede":
        rep = schwede_suite(a)
    else:
        b = _require_bialgebra(value, parser)
        if b.r is None:
            parser.error("braided-vanish needs an r_matrix in the file")
        rep = braided_vanish_suite(b)
    _emit({
        "suite": args.suite,
        "seed": args.seed,
        "trials": args.trials,
        "pass": rep["pass"],
        "report": rep,
    })
    return 0 if rep["pass"] else 1


def cmd_roundtrip(args, parser):
    value = _load(args.file)
    sys.stdout.write(serialize_algebra(value))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hh",
        description="Exact Hochschild cohomology workbench over algebra files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("file", help="algebra or bialgebra JSON file")
        p.set_defaults(fn=fn, parser=p)
        return p

    add("check", cmd_check, help="validate the file's axioms")

    p = add("dims", cmd_dims, help="cohomology dimensions")
    p.add_argument("--max", type=int, default=4)

    for name, fn in (
        ("cup", cmd_cup),
        ("bracket", cmd_bracket),
        ("loop-bracket", cmd_loop_bracket),
    ):
        p = add(name, fn, help="%s of two basis classes" % name)
        p.add_argument("--deg", type=int, nargs="+", required=True)
        p.add_argument("--class", dest="cls", type=int, nargs="+", required=True)

    p = add("sq", cmd_sq, help="squaring map on a basis class")
    p.add_argument("--deg", type=int, nargs="+", required=True)
    p.add_argument("--class", dest="cls", type=int, nargs="+", required=True)

    p = sub.add_parser("ext", help="extension/cocycle conversions")
    ext_sub = p.add_subparsers(dest="action", required=True)
    for action in ("convert", "compare"):
        q = ext_sub.add_parser(action)
        q.add_argument("file")
        q.add_argument("--deg", type=int, nargs="+", required=True)
        q.add_argument("--class", dest="cls", type=int, nargs="+", required=True)
        q.set_defaults(fn=cmd_ext, parser=q, action=action)

    p = sub.add_parser("hopf", help="bialgebra-level operations")
    hopf_sub = p.add_subparsers(dest="action", required=True)
    q = hopf_sub.add_parser("check-r")
    q.add_argument("file")
    q.add_argument("--alpha", help="Taft family parameter (4-dim standard basis)")
    q.add_argument("--mode", choices=("semi", "canonical"), default="canonical")
    q.set_defaults(fn=cmd_hopf, parser=q, action="check-r")
    q = hopf_sub.add_parser("embed")
    q.add_argument("file")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--class", dest="cls", type=int, nargs="+", default=None)
    q.set_defaults(fn=cmd_hopf, parser=q, action="embed")
    q = hopf_sub.add_parser("vanish")
    q.add_argument("file")
    q.add_argument("--max", type=int, default=4)
    q.set_defaults(fn=cmd_hopf, parser=q, action="vanish")

    p = add("morita", cmd_morita, help="matrix-algebra dimension comparison")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max", type=int, default=2)

    p = add("verify", cmd_verify, help="structural property suites")
    p.add_argument(
        "--suite",
        choices=("gerstenhaber", "retakh", "schwede", "braided-vanish"),
        required=True,
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)

    add("roundtrip", cmd_roundtrip, help="parse and reserialize canonically")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, args.parser)
    except SchemaError as exc:
        return _fail("input error: %s" % exc)
    except FileNotFoundError as exc:
        return _fail("cannot read %s" % exc.filename)


if __name__ == "__main__":
    sys.exit(main())
