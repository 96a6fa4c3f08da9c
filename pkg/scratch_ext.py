import sys
sys.path.insert(0, "src")

from hochschild.linalg import GF, QQ, Matrix
from hochschild.algebras import dual_numbers, enveloping, regular_bimodule
from hochschild.complexes import BarResolution
from hochschild.cochains import HochschildRing, Cochain
from hochschild.extensions import (
    ExtMorphism, baer_sum, BaerFunctor,
    check_admissible, classes_equal, cocycle_to_extension,
    cocycles_cohomologous, extension_to_cocycle,
    factor_morphism, neg_ext, pushout_ext,
    scale_ext, splice, trivial_extension,
)

for fld in (GF(2), QQ, GF(5)):
    print("== field", fld)
    a = dual_numbers(fld)
    env = enveloping(a)
    bar = BarResolution(a)
    reg = regular_bimodule(a)
    ring = HochschildRing(a, 5)

    for n in (1, 2):
        basis = ring.basis_cochains(n)
        print("  HH^%d dim %d" % (n, len(basis)))
        for c in basis:
            gm = c.mat
            ext = cocycle_to_extension(bar, reg, gm, n)
            check_admissible(ext)
            back = extension_to_cocycle(bar, ext)
            assert cocycles_cohomologous(bar, reg, gm, back, n), "roundtrip"
            tr = trivial_extension(env, reg, reg, n)
            check_admissible(tr)
            s = baer_sum(ext, neg_ext(ext))
            check_admissible(s)
            assert classes_equal(bar, reg, s, tr), "xi + (-xi) = 0"
            s2 = baer_sum(ext, tr)
            assert classes_equal(bar, reg, s2, ext), "xi + 0 = xi"
            if fld.p != 2:
                s3 = baer_sum(ext, ext)
                d = scale_ext(ext, fld.of(2))
                assert classes_equal(bar, reg, s3, d), "xi + xi = 2 xi"
        print("  degree", n, "roundtrip + baer ok")

    b1 = ring.basis_cochains(1)
    e1 = cocycle_to_extension(bar, reg, b1[0].mat, 1)
    sp = splice(e1, e1)
    check_admissible(sp)
    assert sp.n == 2
    c2 = extension_to_cocycle(bar, sp)
    from hochschild.cochains import cup
    cupc = cup(b1[0], b1[0])
    agree = cocycles_cohomologous(bar, reg, c2, cupc.mat, 2)
    print("  splice vs cup agree:", agree)

    b2 = ring.basis_cochains(2)
    if b2:
        e2 = cocycle_to_extension(bar, reg, b2[0].mat, 2)
        idm = ExtMorphism.identity(e2)
        chi, iota, pi, q = factor_morphism(idm)
        check_admissible(chi)
        po, p1, p2 = pushout_ext(iota, iota)
        check_admissible(po)
        print("  factor + pushout ok, chi dims",
              [m.dim for m in chi.mids], "po dims", [m.dim for m in po.mids])
        fun = BaerFunctor(neg_ext(e2))
        pair = fun.apply_object(e2)
        tm = fun.apply_morphism(idm, pair, pair)
        tm.validate()
        print("  baer transport ok, sum dims", [m.dim for m in pair[0].mids])

print("ALL OK")
