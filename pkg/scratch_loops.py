import sys
sys.path.insert(0, "src")

from hochschild.linalg import GF, QQ, Matrix
from hochschild.algebras import dual_numbers, enveloping, regular_bimodule
from hochschild.complexes import BarResolution
from hochschild.cochains import HochschildRing, bracket
from hochschild.extensions import (
    baer_sum, check_admissible, classes_equal, cocycle_to_extension,
    cocycles_cohomologous, extension_to_cocycle, neg_ext,
    trivial_extension,
)
from hochschild.loops import (
    Loop, canonical_null_path, loop_bracket, omega_loop, rebase_loop,
    reduce_loop, u_minus, u_plus, u_plus_hom,
)
from hochschild.contexts import BimoduleContext

for fld in (GF(2), QQ, GF(5)):
    print("== field", fld)
    a = dual_numbers(fld)
    env = enveloping(a)
    bar = BarResolution(a)
    reg = regular_bimodule(a)
    ring = HochschildRing(a, 5)

    # u_minus . u_plus = identity on classes, n = 1 and 2
    for n in (1, 2):
        for c in ring.basis_cochains(n):
            ext = cocycle_to_extension(bar, reg, c.mat, n)
            lp = u_plus(ext)
            back = u_minus(lp)
            assert back.n == n
            assert classes_equal(bar, reg, back, ext), "u- o u+ != id"
        print("  u-/u+ roundtrip ok at degree", n)

    # additivity of u_minus: concatenated loops add classes
    b1 = ring.basis_cochains(1)
    e1 = cocycle_to_extension(bar, reg, b1[0].mat, 1)
    e1b = cocycle_to_extension(bar, reg, b1[-1].mat, 1)
    la, lb = u_plus(e1), u_plus(e1b)
    cat = Loop(la.base, la.steps + lb.steps)
    summed = u_minus(cat)
    expect = baer_sum(e1, e1b)
    assert classes_equal(bar, reg, summed, expect), "u- not additive"
    print("  u- additive ok")

    # degree-0 case: automorphism loop recovers the map
    g = Matrix.zeros(fld, reg.dim, reg.dim)
    g.data[1][0] = fld.one  # multiplication by x, a bimodule map A -> A
    lp0 = u_plus_hom(env, reg, reg, g)
    h = u_minus(lp0)
    assert h == g, "degree-0 roundtrip"
    print("  degree-0 roundtrip ok")

    # canonical null path sanity: rebase the trivial loop, get zero
    tau = cocycle_to_extension(bar, reg, ring.basis_cochains(2)[0].mat, 2)
    triv = Loop(tau, [])
    reb = rebase_loop(triv)
    out = u_minus(reb)
    zero1 = trivial_extension(env, reg, reg, 1)
    assert classes_equal(bar, reg, out, zero1), "trivial loop not null"
    print("  trivial loop contracts to zero")

    # loop bracket vs cochain bracket on HH^1 x HH^1
    ctx = BimoduleContext(a)
    pairs = 0
    for ci in b1:
        for cj in b1:
            xi = cocycle_to_extension(bar, reg, ci.mat, 1)
            zj = cocycle_to_extension(bar, reg, cj.mat, 1)
            br = loop_bracket(ctx, xi, zj)
            got = extension_to_cocycle(bar, br)
            want = bracket(ci, cj).mat
            same = cocycles_cohomologous(bar, reg, got, want, 1)
            nsame = cocycles_cohomologous(
                bar, reg, got, want.neg(), 1
            )
            print("   [%d,%d]: agree %s, agree-with-sign-flip %s"
                  % (b1.index(ci), b1.index(cj), same, nsame))
            pairs += 1
    print("  bracket pairs compared:", pairs)

print("ALL OK")
