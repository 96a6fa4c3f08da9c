"""Verify loop_bracket(xi, zeta) ~ (-1)^(m+1) {xi, zeta}, m = deg xi."""

from hochschild.algebras import (
    dual_numbers, truncated_polynomial, regular_bimodule,
)
from hochschild.linalg import QQ, GF
from hochschild.complexes import BarResolution
from hochschild.cochains import HochschildRing, bracket, sq
from hochschild.contexts import BimoduleContext
from hochschild.extensions import (
    cocycle_to_extension, extension_to_cocycle, cocycles_cohomologous,
)
from hochschild.loops import loop_bracket, loop_sq


def run(name, a, degrees, top):
    print("==", name)
    reg = regular_bimodule(a)
    bar = BarResolution(a)
    ring = HochschildRing(a, top)
    ctx = BimoduleContext(a)
    for (m, n) in degrees:
        want_sign = 1 if (m + 1) % 2 == 0 else -1
        for i, ci in enumerate(ring.basis_cochains(m)):
            for j, cj in enumerate(ring.basis_cochains(n)):
                want = bracket(ci, cj).mat.scale(want_sign)
                xi = cocycle_to_extension(bar, reg, ci.mat, m)
                zj = cocycle_to_extension(bar, reg, cj.mat, n)
                br = loop_bracket(ctx, xi, zj)
                got = extension_to_cocycle(bar, br)
                ok = cocycles_cohomologous(bar, reg, got, want, m + n - 1)
                nz = not cocycles_cohomologous(
                    bar, reg, got, want.scale(0), m + n - 1)
                print("  (m,n)=(%d,%d) pair (%d,%d): law %s (nonzero %s)"
                      % (m, n, i, j, ok, nz))
                assert ok


def run_sq(name, a, m, top):
    print("== sq", name)
    reg = regular_bimodule(a)
    bar = BarResolution(a)
    ring = HochschildRing(a, top)
    ctx = BimoduleContext(a)
    want_sign = 1 if (m + 1) % 2 == 0 else -1
    for i, ci in enumerate(ring.basis_cochains(m)):
        want = sq(ci).mat.scale(want_sign)
        xi = cocycle_to_extension(bar, reg, ci.mat, m)
        s = loop_sq(ctx, xi)
        got = extension_to_cocycle(bar, s)
        ok = cocycles_cohomologous(bar, reg, got, want, 2 * m - 1)
        nz = not cocycles_cohomologous(
            bar, reg, got, want.scale(0), 2 * m - 1)
        print("  m=%d class %d: law %s (nonzero %s)" % (m, i, ok, nz))
        assert ok


run("dual/QQ", dual_numbers(QQ), [(1, 2), (2, 1), (2, 2)], 5)
run("dual/GF5", dual_numbers(GF(5)), [(1, 2), (2, 1)], 5)
run("trunc3/GF5", truncated_polynomial(GF(5), 3), [(1, 1), (1, 2)], 4)
run_sq("trunc3/GF5", truncated_polynomial(GF(5), 3), 2, 5)
run_sq("dual/GF2", dual_numbers(GF(2)), 2, 5)
print("DONE")
