"""Seeded structural property suites, shared by the tests and the CLI.

Each suite returns a report dict with a boolean "pass" plus enough
counters to see what actually ran; failures carry the identity name and
the offending data so a red run is diagnosable.
"""

import random

from . import signs
from .linalg import Matrix
from .algebras import enveloping, regular_bimodule
from .complexes import BarResolution, TrivialBarResolution, cohomology, hom_complex
from .cochains import (
    Cochain,
    HochschildRing,
    bracket,
    circle,
    coboundary,
    cup,
    cup_commutator,
    random_cochain,
)
from .contexts import BimoduleContext
from .extensions import (
    ExtMorphism,
    baer_sum,
    classes_equal,
    cocycle_to_extension,
    cocycles_cohomologous,
    extension_to_cocycle,
    scale_ext,
    splice,
    trivial_extension,
)
from .loops import (
    BoxProduct,
    Loop,
    gamma_components,
    left_collapse,
    loop_bracket,
    right_collapse,
    u_minus,
    u_plus,
)


def _sgn(f, s):
    return f.one if s > 0 else f.neg(f.one)


def gerstenhaber_suite(algebra, seed, trials):
    """Random-cochain identities: fundamental formula, anticommutativity,
    graded Jacobi, the pre-Lie relation, and dg-Leibniz for the cup."""
    f = algebra.field
    rng = random.Random(seed)
    counts = {
        "coboundary_squares": 0,
        "fundamental": 0,
        "anticommutative": 0,
        "jacobi": 0,
        "pre_lie": 0,
        "dg_leibniz": 0,
    }
    failures = []

    def note(name, data):
        failures.append({"identity": name, "at": data})

    for t in range(trials):
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        p = rng.randint(1, 3)
        fc = random_cochain(algebra, m, rng)
        gc = random_cochain(algebra, n, rng)
        hc = random_cochain(algebra, p, rng)

        if not coboundary(coboundary(fc)).is_zero():
            note("coboundary_squares", {"trial": t, "deg": m})
        counts["coboundary_squares"] += 1

        lhs = coboundary(circle(fc, gc))
        rhs = (
            circle(coboundary(fc), gc).scale(_sgn(f, signs.fund_df(n)))
            + circle(fc, coboundary(gc))
            + cup_commutator(gc, fc).scale(_sgn(f, signs.fund_cup(n)))
        )
        if lhs != rhs:
            note("fundamental", {"trial": t, "deg": (m, n)})
        counts["fundamental"] += 1

        anti = bracket(fc, gc) + bracket(gc, fc).scale(
            _sgn(f, signs.bracket_swap(m, n))
        )
        if not anti.is_zero():
            note("anticommutative", {"trial": t, "deg": (m, n)})
        counts["anticommutative"] += 1

        jac = (
            bracket(fc, bracket(gc, hc)).scale(
                _sgn(f, signs.bracket_swap(m, p))
            )
            + bracket(gc, bracket(hc, fc)).scale(
                _sgn(f, signs.bracket_swap(n, m))
            )
            + bracket(hc, bracket(fc, gc)).scale(
                _sgn(f, signs.bracket_swap(p, n))
            )
        )
        if not jac.is_zero():
            note("jacobi", {"trial": t, "deg": (m, n, p)})
        counts["jacobi"] += 1

        assoc1 = circle(circle(fc, gc), hc) - circle(fc, circle(gc, hc))
        assoc2 = circle(circle(fc, hc), gc) - circle(fc, circle(hc, gc))
        if assoc1 != assoc2.scale(_sgn(f, signs.bracket_swap(n, p))):
            note("pre_lie", {"trial": t, "deg": (m, n, p)})
        counts["pre_lie"] += 1

        lhs = coboundary(cup(fc, gc))
        rhs = cup(coboundary(fc), gc) + cup(fc, coboundary(gc)).scale(
            _sgn(f, signs.leibniz_right(m))
        )
        if lhs != rhs:
            note("dg_leibniz", {"trial": t, "deg": (m, n)})
        counts["dg_leibniz"] += 1

    return {
        "trials": trials,
        "identities": counts,
        "failures": failures,
        "pass": not failures,
    }


def retakh_suite(algebra, seed, pairs):
    """Contraction after expansion is the identity on classes in degrees
    1 and 2, and contraction is additive over loop concatenation."""
    rng = random.Random(seed)
    f = algebra.field
    bar = BarResolution(algebra)
    reg = regular_bimodule(algebra)
    ring = HochschildRing(algebra, 3)
    failures = []
    roundtrips = 0
    for n in (1, 2):
        for c in ring.basis_cochains(n):
            ext = cocycle_to_extension(bar, reg, c.mat, n)
            back = u_minus(u_plus(ext))
            if not classes_equal(bar, reg, back, ext):
                failures.append({"identity": "roundtrip", "at": n})
            roundtrips += 1

    added = 0
    for t in range(pairs):
        n = rng.choice((1, 2))
        sp = ring.spaces[n]
        if sp.dim == 0:
            continue

        def rand_class():
            while True:
                coords = [
                    f.of(rng.randint(-2, 2)) if f.kind == "rationals"
                    else rng.randrange(f.p)
                    for _ in range(sp.dim)
                ]
                if any(c != f.zero for c in coords):
                    return ring.representative(n, coords)

        c1, c2 = rand_class(), rand_class()
        e1 = cocycle_to_extension(bar, reg, c1.mat, n)
        e2 = cocycle_to_extension(bar, reg, c2.mat, n)
        l1, l2 = u_plus(e1), u_plus(e2)
        cat = Loop(l1.base, l1.steps + l2.steps)
        summed = u_minus(cat)
        if not classes_equal(bar, reg, summed, baer_sum(e1, e2)):
            failures.append({"identity": "additivity", "at": (t, n)})
        added += 1

    return {
        "roundtrips": roundtrips,
        "additivity_pairs": added,
        "failures": failures,
        "pass": not failures,
    }


def schwede_suite(algebra):
    """Loop bracket against the cochain bracket on every ordered pair of
    degree-1 basis classes; one global sign must fit all pairs."""
    f = algebra.field
    bar = BarResolution(algebra)
    reg = regular_bimodule(algebra)
    ring = HochschildRing(algebra, 2)
    ctx = BimoduleContext(algebra)
    basis = ring.basis_cochains(1)
    sign = _sgn(f, signs.schwede(1))
    all_plus = True
    all_flip = True
    pairs = 0
    for ci in basis:
        for cj in basis:
            xi = cocycle_to_extension(bar, reg, ci.mat, 1)
            zj = cocycle_to_extension(bar, reg, cj.mat, 1)
            got = extension_to_cocycle(bar, loop_bracket(ctx, xi, zj))
            want = bracket(ci, cj).mat.scale(sign)
            if not cocycles_cohomologous(bar, reg, got, want, 1):
                all_plus = False
            if not cocycles_cohomologous(bar, reg, got, want.neg(), 1):
                all_flip = False
            pairs += 1
    return {
        "pairs": pairs,
        "documented_sign_fits_all": all_plus,
        "flipped_sign_fits_all": all_flip,
        "pass": all_plus,
    }


def braided_vanish_suite(b, r=None):
    """Loop brackets of degree-(1, 1) self-extension pairs of the
    trivial module vanish, and the braiding comparison morphism
    satisfies its collapse identities."""
    from .hopf import HopfContext

    f = b.field
    if r is None:
        r = b.r
    assert r is not None, "no R-matrix to braid with"
    ctx = HopfContext(b, r)
    triv = TrivialBarResolution(b.algebra, b.counit)
    k = triv.target
    hcx = hom_complex(triv, k, 3)
    sp = cohomology(hcx, 1)
    reps = [
        Matrix(f, [sp.reps.col(j)], copy=False, ncols=triv.ngens(1))
        for j in range(sp.dim)
    ]
    exts = [cocycle_to_extension(triv, k, rep, 1) for rep in reps]
    zero1 = trivial_extension(b.algebra, k, k, 1)
    failures = []
    pairs = 0
    for xi in exts:
        for zeta in exts:
            out = loop_bracket(ctx, xi, zeta)
            if not classes_equal(triv, k, out, zero1):
                failures.append({"identity": "bracket_vanishes", "at": pairs})
            pairs += 1

    gamma_ok = True
    collapse_ok = True
    involution_ok = True
    for xi in exts:
        for zeta in exts:
            box12 = BoxProduct(ctx, xi, zeta)
            box21 = BoxProduct(ctx, zeta, xi)
            gam = gamma_components(ctx, box12, box21)
            try:
                ExtMorphism(box12.ext, box21.ext, gam)
            except AssertionError:
                gamma_ok = False
            base12 = splice(xi, zeta)
            sgn = _sgn(f, signs.right_comparison(1, 1))
            l12 = left_collapse(box12, base12)
            r21 = right_collapse(box21, scale_ext(base12, sgn))
            if any(
                r21.comps[j] @ gam[j] != l12.comps[j] for j in range(2)
            ):
                collapse_ok = False
            back = gamma_components(ctx, box21, box12)
            for j in range(2):
                comp = back[j] @ gam[j]
                ident = Matrix.identity(f, comp.nrows)
                if comp != ident and comp != ident.scale(f.neg(f.one)):
                    involution_ok = False
    if not gamma_ok:
        failures.append({"identity": "gamma_morphism", "at": "all"})
    if not collapse_ok:
        failures.append({"identity": "r_gamma_equals_l", "at": "all"})
    if not involution_ok:
        failures.append({"identity": "gamma_involution", "at": "all"})
    return {
        "pairs": pairs,
        "gamma_morphism": gamma_ok,
        "r_gamma_equals_l": collapse_ok,
        "gamma_involution_pm_id": involution_ok,
        "failures": failures,
        "pass": not failures,
    }
