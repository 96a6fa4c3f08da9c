import sys
sys.path.insert(0, "src")

from hochschild.linalg import QQ, GF, Matrix, rank
from hochschild.algebras import check_algebra, check_module
from hochschild.complexes import hom_complex, cohomology, cohomology_dims
from hochschild.cochains import Cochain, cup, bracket, HochschildRing
from hochschild.extensions import (
    cocycle_to_extension, trivial_extension, classes_equal,
    cocycles_cohomologous, splice, scale_ext, ExtMorphism,
)
from hochschild.loops import (
    BoxProduct, left_collapse, right_collapse, gamma_components,
    loop_bracket, omega_loop,
)
from hochschild.hopf import (
    Bialgebra, check_bialgebra, check_r_matrix, group_algebra, cyclic_group,
    taft, taft_r_matrix, exterior, trivial_module, boxtimes_modules,
    braiding_map, HopfContext, functor_LB, Embedding, trivial_cup,
)

GF2, GF3, GF5 = GF(2), GF(3), GF(5)

# --- bialgebra checks on the builtins
for f in (GF2, QQ, GF5):
    b = group_algebra(f, cyclic_group(2))
    rep = check_bialgebra(b)
    assert rep["ok"], (f, rep)
b3 = group_algebra(GF3, cyclic_group(3))
assert check_bialgebra(b3)["ok"]
bq3 = group_algebra(QQ, cyclic_group(3))
assert check_bialgebra(bq3)["ok"]
print("group algebras pass")

# wrong antipode S(g) = -g on kZ2 over QQ must fail the antipode law
bz = group_algebra(QQ, cyclic_group(2))
bad_s = Matrix.zeros(QQ, 2, 2)
bad_s.data[0][0] = QQ.one
bad_s.data[1][1] = QQ.neg(QQ.one)
bz_bad = Bialgebra(bz.algebra, bz.comul, bz.counit, antipode=bad_s)
rep = check_bialgebra(bz_bad)
assert not rep["antipode"] and not rep["ok"], rep
print("negated grouplike antipode rejected (as expected)")

# perturbed counit fails
bz2 = group_algebra(GF5, cyclic_group(2))
bad_counit = [GF5.one, GF5.of(2)]
bz2_bad = Bialgebra(bz2.algebra, bz2.comul, bad_counit, antipode=bz2.antipode)
rep = check_bialgebra(bz2_bad)
assert not rep["ok"], rep
print("perturbed counit rejected")

# --- taft
t = taft(GF5)
rep = check_bialgebra(t)
assert rep["ok"], rep
print("taft bialgebra passes:", rep)
for a in (0, 1, 2):
    r = taft_r_matrix(t, GF5.of(a))
    rrep = check_r_matrix(t, r)
    assert rrep["canonical"], (a, rrep)
    print("taft r_%d:" % a, rrep)
# r = 1x1 is NOT an R-matrix for taft
r_triv = [GF5.zero] * 16
r_triv[0] = GF5.one
rrep = check_r_matrix(t, r_triv)
assert not rrep["intertwines_comul"], rrep
print("taft with trivial r rejected:", rrep["intertwines_comul"])

# group algebra r = 1x1 passes everything
rep = check_r_matrix(b3, b3.r)
assert rep["semi"] and rep["canonical"], rep
print("cocommutative trivial r passes")

# --- exterior
e1 = exterior(QQ, 1)
rep = check_bialgebra(e1)
assert rep["ok"], rep
e2 = exterior(QQ, 2)
rep2 = check_bialgebra(e2)
assert rep2["ok"], rep2
# without the parity data the plain multiplicativity fails over QQ
e1_plain = Bialgebra(e1.algebra, e1.comul, e1.counit, antipode=e1.antipode)
rep = check_bialgebra(e1_plain)
assert not rep["comul_multiplicative"], rep
print("exterior graded passes; plain multiplicativity fails as expected")
# over GF(2) the plain structure is fine
e1f2 = exterior(GF2, 1)
e1f2_plain = Bialgebra(e1f2.algebra, e1f2.comul, e1f2.counit, antipode=e1f2.antipode)
assert check_bialgebra(e1f2_plain)["ok"]
print("exterior over GF(2) is a plain bialgebra")

# --- embedding over kZ2 / GF(2)
b = group_algebra(GF2, cyclic_group(2))
emb = Embedding(b)
hcx = emb.trivial_cochain_complex(4)
hdims = cohomology_dims(hcx, 3)
print("H^*(kZ2, k) dims:", hdims)
assert hdims == [1, 1, 1, 1]

ring = HochschildRing(b.algebra, 4)
print("HH dims:", ring.dims())

spaces = [cohomology(hcx, n) for n in range(4)]
h_reps = {}
for n in range(4):
    h_reps[n] = [
        emb.cocycle_matrix(spaces[n].reps.col(j), n)
        for j in range(spaces[n].dim)
    ]

images = {}
for n in range(4):
    images[n] = [emb.embed(p, n) for p in h_reps[n]]
    for img in images[n]:
        cls = ring.class_of(Cochain(b.algebra, n, img))
        assert cls is not None
        assert any(c != GF2.zero for c in cls), (n, "image is a coboundary")
print("embedded classes n<=3 are nonzero in HH")

# unit to unit
assert images[0][0].col(0) == list(b.algebra.unit)
print("unit maps to unit")

# multiplicativity on total degree <= 3
for m in range(0, 3):
    for n in range(0, 3):
        if m + n > 3 or m + n == 0:
            continue
        pm, pn = h_reps[m][0], h_reps[n][0]
        cupped = trivial_cup(b, pm, m, pn, n)
        lhs = emb.embed(cupped, m + n)
        rhs = cup(
            Cochain(b.algebra, m, images[m][0]),
            Cochain(b.algebra, n, images[n][0]),
        )
        assert cocycles_cohomologous(emb.bar, emb.reg, lhs, rhs.mat, m + n), (m, n)
print("embedding is multiplicative on total degree <= 3")

# --- functor_LB rejects the exterior algebra over QQ (not plainly a bialgebra)
emb9 = Embedding(exterior(QQ, 1))
hcx9 = emb9.trivial_cochain_complex(3)
sp9 = cohomology(hcx9, 1)
assert sp9.dim == 1
phi9 = emb9.cocycle_matrix(sp9.reps.col(0), 1)
try:
    emb9.embed(phi9, 1)
    raise SystemExit("expected the exterior embedding to fail")
except AssertionError as exc:
    print("exterior/QQ embedding rejected:", str(exc)[:80])

# --- braided context over kZ2 / GF(2), r = 1x1
ctx = HopfContext(b)
k = emb.k
phi1 = h_reps[1][0]
xi = cocycle_to_extension(emb.triv, k, phi1, 1)
zeta = cocycle_to_extension(emb.triv, k, phi1, 1)
lb = loop_bracket(ctx, xi, zeta)
triv1 = trivial_extension(b.algebra, k, k, 1)
assert classes_equal(emb.triv, k, lb, triv1)
print("loop bracket of the degree-(1,1) pair vanishes (braided vanishing)")

# gamma identities
box12 = BoxProduct(ctx, xi, zeta)
box21 = BoxProduct(ctx, zeta, xi)
base12 = splice(xi, zeta)
base21 = splice(zeta, xi)
sgn = GF2.one
gam = gamma_components(ctx, box12, box21)
mor = ExtMorphism(box12.ext, box21.ext, gam)
print("gamma is a morphism of extensions")
l12 = left_collapse(box12, base12)
r21 = right_collapse(box21, scale_ext(base12, sgn))
for j in range(2):
    assert r21.comps[j] @ gam[j] == l12.comps[j], ("R.gamma != L", j)
print("R o gamma = L")
gam2 = gamma_components(ctx, box21, box12)
for j in range(2):
    comp = gam2[j] @ gam[j]
    ident = Matrix.identity(GF2, comp.nrows)
    assert comp == ident or comp == ident.scale(GF2.neg(GF2.one)), j
print("gamma o gamma = +-id")

# --- now a case with visible signs: taft over GF(5) with r_1
tb = taft(GF5)
temb = Embedding(tb)
thcx = temb.trivial_cochain_complex(3)
tdims = cohomology_dims(thcx, 2)
print("H^*(H4, k) dims:", tdims)
tspaces = [cohomology(thcx, n) for n in range(3)]
t_reps = {
    n: [
        temb.cocycle_matrix(tspaces[n].reps.col(j), n)
        for j in range(tspaces[n].dim)
    ]
    for n in range(1, 3)
}
tctx = HopfContext(tb, taft_r_matrix(tb, GF5.one))
assert not t_reps[1] and len(t_reps[2]) == 1
txi = cocycle_to_extension(temb.triv, temb.k, t_reps[2][0], 2)
tb12 = BoxProduct(tctx, txi, txi)
tb21 = BoxProduct(tctx, txi, txi)
tg = gamma_components(tctx, tb12, tb21)
tm = ExtMorphism(tb12.ext, tb21.ext, tg)
print("taft gamma at (2,2) is a morphism")
tbase = splice(txi, txi)
tl = left_collapse(tb12, tbase)
tr = right_collapse(tb21, tbase)  # sgn_mn = +1 at (2,2)
ok_plus = all(tr.comps[j] @ tg[j] == tl.comps[j] for j in range(4))
ok_minus = all(
    tr.comps[j] @ tg[j] == tl.comps[j].scale(GF5.neg(GF5.one))
    for j in range(4)
)
print("taft gamma R.gamma vs L: plus=%s minus=%s" % (ok_plus, ok_minus))
tlb = loop_bracket(tctx, txi, txi)
ttriv = trivial_extension(tb.algebra, temb.k, temb.k, 3)
print("taft degree-(2,2) loop bracket vanishes:",
      classes_equal(temb.triv, temb.k, tlb, ttriv))

# embedded bracket vanishing at the cochain level
timg = temb.embed(t_reps[2][0], 2)
tring = HochschildRing(tb.algebra, 3)
tc = Cochain(tb.algebra, 2, timg)
cls = tring.class_of(tc)
assert any(c != GF5.zero for c in cls), "embedded taft class is zero"
br = bracket(tc, tc)
zero3 = Cochain.zero(tb.algebra, 3)
assert tring.classes_agree(br, zero3), "embedded self bracket nonzero"
print("taft embedded degree-2 class nonzero; self bracket vanishes")

print("ALL OK")
