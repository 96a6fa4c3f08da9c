"""Loops of extension morphisms and the degree-lowering bracket.

A loop is a closed zig-zag of morphisms between n-extensions with fixed
ends.  Any loop contracts to a two-arrow roof; based at the split
extension, roofs are converted to classes one degree down (u_minus) and
classes are converted to loops (u_plus).  The bracket of two extension
classes arises from the loop comparing the two ways of resolving their
tensor product into spliced composites, rebased to the split extension.
"""

from .linalg import Matrix, kernel_basis, solve_many
from .algebras import direct_sum_modules, submodule, quotient_module
from .extensions import (
    BaerFunctor,
    ExtMorphism,
    Extension,
    check_admissible,
    cocycle_extension_data,
    ext_same,
    factor_morphism,
    find_module_map,
    neg_ext,
    pushout_ext,
    scale_ext,
    splice,
    translate_ends,
    trivial_extension,
)


class Loop:
    """Closed zig-zag based at an extension.

    steps[i] = (morphism, forward).  A forward step runs source to
    target, a backward step runs target to source; consecutive steps
    share their meeting object and the walk returns to the base.
    """

    def __init__(self, base, steps, check=True):
        self.base = base
        self.steps = list(steps)
        if check:
            self.validate()

    def validate(self):
        cur = self.base
        for mor, fwd in self.steps:
            src = mor.source if fwd else mor.target
            nxt = mor.target if fwd else mor.source
            assert ext_same(cur, src), "loop steps do not chain"
            cur = nxt
        assert ext_same(cur, self.base), "loop does not close"
        return True

    def reversed_loop(self):
        steps = [(m, not f) for m, f in reversed(self.steps)]
        return Loop(self.base, steps, check=False)


def _compose_run(steps):
    """Collapse adjacent same-direction steps into composites."""
    out = []
    for mor, fwd in steps:
        if out and out[-1][1] == fwd:
            prev = out[-1][0]
            out[-1] = (prev.then(mor) if fwd else mor.then(prev), fwd)
        else:
            out.append((mor, fwd))
    return out


def _morphism_inverse(mor):
    f = mor.source.algebra.field
    comps = []
    for c in mor.comps:
        assert c.nrows == c.ncols
        inv = solve_many(c, Matrix.identity(f, c.nrows))
        assert inv is not None, "morphism is not invertible"
        comps.append(inv)
    return ExtMorphism(mor.target, mor.source, comps, check=False)


def reduce_loop(loop):
    """Contract a loop to a roof: two morphisms base -> middle.

    Returns (alpha, beta) with the loop equal to alpha forward then
    beta backward.  Valleys (a backward then a forward step out of a
    shared object) are removed by factoring the backward arrow through
    a split epimorphism and pushing out, which shortens the walk.
    """
    base = loop.base
    f = base.algebra.field
    if base.n == 1:
        # every morphism of 1-extensions with fixed ends is invertible
        comp = Matrix.identity(f, base.mids[0].dim)
        for mor, fwd in loop.steps:
            c = mor.comps[0] if fwd else _morphism_inverse(mor).comps[0]
            comp = c @ comp
        alpha = ExtMorphism(base, base, [comp])
        return alpha, ExtMorphism.identity(base)
    steps = _compose_run(loop.steps)
    while True:
        if not steps:
            idm = ExtMorphism.identity(base)
            return idm, idm
        if len(steps) == 1:
            mor, fwd = steps[0]
            idm = ExtMorphism.identity(base)
            return (mor, idm) if fwd else (idm, mor)
        if len(steps) == 2 and steps[0][1] and not steps[1][1]:
            Loop(base, steps)  # re-validate the surgered walk
            return steps[0][0], steps[1][0]
        # find a valley: backward then forward
        pos = None
        for i in range(len(steps) - 1):
            if (not steps[i][1]) and steps[i + 1][1]:
                pos = i
                break
        assert pos is not None, "no valley in a non-roof loop"
        m1 = steps[pos][0]  # into the left shoulder
        m2 = steps[pos + 1][0]  # out to the right shoulder
        chi, iota, pi, q = factor_morphism(m1)
        _, p1, p2 = pushout_ext(iota, m2)
        repl = [(q, True), (p1, True), (p2, False)]
        steps = _compose_run(steps[:pos] + repl + steps[pos + 2 :])


def u_plus(ext, a=None):
    """Loop at the split (n+1)-extension representing an n-class."""
    f = ext.algebra.field
    if a is None:
        a = Matrix.identity(f, ext.x.dim)
    n = ext.n
    x, y = ext.x, ext.y
    xx = direct_sum_modules([x, x])
    ae0 = a @ ext.maps[-1]
    m_a = ae0.vstack(ae0.neg())
    fold = Matrix.identity(f, x.dim).hstack(Matrix.identity(f, x.dim))
    mids = ext.mids + [xx]
    maps = ext.maps[:-1] + [m_a, fold]
    plus = Extension(ext.algebra, n + 1, y, x, mids, maps)
    check_admissible(plus)
    sigma = trivial_extension(ext.algebra, y, x, n + 1)
    incl1 = Matrix.zeros(f, 2 * x.dim, x.dim)
    incl2 = Matrix.zeros(f, 2 * x.dim, x.dim)
    for i in range(x.dim):
        incl1.data[i][i] = f.one
        incl2.data[x.dim + i][i] = f.one
    comps_a = []
    comps_b = []
    for i in range(n + 1):
        if i == 0:
            comps_a.append(ext.maps[0])
            comps_b.append(ext.maps[0])
        elif i == n:
            comps_a.append(incl1)
            comps_b.append(incl2)
        else:
            comps_a.append(Matrix.zeros(f, mids[i].dim, 0))
            comps_b.append(Matrix.zeros(f, mids[i].dim, 0))
    alpha = ExtMorphism(sigma, plus, comps_a)
    beta = ExtMorphism(sigma, plus, comps_b)
    return Loop(sigma, [(alpha, True), (beta, False)])


def u_plus_hom(algebra, y, x, g, a=None):
    """Degree-zero case: a module map X -> Y becomes a loop at the
    split 1-extension, via a unipotent automorphism."""
    f = algebra.field
    if a is None:
        a = Matrix.identity(f, x.dim)
    sigma = trivial_extension(algebra, y, x, 1)
    ga = g @ a
    comp = Matrix.identity(f, y.dim + x.dim)
    for i in range(y.dim):
        for j in range(x.dim):
            comp.data[i][y.dim + j] = ga.data[i][j]
    auto = ExtMorphism(sigma, sigma, [comp])
    return Loop(sigma, [(auto, True)])


def u_minus(loop, a=None):
    """Inverse of u_plus: contract a loop at the split (n+1)-extension
    to an n-class (an extension for n >= 1, a module map for n = 0)."""
    sigma = loop.base
    f = sigma.algebra.field
    n1 = sigma.n
    n = n1 - 1
    x, y = sigma.x, sigma.y
    if a is None:
        a = Matrix.identity(f, x.dim)
    alpha, beta = reduce_loop(loop)
    mid = alpha.target
    if n == 0:
        gamma = _morphism_inverse(beta).comps[0] @ alpha.comps[0]
        h = Matrix.zeros(f, y.dim, x.dim)
        for i in range(y.dim):
            for j in range(x.dim):
                h.data[i][j] = gamma.data[i][y.dim + j]
        ainv = solve_many(a, Matrix.identity(f, x.dim))
        return h @ ainv
    # difference of the bottom components lands in ker(e_0)
    kb = kernel_basis(mid.maps[-1])
    kmod, incl_k = submodule(mid.mids[-1], kb)
    wdiff = alpha.comps[-1] - beta.comps[-1]
    wminus = solve_many(incl_k, wdiff)
    assert wminus is not None, "roof legs do not differ inside the kernel"
    e1 = mid.maps[-2]
    ebar = solve_many(incl_k, e1)
    assert ebar is not None
    # pullback of the corestricted differential along the twisted wminus
    wa = wminus @ a
    top_mod = mid.mids[-2]
    cond = Matrix.zeros(f, kmod.dim, top_mod.dim + x.dim)
    for i in range(kmod.dim):
        for j in range(top_mod.dim):
            cond.data[i][j] = ebar.data[i][j]
        for j in range(x.dim):
            cond.data[i][top_mod.dim + j] = f.neg(wa.data[i][j])
    big = direct_sum_modules([top_mod, x])
    pmod, incl_p = submodule(big, kernel_basis(cond))
    bottom = Matrix(
        f,
        [incl_p.data[top_mod.dim + i] for i in range(x.dim)],
        ncols=incl_p.ncols,
    )
    prev = mid.maps[-3]
    lifted = Matrix.zeros(f, big.dim, prev.ncols)
    for i in range(prev.nrows):
        for j in range(prev.ncols):
            lifted.data[i][j] = prev.data[i][j]
    into_p = solve_many(incl_p, lifted)
    assert into_p is not None, "complex does not land in the pullback"
    mids = mid.mids[: n1 - 2] + [pmod]
    maps = list(mid.maps[: n1 - 2]) + [into_p, bottom]
    out = Extension(sigma.algebra, n, y, x, mids, maps)
    check_admissible(out)
    return out


def canonical_null_path(tau):
    """Path of morphisms from the split extension to tau [+] (-tau).

    Returns (sigma, path, fun, base_pair): path is a list of loop steps
    starting at sigma and ending at the Baer sum, fun is the Baer
    endofunctor (-) [+] (-tau), and base_pair its value on tau.
    """
    f = tau.algebra.field
    n = tau.n
    y, x = tau.y, tau.x
    fun = BaerFunctor(neg_ext(tau))
    base_pair = fun.apply_object(tau)
    xi_add, recipe = base_pair
    sigma = trivial_extension(tau.algebra, y, x, n)
    if n == 1:
        g = xi_add.maps[-1]
        s = find_module_map(
            xi_add.mids[0],
            y,
            [(Matrix.identity(f, y.dim), xi_add.maps[0],
              Matrix.identity(f, y.dim))],
        )
        assert s is not None, "no retraction onto Y"
        u = ExtMorphism(xi_add, sigma, [s.vstack(g)])
        return sigma, [(u, False)], fun, base_pair
    # kernel of the bottom map of tau
    e0 = tau.maps[-1]
    kmod, incl_k = submodule(tau.mids[-1], kernel_basis(e0))
    kk = direct_sum_modules([kmod, kmod])
    e0dim = tau.mids[-1].dim
    # K + K -> P, (k, k') -> (k, k', 0)
    raw = Matrix.zeros(f, 2 * e0dim + x.dim, 2 * kmod.dim)
    for i in range(e0dim):
        for j in range(kmod.dim):
            raw.data[i][j] = incl_k.data[i][j]
            raw.data[e0dim + i][kmod.dim + j] = incl_k.data[i][j]
    iota_p = solve_many(recipe.incl_p, raw)
    assert iota_p is not None
    pmod = xi_add.mids[-1]
    # pushout of iota_p along the fold K + K -> K
    bigq = direct_sum_modules([kmod, pmod])
    rels = []
    for side in range(2):
        for w in range(kmod.dim):
            col = [f.one if i == w else f.zero for i in range(kmod.dim)]
            src = w if side == 0 else kmod.dim + w
            col += [f.neg(iota_p.data[i][src]) for i in range(pmod.dim)]
            rels.append(col)
    wmat = Matrix.from_cols(f, rels, nrows=bigq.dim)
    qt, proj_qt, sect_qt = quotient_module(bigq, wmat)
    # induced map to X and a module section of it
    e0p = xi_add.maps[-1]
    gt_raw = Matrix.zeros(f, x.dim, bigq.dim)
    for i in range(x.dim):
        for j in range(pmod.dim):
            gt_raw.data[i][kmod.dim + j] = e0p.data[i][j]
    assert (gt_raw @ wmat).is_zero()
    gt = gt_raw @ sect_qt
    r = find_module_map(
        x, qt, [(gt, Matrix.identity(f, x.dim), Matrix.identity(f, x.dim))]
    )
    assert r is not None, "no module section of the collapsed bottom"
    # E_1 -> P by (e_1 u, 0, 0), then into the pushout
    e1 = tau.maps[n - 1]
    j1_raw = Matrix.zeros(f, 2 * e0dim + x.dim, e1.ncols)
    for i in range(e1.nrows):
        for j in range(e1.ncols):
            j1_raw.data[i][j] = e1.data[i][j]
    j1 = solve_many(recipe.incl_p, j1_raw)
    assert j1 is not None
    v = proj_qt @ _incl_into(f, bigq.dim, kmod.dim, pmod.dim)
    mids = list(tau.mids[: n - 1]) + [qt]
    maps = list(tau.maps[: n - 1]) + [v @ j1, gt]
    xi_tilde = Extension(tau.algebra, n, y, x, mids, maps)
    check_admissible(xi_tilde)
    # first leg: the sum collapses onto xi_tilde
    t_raw = Matrix.zeros(
        f, tau.mids[0].dim, y.dim + 2 * tau.mids[0].dim
    )
    en = tau.maps[0]
    for i in range(tau.mids[0].dim):
        for j in range(y.dim):
            t_raw.data[i][j] = en.data[i][j]
        t_raw.data[i][y.dim + i] = f.one
        t_raw.data[i][y.dim + tau.mids[0].dim + i] = f.one
    t = t_raw @ recipe.sect_q
    assert (t @ recipe.proj_q) == t_raw
    comps = [t]
    for i in range(1, n - 1):
        idm = Matrix.identity(f, tau.mids[i].dim)
        comps.append(idm.hstack(idm))
    comps.append(v)
    u1 = ExtMorphism(xi_add, xi_tilde, comps)
    # second leg: the split extension includes via the ends
    comps2 = [tau.maps[0]]
    for i in range(1, n - 1):
        comps2.append(Matrix.zeros(f, tau.mids[i].dim, 0))
    comps2.append(r)
    u2 = ExtMorphism(sigma, xi_tilde, comps2)
    path = [(u2, True), (u1, False)]
    return sigma, path, fun, base_pair


def _incl_into(f, total, offset, dim):
    out = Matrix.zeros(f, total, dim)
    for i in range(dim):
        out.data[offset + i][i] = f.one
    return out


def rebase_loop(loop):
    """Conjugate a loop to the split extension of the same degree."""
    tau = loop.base
    sigma, path, fun, base_pair = canonical_null_path(tau)
    cache = [(tau, base_pair)]

    def pair_of(obj):
        for known, pair in cache:
            if known is obj or ext_same(known, obj):
                return pair
        pair = fun.apply_object(obj)
        cache.append((obj, pair))
        return pair

    steps = []
    for mor, fwd in loop.steps:
        sp = pair_of(mor.source)
        tp = pair_of(mor.target)
        steps.append((fun.apply_morphism(mor, sp, tp), fwd))
    back = [(m, not f_) for m, f_ in reversed(path)]
    return Loop(sigma, path + steps + back)


class BoxProduct:
    """Componentwise tensor of two extensions of the unit by the unit.

    Holds the resulting extension (ends translated to the unit along
    the unitor) and the summand layout of every middle term.
    """

    __slots__ = (
        "ctx", "xi", "zeta", "m", "n", "ext",
        "summands", "offsets", "tobj", "t_unit", "lam_unit",
    )

    def __init__(self, ctx, xi, zeta):
        self.ctx = ctx
        self.xi = xi
        self.zeta = zeta
        self.m = xi.n
        self.n = zeta.n
        self._build()

    def e_term(self, p):
        return self.xi.y if p == self.m else self.xi.mids[self.m - 1 - p]

    def f_term(self, q):
        return self.zeta.y if q == self.n else self.zeta.mids[self.n - 1 - q]

    def e_map(self, p):
        return self.xi.maps[self.m - p]

    def f_map(self, q):
        return self.zeta.maps[self.n - q]

    def _build(self):
        ctx = self.ctx
        f = ctx.field
        m, n = self.m, self.n
        self.tobj = {}
        for p in range(m + 1):
            for q in range(n + 1):
                self.tobj[(p, q)] = ctx.tensor(self.e_term(p), self.f_term(q))
        self.summands = {}
        self.offsets = {}
        dims = {}
        for i in range(m + n + 1):
            parts = [
                (p, i - p)
                for p in range(max(0, i - n), min(i, m) + 1)
            ]
            self.summands[i] = parts
            offs = {}
            total = 0
            for pq in parts:
                offs[pq] = total
                total += self.tobj[pq].module.dim
            self.offsets[i] = offs
            dims[i] = total
        terms = {
            i: direct_sum_modules(
                [self.tobj[pq].module for pq in self.summands[i]]
            )
            for i in range(m + n + 1)
        }
        sign = {0: f.one, 1: f.neg(f.one)}
        diffs = {}
        for i in range(1, m + n + 1):
            mat = Matrix.zeros(f, dims[i - 1], dims[i])
            for (p, q) in self.summands[i]:
                off_s = self.offsets[i][(p, q)]
                src = self.tobj[(p, q)]
                if p >= 1:
                    tgt = self.tobj[(p - 1, q)]
                    blk = ctx.tensor_map(
                        src, tgt, self.e_map(p),
                        Matrix.identity(f, self.f_term(q).dim),
                    )
                    off_t = self.offsets[i - 1][(p - 1, q)]
                    _add_block(mat, blk, off_t, off_s, f, f.one)
                if q >= 1:
                    tgt = self.tobj[(p, q - 1)]
                    blk = ctx.tensor_map(
                        src, tgt,
                        Matrix.identity(f, self.e_term(p).dim),
                        self.f_map(q),
                    )
                    off_t = self.offsets[i - 1][(p, q - 1)]
                    _add_block(mat, blk, off_t, off_s, f, sign[p % 2])
            diffs[i] = mat
        # bottom: into the tensor square of the unit, then the unitor
        self.t_unit = ctx.tensor(ctx.unit, ctx.unit)
        self.lam_unit = ctx.left_unitor(self.t_unit)
        bot = ctx.tensor_map(
            self.tobj[(0, 0)], self.t_unit, self.e_map(0), self.f_map(0)
        )
        mids = [terms[i] for i in range(m + n - 1, -1, -1)]
        maps = [diffs[m + n]] + [diffs[i] for i in range(m + n - 1, 0, -1)]
        maps.append(bot)
        raw = Extension(
            ctx.algebra, m + n, terms[m + n], self.t_unit.module, mids, maps
        )
        lam_inv = ctx.unitor_inverse(self.t_unit, self.lam_unit)
        self.ext = translate_ends(
            raw, ctx.unit, lam_inv, ctx.unit, self.lam_unit
        )
        check_admissible(self.ext)


def _add_block(mat, blk, roff, coff, f, c):
    for i in range(blk.nrows):
        for j in range(blk.ncols):
            v = blk.data[i][j]
            if v != f.zero:
                mat.data[roff + i][coff + j] = f.add(
                    mat.data[roff + i][coff + j], f.mul(c, v)
                )


def left_collapse(box, target):
    """Morphism from the box product onto xi spliced over zeta.

    In low degrees the xi factor is collapsed by its bottom map and the
    unit absorbed; in high degrees the zeta factor is the unit already.
    """
    ctx = box.ctx
    f = ctx.field
    m, n = box.m, box.n
    comps = []
    for j in range(m + n):
        i = m + n - 1 - j  # mids[j] sits in degree i
        tgt_dim = target.mids[j].dim
        src_dim = sum(
            box.tobj[pq].module.dim for pq in box.summands[i]
        )
        comp = Matrix.zeros(f, tgt_dim, src_dim)
        if i < n:
            pq = (0, i)
            if pq in box.offsets[i]:
                tob = box.tobj[pq]
                t_unit_f = ctx.tensor(ctx.unit, box.f_term(i))
                step = ctx.tensor_map(
                    tob, t_unit_f, box.e_map(0),
                    Matrix.identity(f, box.f_term(i).dim),
                )
                blk = ctx.left_unitor(t_unit_f) @ step
                _add_block(comp, blk, 0, box.offsets[i][pq], f, f.one)
        else:
            pq = (i - n, n)
            tob = box.tobj[pq]
            blk = ctx.right_unitor(tob)
            _add_block(comp, blk, 0, box.offsets[i][pq], f, f.one)
        comps.append(comp)
    return ExtMorphism(box.ext, target, comps)


def right_collapse(box, sign_target):
    """Morphism from the box product onto zeta spliced over xi, with
    the transposition sign carried on the bottom scaling."""
    ctx = box.ctx
    f = ctx.field
    m, n = box.m, box.n
    sgn_mn = f.one if (m * n) % 2 == 0 else f.neg(f.one)
    comps = []
    for j in range(m + n):
        i = m + n - 1 - j
        tgt_dim = sign_target.mids[j].dim
        src_dim = sum(box.tobj[pq].module.dim for pq in box.summands[i])
        comp = Matrix.zeros(f, tgt_dim, src_dim)
        if i < m:
            pq = (i, 0)
            if pq in box.offsets[i]:
                tob = box.tobj[pq]
                t_e_unit = ctx.tensor(box.e_term(i), ctx.unit)
                step = ctx.tensor_map(
                    tob, t_e_unit,
                    Matrix.identity(f, box.e_term(i).dim), box.f_map(0),
                )
                blk = ctx.right_unitor(t_e_unit) @ step
                _add_block(comp, blk, 0, box.offsets[i][pq], f, sgn_mn)
        else:
            pq = (m, i - m)
            tob = box.tobj[pq]
            blk = ctx.left_unitor(tob)
            c = f.one if (m * (m + n - i)) % 2 == 0 else f.neg(f.one)
            _add_block(comp, blk, 0, box.offsets[i][pq], f, c)
        comps.append(comp)
    return ExtMorphism(box.ext, sign_target, comps)


def omega_loop(ctx, xi, zeta):
    """The bracket loop at xi spliced over zeta."""
    f = ctx.field
    m, n = xi.n, zeta.n
    sgn = f.one if (m * n) % 2 == 0 else f.neg(f.one)
    base = splice(xi, zeta)
    other = splice(zeta, xi)
    box1 = BoxProduct(ctx, xi, zeta)
    box2 = BoxProduct(ctx, zeta, xi)
    other_s = scale_ext(other, sgn)
    box2_s = scale_ext(box2.ext, sgn)
    l1 = left_collapse(box1, base)
    r1 = right_collapse(box1, other_s)
    l2 = left_collapse(box2, other)
    l2s = ExtMorphism(box2_s, other_s, l2.comps)
    r2 = right_collapse(box2, scale_ext(base, sgn))
    r2s = ExtMorphism(box2_s, base, r2.comps)
    steps = [(l1, False), (r1, True), (l2s, False), (r2s, True)]
    return Loop(base, steps)


def square_loop(ctx, xi):
    """The squaring roof at xi spliced over itself.

    Needs an even degree unless the field has characteristic 2, where
    the two collapses agree on the nose in any degree.
    """
    f = ctx.field
    assert xi.n % 2 == 0 or (f.kind == "prime-field" and f.p == 2)
    base = splice(xi, xi)
    box = BoxProduct(ctx, xi, xi)
    l = left_collapse(box, base)
    r = right_collapse(box, base)
    return Loop(base, [(l, False), (r, True)])


def loop_bracket(ctx, xi, zeta):
    """Bracket of two classes through the loop at their composite.

    With m = xi.n the returned extension represents (-1)^(m+1) times the
    cochain-level bracket of the classes of xi and zeta.
    """
    return u_minus(rebase_loop(omega_loop(ctx, zeta, xi)))


def loop_sq(ctx, xi):
    """Squaring operation of an even class through its roof.

    Represents (-1)^(m+1) times the cochain-level squaring map, so for
    even m the value is minus the square of the class of xi.
    """
    return u_minus(rebase_loop(square_loop(ctx, xi)))


def shear_loop(res, coeff, psi, n):
    """Automorphism loop encoding a degree-n cocycle one degree up.

    The base is the extension of the zero cocycle in degree n + 1, whose
    top middle is coeff + term(n)/boundaries; the single forward step
    shears that middle by (l, p) -> (l - psi(p), p).  Contracting the
    rebased loop with u_minus recovers (-1)^(n+1) times the class of the
    extension associated to psi.
    """
    f = res.algebra.field
    zero = Matrix.zeros(f, coeff.dim, res.ngens(n + 1))
    ext, proj, sect = cocycle_extension_data(res, coeff, zero, n + 1)
    full_psi = res.expand(n, psi, coeff)
    assert (full_psi @ res.diff_gen_matrix(n + 1)).is_zero(), "not a cocycle"
    big_dim = coeff.dim + res.term_dim(n)
    shear = Matrix.identity(f, big_dim)
    for i in range(coeff.dim):
        for j in range(res.term_dim(n)):
            shear.data[i][coeff.dim + j] = f.neg(full_psi.data[i][j])
    auto = proj @ shear @ sect
    # descends to the quotient exactly because psi kills the boundaries
    assert auto @ proj == proj @ shear
    comps = [auto] + [Matrix.identity(f, m.dim) for m in ext.mids[1:]]
    mor = ExtMorphism(ext, ext, comps)
    return Loop(ext, [(mor, True)])


def gamma_components(ctx, box12, box21):
    """Braiding-induced matrices between the two box products.

    Per degree, each summand (p, q) maps to (q, p) by the braiding with
    the transposition sign; the global sign matches right_collapse.
    """
    f = ctx.field
    m, n = box12.m, box12.n
    sgn_mn = f.one if (m * n) % 2 == 0 else f.neg(f.one)
    comps = []
    for j in range(m + n):
        i = m + n - 1 - j
        src_dim = sum(box12.tobj[pq].module.dim for pq in box12.summands[i])
        tgt_dim = sum(box21.tobj[pq].module.dim for pq in box21.summands[i])
        comp = Matrix.zeros(f, tgt_dim, src_dim)
        for (p, q) in box12.summands[i]:
            blk = ctx.braiding(box12.tobj[(p, q)], box21.tobj[(q, p)])
            c = f.one if (p * q) % 2 == 0 else f.neg(f.one)
            _add_block(
                comp, blk,
                box21.offsets[i][(q, p)], box12.offsets[i][(p, q)],
                f, f.mul(sgn_mn, c),
            )
        comps.append(comp)
    return comps
