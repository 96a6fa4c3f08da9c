"""Exact-sequence extensions of modules and the operations on them.

An n-extension 0 -> Y -> E_{n-1} -> ... -> E_0 -> X -> 0 is stored with
its middle modules and all n+1 maps.  Equivalence classes under the
zig-zag relation form Ext^n; the operations here (pullback, pushout,
Baer sum, splice, translation) realize the group and ring structure on
representatives, and the cocycle conversions move between extensions
and reduced cochains over a chosen free resolution.
"""

from .linalg import Matrix, block_diag, kernel_basis, rank, solve_many
from .algebras import (
    direct_sum_modules,
    is_module_map,
    module_hom_space,
    quotient_module,
    submodule,
    zero_module,
)
from .complexes import AugmentedComplex, hom_complex, lift_chain_map


class Extension:
    """Admissible n-extension with explicit middle terms and maps.

    mids[0] = E_{n-1}, ..., mids[n-1] = E_0.  maps[0] = e_n: Y -> E_{n-1},
    maps[i]: mids[i-1] -> mids[i] for 0 < i < n, maps[n] = e_0: E_0 -> X.
    """

    __slots__ = ("algebra", "n", "y", "x", "mids", "maps")

    def __init__(self, algebra, n, y, x, mids, maps):
        assert n >= 1 and len(mids) == n and len(maps) == n + 1
        self.algebra = algebra
        self.n = n
        self.y = y
        self.x = x
        self.mids = list(mids)
        self.maps = list(maps)

    def objects(self):
        return [self.y] + self.mids + [self.x]

    def e_top(self):
        return self.maps[0]

    def e_bottom(self):
        return self.maps[-1]

    def __repr__(self):
        dims = [m.dim for m in self.objects()]
        return "Extension(n=%d, dims=%s)" % (self.n, dims)


def ext_same(a, b):
    """Structural equality: same degree, ends, middles and maps."""
    if a is b:
        return True
    if a.n != b.n or a.y.dim != b.y.dim or a.x.dim != b.x.dim:
        return False
    if any(p.dim != q.dim for p, q in zip(a.mids, b.mids)):
        return False
    if any(p != q for p, q in zip(a.maps, b.maps)):
        return False
    for p, q in zip(a.objects(), b.objects()):
        if any(r != s for r, s in zip(p.rho, q.rho)):
            return False
    return True


def check_admissible(ext):
    """Exactness and linearity of the whole sequence, entrywise exact."""
    objs = ext.objects()
    for i, t in enumerate(ext.maps):
        assert is_module_map(objs[i], objs[i + 1], t), "map %d not linear" % i
    for i in range(len(ext.maps) - 1):
        comp = ext.maps[i + 1] @ ext.maps[i]
        assert comp.is_zero(), "composite %d nonzero" % i
    ranks = [rank(t) for t in ext.maps]
    assert ranks[0] == ext.y.dim, "left map not injective"
    assert ranks[-1] == ext.x.dim, "right map not surjective"
    # exactness at each middle term: im(in) = ker(out) via ranks
    for i in range(ext.n):
        indim = ext.mids[i].dim
        assert ranks[i] + ranks[i + 1] == indim, "not exact at middle %d" % i
    return True


class ExtMorphism:
    """Morphism of n-extensions fixing both end objects."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source, target, comps, check=True):
        assert source.n == target.n and len(comps) == source.n
        self.source = source
        self.target = target
        self.comps = list(comps)
        if check:
            self.validate()

    def validate(self):
        s, t = self.source, self.target
        assert s.y.dim == t.y.dim and s.x.dim == t.x.dim
        for i in range(s.n):
            assert is_module_map(s.mids[i], t.mids[i], self.comps[i])
        assert self.comps[0] @ s.maps[0] == t.maps[0], "top square"
        for i in range(1, s.n):
            lhs = self.comps[i] @ s.maps[i]
            rhs = t.maps[i] @ self.comps[i - 1]
            assert lhs == rhs, "square %d" % i
        assert t.maps[-1] @ self.comps[-1] == s.maps[-1], "bottom square"
        return True

    def then(self, other):
        """Composite self followed by other."""
        assert ext_same(self.target, other.source)
        comps = [b @ a for a, b in zip(self.comps, other.comps)]
        return ExtMorphism(self.source, other.target, comps, check=False)

    @classmethod
    def identity(cls, ext):
        f = ext.algebra.field
        comps = [Matrix.identity(f, m.dim) for m in ext.mids]
        return cls(ext, ext, comps, check=False)


def trivial_extension(algebra, y, x, n):
    """The split n-extension with zero connecting data."""
    f = algebra.field
    if n == 1:
        mid = direct_sum_modules([y, x])
        top = Matrix.zeros(f, y.dim + x.dim, y.dim)
        for i in range(y.dim):
            top.data[i][i] = f.one
        bot = Matrix.zeros(f, x.dim, y.dim + x.dim)
        for i in range(x.dim):
            bot.data[i][y.dim + i] = f.one
        return Extension(algebra, 1, y, x, [mid], [top, bot])
    z = zero_module(algebra)
    mids = [y] + [z] * (n - 2) + [x]
    maps = [Matrix.identity(f, y.dim)]
    maps.append(Matrix.zeros(f, mids[1].dim, y.dim))
    for i in range(2, n):
        maps.append(Matrix.zeros(f, mids[i].dim, mids[i - 1].dim))
    maps.append(Matrix.identity(f, x.dim))
    return Extension(algebra, n, y, x, mids, maps)


def direct_sum_ext(a, b):
    """Componentwise direct sum; ends become direct sums as well."""
    assert a.n == b.n
    y = direct_sum_modules([a.y, b.y])
    x = direct_sum_modules([a.x, b.x])
    mids = [direct_sum_modules([p, q]) for p, q in zip(a.mids, b.mids)]
    f = a.algebra.field
    maps = [block_diag(f, [p, q]) for p, q in zip(a.maps, b.maps)]
    return Extension(a.algebra, a.n, y, x, mids, maps)


def scale_ext(ext, c):
    """The scalar action c.[ext]: pull back along c*id, so the bottom
    map picks up 1/c."""
    f = ext.algebra.field
    assert c != f.zero
    maps = list(ext.maps)
    maps[-1] = maps[-1].scale(f.inv(c))
    return Extension(ext.algebra, ext.n, ext.y, ext.x, ext.mids, maps)


def neg_ext(ext):
    return scale_ext(ext, ext.algebra.field.neg(ext.algebra.field.one))


def translate_ends(ext, ynew, g, xnew, t):
    """Relabel the ends along isos g: ynew -> Y and t: X -> xnew."""
    maps = list(ext.maps)
    maps[0] = maps[0] @ g
    maps[-1] = t @ maps[-1]
    return Extension(ext.algebra, ext.n, ynew, xnew, ext.mids, maps)


def pushout_top(ext, ynew, g):
    """Push the Y-end out along g: Y -> ynew."""
    f = ext.algebra.field
    big = direct_sum_modules([ynew, ext.mids[0]])
    rels = []
    en = ext.maps[0]
    for w in range(ext.y.dim):
        col = [f.mul(g.data[i][w], f.one) for i in range(ynew.dim)]
        col += [f.neg(en.data[i][w]) for i in range(ext.mids[0].dim)]
        rels.append(col)
    w = Matrix.from_cols(f, rels, nrows=big.dim)
    quot, proj, sect = quotient_module(big, w)
    incl_y = Matrix.zeros(f, big.dim, ynew.dim)
    for i in range(ynew.dim):
        incl_y.data[i][i] = f.one
    new_top = proj @ incl_y
    nxt = ext.maps[1]
    raw = Matrix.zeros(f, nxt.nrows, big.dim)
    for i in range(nxt.nrows):
        for j in range(ext.mids[0].dim):
            raw.data[i][ynew.dim + j] = nxt.data[i][j]
    assert (raw @ w).is_zero(), "pushout map not defined on the quotient"
    new_next = raw @ sect
    mids = [quot] + ext.mids[1:]
    maps = [new_top, new_next] + ext.maps[2:]
    return Extension(ext.algebra, ext.n, ynew, ext.x, mids, maps)


def pullback_bottom(ext, xnew, t):
    """Pull the X-end back along t: xnew -> X."""
    f = ext.algebra.field
    e0 = ext.maps[-1]
    big = direct_sum_modules([ext.mids[-1], xnew])
    cond = Matrix.zeros(f, ext.x.dim, big.dim)
    for i in range(ext.x.dim):
        for j in range(ext.mids[-1].dim):
            cond.data[i][j] = e0.data[i][j]
        for j in range(xnew.dim):
            cond.data[i][ext.mids[-1].dim + j] = f.neg(t.data[i][j])
    pmod, incl = submodule(big, kernel_basis(cond))
    new_bot = Matrix(
        f,
        [incl.data[ext.mids[-1].dim + i] for i in range(xnew.dim)],
        ncols=incl.ncols,
    )
    prev = ext.maps[-2]
    lifted = Matrix.zeros(f, big.dim, prev.ncols)
    for i in range(prev.nrows):
        for j in range(prev.ncols):
            lifted.data[i][j] = prev.data[i][j]
    new_prev = solve_many(incl, lifted)
    assert new_prev is not None, "pullback does not receive the complex"
    mids = ext.mids[:-1] + [pmod]
    maps = ext.maps[:-2] + [new_prev, new_bot]
    return Extension(ext.algebra, ext.n, ext.y, xnew, mids, maps)


def _incl_block(f, total, offset, dim):
    out = Matrix.zeros(f, total, dim)
    for i in range(dim):
        out.data[offset + i][i] = f.one
    return out


class BaerRecipe:
    """Construction data of a Baer sum, kept for morphism transport."""

    __slots__ = ("n", "incl_p", "proj_q", "sect_q", "mid_dims")

    def __init__(self, n, incl_p, proj_q, sect_q, mid_dims):
        self.n = n
        self.incl_p = incl_p
        self.proj_q = proj_q
        self.sect_q = sect_q
        self.mid_dims = mid_dims


def baer_sum_recipe(a, b):
    """Baer sum of two extensions with the same ends.

    Pullback along the diagonal at the X-end, pushout along the fold at
    the Y-end; for n = 1 both happen on the single middle term.
    Returns (extension, recipe).
    """
    assert a.n == b.n
    f = a.algebra.field
    n = a.n
    assert a.y.dim == b.y.dim and a.x.dim == b.x.dim
    for i in range(a.algebra.dim):
        assert a.y.rho[i] == b.y.rho[i] and a.x.rho[i] == b.x.rho[i]
    y, x = a.y, a.x
    dsum = direct_sum_ext(a, b)
    # bottom: P = {(u, v, x) : e0(u) = x = f0(v)} inside E0 + F0 + X
    e0 = dsum.maps[-1]
    bigb = direct_sum_modules([dsum.mids[-1], x])
    cond = Matrix.zeros(f, 2 * x.dim, bigb.dim)
    for i in range(x.dim):
        for j in range(a.mids[-1].dim):
            cond.data[i][j] = a.maps[-1].data[i][j]
        cond.data[i][dsum.mids[-1].dim + i] = f.neg(f.one)
        for j in range(b.mids[-1].dim):
            cond.data[x.dim + i][a.mids[-1].dim + j] = b.maps[-1].data[i][j]
        cond.data[x.dim + i][dsum.mids[-1].dim + i] = f.neg(f.one)
    pmod, incl_p = submodule(bigb, kernel_basis(cond))
    new_bot = Matrix(
        f,
        [incl_p.data[dsum.mids[-1].dim + i] for i in range(x.dim)],
        ncols=incl_p.ncols,
    )
    if n >= 2:
        prev = dsum.maps[-2]
        lifted = Matrix.zeros(f, bigb.dim, prev.ncols)
        for i in range(prev.nrows):
            for j in range(prev.ncols):
                lifted.data[i][j] = prev.data[i][j]
        into_p = solve_many(incl_p, lifted)
        assert into_p is not None
        # top: Q = (Y + (E_{n-1} + F_{n-1})) / (fold(w), -e_n(w))
        top_mid = dsum.mids[0]
        bigt = direct_sum_modules([y, top_mid])
        rels = []
        en = dsum.maps[0]
        for side in range(2):
            for w in range(y.dim):
                col = [f.one if i == w else f.zero for i in range(y.dim)]
                src = w if side == 0 else y.dim + w
                col += [f.neg(en.data[i][src]) for i in range(top_mid.dim)]
                rels.append(col)
        wmat = Matrix.from_cols(f, rels, nrows=bigt.dim)
        qmod, proj_q, sect_q = quotient_module(bigt, wmat)
        new_top = proj_q @ _incl_block(f, bigt.dim, 0, y.dim)
        nxt = dsum.maps[1] if n >= 3 else into_p
        raw = Matrix.zeros(f, nxt.nrows, bigt.dim)
        for i in range(nxt.nrows):
            for j in range(top_mid.dim):
                raw.data[i][y.dim + j] = nxt.data[i][j]
        assert (raw @ wmat).is_zero()
        new_next = raw @ sect_q
        mids = [qmod] + dsum.mids[1:-1] + [pmod]
        maps = [new_top, new_next] + dsum.maps[2:-2]
        if n >= 3:
            maps.append(into_p)
        maps.append(new_bot)
        ext = Extension(a.algebra, n, y, x, mids, maps)
        recipe = BaerRecipe(
            n, incl_p, proj_q, sect_q, [m.dim for m in dsum.mids]
        )
        return ext, recipe
    # n = 1: pushout on P itself
    en = dsum.maps[0]
    lifted = Matrix.zeros(f, bigb.dim, en.ncols)
    for i in range(en.nrows):
        for j in range(en.ncols):
            lifted.data[i][j] = en.data[i][j]
    en_p = solve_many(incl_p, lifted)
    assert en_p is not None
    bigt = direct_sum_modules([y, pmod])
    rels = []
    for side in range(2):
        for w in range(y.dim):
            col = [f.one if i == w else f.zero for i in range(y.dim)]
            src = w if side == 0 else y.dim + w
            col += [f.neg(en_p.data[i][src]) for i in range(pmod.dim)]
            rels.append(col)
    wmat = Matrix.from_cols(f, rels, nrows=bigt.dim)
    qmod, proj_q, sect_q = quotient_module(bigt, wmat)
    new_top = proj_q @ _incl_block(f, bigt.dim, 0, y.dim)
    raw = Matrix.zeros(f, x.dim, bigt.dim)
    for i in range(x.dim):
        for j in range(pmod.dim):
            raw.data[i][y.dim + j] = new_bot.data[i][j]
    assert (raw @ wmat).is_zero()
    new_bot_q = raw @ sect_q
    ext = Extension(a.algebra, 1, y, x, [qmod], [new_top, new_bot_q])
    recipe = BaerRecipe(1, incl_p, proj_q, sect_q, [dsum.mids[0].dim])
    return ext, recipe


def baer_sum(a, b):
    return baer_sum_recipe(a, b)[0]


class BaerFunctor:
    """The endofunctor (-) [+] zeta on extensions with fixed ends."""

    def __init__(self, zeta):
        self.zeta = zeta

    def apply_object(self, omega):
        return baer_sum_recipe(omega, self.zeta)

    def apply_morphism(self, mor, src_pair, tgt_pair):
        """Transport a morphism through the sum construction."""
        f = mor.source.algebra.field
        n = mor.source.n
        src_ext, src_rec = src_pair
        tgt_ext, tgt_rec = tgt_pair
        zmids = self.zeta.mids
        ydim = mor.source.y.dim
        xdim = mor.source.x.dim
        if n == 1:
            big = mor.comps[0]
            blk = block_diag(f, [big, Matrix.identity(f, zmids[0].dim)])
            blk = block_diag(f, [blk, Matrix.identity(f, xdim)])
            zp = solve_many(tgt_rec.incl_p, blk @ src_rec.incl_p)
            assert zp is not None, "kernel transport failed"
            full = block_diag(f, [Matrix.identity(f, ydim), zp])
            comp = tgt_rec.proj_q @ full @ src_rec.sect_q
            assert (comp @ src_rec.proj_q) == (tgt_rec.proj_q @ full)
            return ExtMorphism(src_ext, tgt_ext, [comp], check=False)
        comps = []
        # top: quotient transport
        blk = block_diag(f, [mor.comps[0], Matrix.identity(f, zmids[0].dim)])
        full = block_diag(f, [Matrix.identity(f, ydim), blk])
        comp = tgt_rec.proj_q @ full @ src_rec.sect_q
        assert (comp @ src_rec.proj_q) == (tgt_rec.proj_q @ full)
        comps.append(comp)
        for i in range(1, n - 1):
            comps.append(
                block_diag(
                    f, [mor.comps[i], Matrix.identity(f, zmids[i].dim)]
                )
            )
        # bottom: kernel transport
        blk = block_diag(
            f, [mor.comps[n - 1], Matrix.identity(f, zmids[n - 1].dim)]
        )
        blk = block_diag(f, [blk, Matrix.identity(f, xdim)])
        zp = solve_many(tgt_rec.incl_p, blk @ src_rec.incl_p)
        assert zp is not None, "kernel transport failed"
        comps.append(zp)
        return ExtMorphism(src_ext, tgt_ext, comps, check=False)


def splice(upper, lower):
    """Yoneda composite: upper after lower, joined through the ends."""
    assert upper.x.dim == lower.y.dim
    for i in range(upper.algebra.dim):
        assert upper.x.rho[i] == lower.y.rho[i]
    mids = upper.mids + lower.mids
    junction = lower.maps[0] @ upper.maps[-1]
    maps = upper.maps[:-1] + [junction] + lower.maps[1:]
    return Extension(
        upper.algebra, upper.n + lower.n, upper.y, lower.x, mids, maps
    )


def factor_morphism(beta):
    """Factor beta through a split target as mono-then-retraction.

    Returns (chi, iota, pi, q): iota: source -> chi injective in every
    degree, pi: chi -> target with pi . iota = beta, and a section q of
    pi.  chi is the target summed with a contractible middle complex
    built from the source.
    """
    src, tgt = beta.source, beta.target
    n = src.n
    assert n >= 2
    f = src.algebra.field
    # contractible filler degrees: index i holds degree d = n-1-i
    fill = []
    for i in range(n):
        d = n - 1 - i
        if d == n - 1:
            fill.append(src.mids[1])
        elif d == 0:
            fill.append(src.mids[n - 1])
        else:
            fill.append(
                direct_sum_modules([src.mids[n - 1 - d], src.mids[n - d]])
            )
    mids = [direct_sum_modules([tgt.mids[i], fill[i]]) for i in range(n)]
    # filler differential: project to the shared coordinate, re-include
    dfill = []
    for i in range(1, n):
        d_from = n - 1 - (i - 1)
        d_to = n - 1 - i
        rows, cols = fill[i].dim, fill[i - 1].dim
        m = Matrix.zeros(f, rows, cols)
        shared = src.mids[n - d_from].dim  # E'_{d_from - 1} = E'_{d_to}
        roff = 0
        coff = cols - shared
        for r in range(shared):
            m.data[roff + r][coff + r] = f.one
        dfill.append(m)
    maps = []
    top = Matrix.zeros(f, mids[0].dim, src.y.dim)
    for i in range(tgt.mids[0].dim):
        for j in range(src.y.dim):
            top.data[i][j] = tgt.maps[0].data[i][j]
    maps.append(top)
    for i in range(1, n):
        maps.append(block_diag(f, [tgt.maps[i], dfill[i - 1]]))
    bot = Matrix.zeros(f, src.x.dim, mids[n - 1].dim)
    for i in range(src.x.dim):
        for j in range(tgt.mids[n - 1].dim):
            bot.data[i][j] = tgt.maps[n].data[i][j]
    maps.append(bot)
    chi = Extension(src.algebra, n, src.y, src.x, mids, maps)
    iota_comps = []
    for i in range(n):
        d = n - 1 - i
        rows = [beta.comps[i]]
        if d == n - 1:
            rows.append(src.maps[1])
        elif d == 0:
            rows.append(Matrix.identity(f, src.mids[n - 1].dim))
        else:
            rows.append(Matrix.identity(f, src.mids[i].dim))
            rows.append(src.maps[n - d])
        total = sum(r.nrows for r in rows)
        m = Matrix.zeros(f, total, src.mids[i].dim)
        off = 0
        for r in rows:
            for a_ in range(r.nrows):
                m.data[off + a_] = list(r.data[a_])
            off += r.nrows
        iota_comps.append(m)
    pi_comps = []
    q_comps = []
    for i in range(n):
        tdim = tgt.mids[i].dim
        pi = Matrix.zeros(f, tdim, mids[i].dim)
        for r in range(tdim):
            pi.data[r][r] = f.one
        pi_comps.append(pi)
        q_comps.append(_incl_block(f, mids[i].dim, 0, tdim))
    iota = ExtMorphism(src, chi, iota_comps)
    pi = ExtMorphism(chi, tgt, pi_comps, check=False)
    q = ExtMorphism(tgt, chi, q_comps, check=False)
    for i in range(n):
        assert rank(iota_comps[i]) == src.mids[i].dim, "not injective"
        assert (pi_comps[i] @ iota_comps[i]) == beta.comps[i]
    return chi, iota, pi, q


def pushout_ext(iota, other):
    """Componentwise pushout of two morphisms out of the same source.

    iota should be injective in every degree.  Returns (ext, p1, p2)
    with the two induced morphisms into the pushout.
    """
    src = iota.source
    assert ext_same(src, other.source)
    a, b = iota.target, other.target
    n = src.n
    f = src.algebra.field
    mids = []
    projs = []
    sects = []
    wmats = []
    for i in range(n):
        big = direct_sum_modules([a.mids[i], b.mids[i]])
        rels = []
        for w in range(src.mids[i].dim):
            col = [iota.comps[i].data[r][w] for r in range(a.mids[i].dim)]
            col += [
                f.neg(other.comps[i].data[r][w])
                for r in range(b.mids[i].dim)
            ]
            rels.append(col)
        wmat = Matrix.from_cols(f, rels, nrows=big.dim)
        quot, proj, sect = quotient_module(big, wmat)
        mids.append(quot)
        projs.append(proj)
        sects.append(sect)
        wmats.append(wmat)
    maps = []
    top = projs[0] @ a.maps[0].vstack(
        Matrix.zeros(f, b.mids[0].dim, src.y.dim)
    )
    top_b = projs[0] @ Matrix.zeros(f, a.mids[0].dim, src.y.dim).vstack(
        b.maps[0]
    )
    assert top == top_b, "pushout does not glue along Y"
    maps.append(top)
    for i in range(1, n):
        blk = block_diag(f, [a.maps[i], b.maps[i]])
        raw = projs[i] @ blk
        assert (raw @ wmats[i - 1]).is_zero(), "differential ill defined"
        maps.append(raw @ sects[i - 1])
    rawbot = a.maps[n].hstack(b.maps[n])
    assert (rawbot @ wmats[n - 1]).is_zero(), "bottom map ill defined"
    maps.append(rawbot @ sects[n - 1])
    ext = Extension(src.algebra, n, src.y, src.x, mids, maps)
    p1 = ExtMorphism(
        a,
        ext,
        [projs[i] @ _incl_block(f, projs[i].ncols, 0, a.mids[i].dim)
         for i in range(n)],
        check=False,
    )
    p2 = ExtMorphism(
        b,
        ext,
        [projs[i]
         @ _incl_block(f, projs[i].ncols, a.mids[i].dim, b.mids[i].dim)
         for i in range(n)],
        check=False,
    )
    return ext, p1, p2


def find_module_map(src, tgt, constraints):
    """Module map T: src -> tgt with A @ T @ B = C for each (A, B, C)."""
    f = src.algebra.field
    basis = module_hom_space(src, tgt)
    if not basis:
        return None
    rows = []
    rhs = []
    for a_, b_, c_ in constraints:
        imgs = [a_ @ h @ b_ for h in basis]
        for i in range(c_.nrows):
            for j in range(c_.ncols):
                rows.append([m.data[i][j] for m in imgs])
                rhs.append(c_.data[i][j])
    mat = Matrix(f, rows, copy=False, ncols=len(basis))
    sol = solve_many(mat, Matrix.from_cols(f, [rhs], nrows=len(rhs)))
    if sol is None:
        return None
    out = Matrix.zeros(f, tgt.dim, src.dim)
    for k, h in enumerate(basis):
        c = sol.data[k][0]
        if c != f.zero:
            out = out + h.scale(c)
    return out


def extension_to_cocycle(res, ext):
    """Reduced cocycle of the class, by lifting along the resolution.

    Returns the dim(Y) x ngens(n) matrix of generator values of the lift
    in degree n.
    """
    n = ext.n
    terms = [ext.mids[n - 1 - j] for j in range(n)] + [ext.y]
    diffs = [None]
    for j in range(1, n):
        diffs.append(ext.maps[n - j])
    diffs.append(ext.maps[0])
    cx = AugmentedComplex(ext.algebra, terms, diffs, ext.maps[n], ext.x)
    f_init = Matrix.identity(ext.algebra.field, ext.x.dim)
    assert ext.x.dim == res.target.dim
    gs, fulls = lift_chain_map(res, cx, f_init, n)
    coc = gs[n]
    nxt = fulls[n] @ res.diff_gen_matrix(n + 1)
    assert nxt.is_zero(), "lift is not a cocycle"
    return coc


def cocycle_extension_data(res, coeff, phi, n):
    """Extension of the reduced cocycle phi plus its quotient charts.

    phi maps the degree-n generators of res into coeff and kills the
    image of the next differential.  The middle next to Y is the
    cokernel of (phi, -d); returns (ext, proj, sect) where proj and
    sect chart that cokernel over coeff + term(n-1).
    """
    f = res.algebra.field
    full_phi = res.expand(n, phi, coeff)
    assert (full_phi @ res.diff_gen_matrix(n + 1)).is_zero(), "not a cocycle"
    dn = res.diff(n)
    big = direct_sum_modules([coeff, res.term(n - 1)])
    cols = []
    for j in range(res.term_dim(n)):
        col = [full_phi.data[i][j] for i in range(coeff.dim)]
        col += [f.neg(dn.data[i][j]) for i in range(res.term_dim(n - 1))]
        cols.append(col)
    wmat = Matrix.from_cols(f, cols, nrows=big.dim)
    quot, proj, sect = quotient_module(big, wmat)
    e_top = proj @ _incl_block(f, big.dim, 0, coeff.dim)
    if n == 1:
        raw = Matrix.zeros(f, res.target.dim, big.dim)
        aug = res.aug()
        for i in range(res.target.dim):
            for j in range(res.term_dim(0)):
                raw.data[i][coeff.dim + j] = aug.data[i][j]
        assert (raw @ wmat).is_zero()
        ext = Extension(
            res.algebra, 1, coeff, res.target, [quot], [e_top, raw @ sect]
        )
        return ext, proj, sect
    nxt = res.diff(n - 1)
    raw = Matrix.zeros(f, nxt.nrows, big.dim)
    for i in range(nxt.nrows):
        for j in range(res.term_dim(n - 1)):
            raw.data[i][coeff.dim + j] = nxt.data[i][j]
    assert (raw @ wmat).is_zero()
    mids = [quot] + [res.term(j) for j in range(n - 2, -1, -1)]
    maps = [e_top, raw @ sect]
    for j in range(n - 2, 0, -1):
        maps.append(res.diff(j))
    maps.append(res.aug())
    ext = Extension(res.algebra, n, coeff, res.target, mids, maps)
    return ext, proj, sect


def cocycle_to_extension(res, coeff, phi, n):
    """Extension representing the class of the reduced cocycle phi."""
    return cocycle_extension_data(res, coeff, phi, n)[0]


def flatten_cocycle(c):
    """Generator-major flattening matching the reduced hom complex."""
    return [c.data[t][w] for w in range(c.ncols) for t in range(c.nrows)]


def cocycles_cohomologous(res, coeff, c1, c2, n):
    """Do two degree-n cocycles differ by a coboundary?"""
    f = res.algebra.field
    if c1 == c2:
        return True
    assert n >= 1
    diff = c1 - c2
    hcx = hom_complex(res, coeff, n)
    vec = flatten_cocycle(diff)
    sol = solve_many(
        hcx.diffs[n - 1], Matrix.from_cols(f, [vec], nrows=len(vec))
    )
    return sol is not None


def classes_equal(res, coeff, e1, e2):
    """Compare two extension classes through their cocycles."""
    assert e1.n == e2.n
    c1 = extension_to_cocycle(res, e1)
    c2 = extension_to_cocycle(res, e2)
    return cocycles_cohomologous(res, coeff, c1, c2, e1.n)
