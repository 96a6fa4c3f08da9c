"""Resolutions, cochain complexes, and cohomology with canonical bases.

Bar-type resolutions are lazy: differentials are recorded on free module
generators and nothing of size d^(n+2) is materialized unless a caller
asks for full term matrices.  Cochain spaces are stored in the reduced
form Hom_k(generators, M), which is what keeps the big prime-field cases
inside their time budgets.
"""

from .linalg import Matrix, rank, rref_analyze, solve_many
from .algebras import ModuleRep, enveloping, kronecker, regular_bimodule


class AugmentedComplex:
    """Finite complex of modules with an augmentation onto a target.

    terms[n] for 0 <= n <= length, diffs[n]: terms[n] -> terms[n-1] for
    n >= 1, aug: terms[0] -> target.
    """

    __slots__ = ("algebra", "terms", "diffs", "aug", "target")

    def __init__(self, algebra, terms, diffs, aug, target):
        self.algebra = algebra
        self.terms = list(terms)
        self.diffs = list(diffs)
        self.aug = aug
        self.target = target
        assert len(self.diffs) == len(self.terms)
        for n in range(2, len(self.terms)):
            comp = self.diffs[n - 1] @ self.diffs[n]
            assert comp.is_zero(), "differential does not square to zero"
        if len(self.terms) >= 2:
            assert (self.aug @ self.diffs[1]).is_zero()

    @property
    def length(self):
        return len(self.terms) - 1


class FreeResolution:
    """Augmented complex of free modules, lazy, with chosen generators.

    Concrete flavors say how many generators each degree has, how a basis
    vector of a term factors as (algebra basis element, generator), and
    what the differential does to each generator.
    """

    def __init__(self, algebra, target):
        self.algebra = algebra
        self.target = target
        self._terms = {}
        self._diffs = {}

    # flavor interface -------------------------------------------------
    def ngens(self, n):
        raise NotImplementedError

    def gen_decompose(self, n):
        """List over term k-basis indices of (algebra basis idx, gen idx)."""
        raise NotImplementedError

    def diff_on_gens(self, n):
        """List over generators of {term(n-1) k-basis index: coeff}."""
        raise NotImplementedError

    def aug_on_gens(self):
        """Matrix dim(target) x ngens(0)."""
        raise NotImplementedError

    def term_action(self, n, i):
        """Action matrix of algebra basis element i on term(n)."""
        raise NotImplementedError

    def term_dim(self, n):
        raise NotImplementedError

    # derived ----------------------------------------------------------
    def term(self, n):
        if n not in self._terms:
            self._terms[n] = ModuleRep(
                self.algebra,
                [self.term_action(n, i) for i in range(self.algebra.dim)],
            )
        return self._terms[n]

    def gen_embed(self, n):
        """Matrix term_dim(n) x ngens(n) embedding the generators."""
        f = self.algebra.field
        out = Matrix.zeros(f, self.term_dim(n), self.ngens(n))
        for kidx, (lam, w) in enumerate(self.gen_decompose(n)):
            # generator vector = unit acting on the generator, so entry
            # (kidx, w) picks up the unit coordinate at lam
            c = self._unit_coord(lam)
            if c != f.zero:
                out.data[kidx][w] = f.add(out.data[kidx][w], c)
        return out

    def _unit_coord(self, lam):
        raise NotImplementedError

    def diff_gen_matrix(self, n):
        """Dense term_dim(n-1) x ngens(n) matrix of the generator images."""
        f = self.algebra.field
        out = Matrix.zeros(f, self.term_dim(n - 1), self.ngens(n))
        for g, entries in enumerate(self.diff_on_gens(n)):
            for kidx, c in entries.items():
                out.data[kidx][g] = f.add(out.data[kidx][g], c)
        return out

    def expand(self, n, genmat, target_mod):
        """Full matrix of the module map term(n) -> target_mod with the
        given generator images (columns of genmat)."""
        f = self.algebra.field
        acts = [target_mod.rho[i] for i in range(self.algebra.dim)]
        cols = []
        gcols = [genmat.col(w) for w in range(genmat.ncols)]
        for (lam, w) in self.gen_decompose(n):
            cols.append(acts[lam].apply(gcols[w]))
        return Matrix.from_cols(f, cols, nrows=target_mod.dim)

    def diff(self, n):
        if n not in self._diffs:
            assert n >= 1
            f = self.algebra.field
            dg = self.diff_gen_matrix(n)
            prev = self.term(n - 1)
            cols = []
            gcols = [dg.col(w) for w in range(dg.ncols)]
            for (lam, w) in self.gen_decompose(n):
                cols.append(prev.rho[lam].apply(gcols[w]))
            self._diffs[n] = Matrix.from_cols(f, cols, nrows=self.term_dim(n - 1))
        return self._diffs[n]

    def aug(self):
        return self.expand(0, self.aug_on_gens(), self.target)

    def complex_upto(self, n):
        terms = [self.term(i) for i in range(n + 1)]
        diffs = [None] + [self.diff(i) for i in range(1, n + 1)]
        return AugmentedComplex(self.algebra, terms, diffs, self.aug(), self.target)


def _tuples_iter(d, n):
    if n == 0:
        yield ()
        return
    for t in _tuples_iter(d, n - 1):
        for i in range(d):
            yield t + (i,)


class BarResolution(FreeResolution):
    """Bar resolution of an algebra as a bimodule over its enveloping
    algebra: term n is A^(n+2) with outer slots carrying the action."""

    def __init__(self, a, env=None, target=None):
        self.base = a
        env = env if env is not None else enveloping(a)
        target = target if target is not None else regular_bimodule(a)
        super().__init__(env, target)
        self.d = a.dim

    def ngens(self, n):
        return self.d ** n

    def term_dim(self, n):
        return self.d ** (n + 2)

    def gen_decompose(self, n):
        d = self.d
        dn = d ** n
        out = []
        for i0 in range(d):
            for w in range(dn):
                for i1 in range(d):
                    out.append((i0 * d + i1, w))
        return out

    def _unit_coord(self, lam):
        f = self.algebra.field
        u = self.base.unit
        return f.mul(u[lam // self.d], u[lam % self.d])

    def term_action(self, n, i):
        d = self.d
        li = self.base.left_matrix(i // d)
        rj = self.base.right_matrix(i % d)
        mid = Matrix.identity(self.base.field, d ** n)
        return kronecker(kronecker(li, mid), rj)

    def diff_on_gens(self, n):
        """d(1 (x) a_w1 ... a_wn (x) 1) as sparse vectors in A^(n+1)."""
        assert n >= 1
        a = self.base
        f = a.field
        d = self.d
        u = a.unit
        out = []
        for w in _tuples_iter(d, n):
            acc = {}

            def put(idx, c):
                if c != f.zero:
                    acc[idx] = f.add(acc.get(idx, f.zero), c)

            # slot index helper for A^(n+1): (i0, v_1..v_{n-1}, i1)
            def kindex(i0, mid, i1):
                idx = i0
                for v in mid:
                    idx = idx * d + v
                return idx * d + i1

            # i = 0: unit times a_w1 lands in the leftmost slot
            for i1, c1 in enumerate(u):
                put(kindex(w[0], w[1:], i1), c1)
            # inner multiplications
            sign = f.one
            for i in range(1, n):
                sign = f.neg(sign)
                for m, c in a.table[w[i - 1]][w[i]].items():
                    mid = w[: i - 1] + (m,) + w[i + 1 :]
                    for i0, c0 in enumerate(u):
                        for i1, c1 in enumerate(u):
                            put(kindex(i0, mid, i1),
                                f.mul(sign, f.mul(c, f.mul(c0, c1))))
            # i = n: a_wn times unit lands in the rightmost slot
            sign = f.neg(sign)
            for i0, c0 in enumerate(u):
                put(kindex(i0, w[:-1], w[-1]), f.mul(sign, c0))
            out.append(acc)
        return out

    def aug_on_gens(self):
        # single generator 1 (x) 1, augmentation is multiplication
        f = self.algebra.field
        return Matrix.from_cols(f, [self.base.unit], nrows=self.base.dim)


class TrivialBarResolution(FreeResolution):
    """Resolution of the trivial module of an augmented algebra by the
    free modules B^(n+1), the counit eating the last slot."""

    def __init__(self, b, counit):
        self.base = b
        f = b.field
        self.counit = list(counit)
        target = ModuleRep(
            b, [Matrix(f, [[self.counit[i]]]) for i in range(b.dim)]
        )
        super().__init__(b, target)
        self.d = b.dim

    def ngens(self, n):
        return self.d ** n

    def term_dim(self, n):
        return self.d ** (n + 1)

    def gen_decompose(self, n):
        d = self.d
        dn = d ** n
        out = []
        for i0 in range(d):
            for w in range(dn):
                out.append((i0, w))
        return out

    def _unit_coord(self, lam):
        return self.base.unit[lam]

    def term_action(self, n, i):
        li = self.base.left_matrix(i)
        return kronecker(li, Matrix.identity(self.base.field, self.d ** n))

    def diff_on_gens(self, n):
        assert n >= 1
        b = self.base
        f = b.field
        d = self.d
        u = b.unit
        eps = self.counit
        out = []
        for w in _tuples_iter(d, n):
            acc = {}

            def put(idx, c):
                if c != f.zero:
                    acc[idx] = f.add(acc.get(idx, f.zero), c)

            def kindex(i0, mid):
                idx = i0
                for v in mid:
                    idx = idx * d + v
                return idx

            # i = 0: unit times b_w1
            put(kindex(w[0], w[1:]), f.one)
            sign = f.one
            for i in range(1, n):
                sign = f.neg(sign)
                for m, c in b.table[w[i - 1]][w[i]].items():
                    mid = w[: i - 1] + (m,) + w[i + 1 :]
                    for i0, c0 in enumerate(u):
                        put(kindex(i0, mid), f.mul(sign, f.mul(c, c0)))
            # i = n: counit on the last slot
            sign = f.neg(sign)
            ce = eps[w[-1]]
            if ce != f.zero:
                for i0, c0 in enumerate(u):
                    put(kindex(i0, w[:-1]), f.mul(sign, f.mul(ce, c0)))
            out.append(acc)
        return out

    def aug_on_gens(self):
        f = self.algebra.field
        return Matrix(f, [[f.one]])


class CochainComplex:
    """C^0, ..., C^N with coboundaries d[n]: C^n -> C^{n+1} for n < N."""

    __slots__ = ("field", "dims", "diffs", "coeff_dim")

    def __init__(self, field, dims, diffs, coeff_dim=None):
        self.field = field
        self.dims = list(dims)
        self.diffs = list(diffs)
        self.coeff_dim = coeff_dim
        assert len(self.diffs) == len(self.dims) - 1
        for n, d in enumerate(self.diffs):
            assert d.ncols == self.dims[n] and d.nrows == self.dims[n + 1]

    @property
    def top(self):
        return len(self.dims) - 1

    def check_squares(self):
        for n in range(len(self.diffs) - 1):
            assert (self.diffs[n + 1] @ self.diffs[n]).is_zero(), n
        return True


def hom_complex(res, m, upto):
    """Reduced cochain complex of module maps from a free resolution to m.

    A degree-n cochain is stored by its values on generators, flattened
    generator-major: coordinate (w, t) sits at w*dim(m) + t.
    """
    f = res.algebra.field
    md = m.dim
    dims = [res.ngens(n) * md for n in range(upto + 1)]
    diffs = []
    for n in range(upto):
        decomp = res.gen_decompose(n)
        dgens = res.diff_on_gens(n + 1)
        entries = []
        rho = m.rho
        for g, sparse in enumerate(dgens):
            for kidx, c in sparse.items():
                lam, w = decomp[kidx]
                act = rho[lam]
                for t_out in range(md):
                    arow = act.data[t_out]
                    for t_in in range(md):
                        v = arow[t_in]
                        if v != f.zero:
                            entries.append(
                                (g * md + t_out, w * md + t_in, f.mul(c, v))
                            )
        diffs.append(Matrix.from_entries(f, dims[n + 1], dims[n], entries))
    return CochainComplex(f, dims, diffs, coeff_dim=md)


class CohomologySpace:
    """Kernel mod image at one degree, with pivot-canonical representatives.

    reps columns are cocycles spanning a complement of the image inside
    the kernel; class_of maps a cocycle to its coordinates there.
    """

    __slots__ = ("field", "degree", "dim", "reps", "_imgbasis", "_solver")

    def __init__(self, field, degree, reps, imgbasis):
        self.field = field
        self.degree = degree
        self.reps = reps
        self.dim = reps.ncols
        self._imgbasis = imgbasis
        self._solver = imgbasis.hstack(reps)

    def class_of(self, vec):
        """Quotient coordinates of a cocycle; None if not in the span."""
        sol = solve_many(
            self._solver, Matrix.from_cols(self.field, [vec], nrows=len(vec))
        )
        if sol is None:
            return None
        return sol.col(0)[self._imgbasis.ncols :]

    def representative(self, coords):
        return self.reps.apply(list(coords))

    def basis_classes(self):
        f = self.field
        out = []
        for j in range(self.dim):
            coords = [f.zero] * self.dim
            coords[j] = f.one
            out.append(coords)
        return out


def cohomology(cx, n):
    """Cohomology of a CochainComplex at degree n (needs d^n available)."""
    f = cx.field
    assert n < len(cx.dims)
    if n < cx.top:
        ker = rref_analyze(cx.diffs[n]).kernel
    else:
        ker = Matrix.identity(f, cx.dims[n])
    if n >= 1:
        res = rref_analyze(cx.diffs[n - 1].transpose())
        imgbasis = Matrix.from_cols(
            f, [res.reduced.row(i) for i in range(res.rank)], nrows=cx.dims[n]
        )
    else:
        imgbasis = Matrix.zeros(f, cx.dims[n], 0)
    # pivot completion of the image inside the kernel
    combined = imgbasis.hstack(ker)
    piv = rref_analyze(combined).pivots
    chosen = [p - imgbasis.ncols for p in piv if p >= imgbasis.ncols]
    reps = ker.submatrix(range(ker.nrows), chosen)
    return CohomologySpace(f, n, reps, imgbasis)


def cohomology_dims(cx, upto):
    """Dimensions in degrees 0..upto by rank counting only."""
    ranks = [rank(cx.diffs[n]) for n in range(min(upto + 1, len(cx.diffs)))]
    out = []
    for n in range(upto + 1):
        kdim = cx.dims[n] - (ranks[n] if n < len(ranks) else 0)
        idim = ranks[n - 1] if n >= 1 else 0
        out.append(kdim - idim)
    return out


def lift_chain_map(res, cx, f_init, upto):
    """Lift f_init: target(res) -> target(cx) to a chain map res -> cx.

    Returns generator-image matrices gs[n]: values of the lift on the
    free generators of res in degree n, for 0 <= n <= upto.  cx is an
    AugmentedComplex, exact wherever the lift needs it.
    """
    gs = []
    fulls = []
    assert upto <= cx.length
    # degree 0: aug_cx(g0(gen)) = f_init(aug_res(gen))
    rhs = f_init @ res.aug_on_gens()
    g0 = solve_many(cx.aug, rhs)
    assert g0 is not None, "augmentation lift failed"
    gs.append(g0)
    fulls.append(res.expand(0, g0, cx.terms[0]))
    for n in range(1, upto + 1):
        # d_cx(g_n(gen)) = f_{n-1}(d_res(gen))
        rhs = fulls[n - 1] @ res.diff_gen_matrix(n)
        gn = solve_many(cx.diffs[n], rhs)
        assert gn is not None, "chain lift failed at degree %d" % n
        gs.append(gn)
        fulls.append(res.expand(n, gn, cx.terms[n]))
    return gs, fulls
