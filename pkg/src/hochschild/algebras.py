"""Finite-dimensional associative algebras and their module representations.

An Algebra is structure constants over an exact field plus a unit vector;
a ModuleRep is one matrix per algebra basis element.  Constructors cover
opposites, tensor and enveloping algebras, matrix algebras, regular
bimodules, and tensoring bimodules over the base algebra.
"""

import random
from fractions import Fraction

from .linalg import Matrix, kernel_basis, kronecker, rank, rref_analyze, solve_many


class Algebra:
    """Structure constants b_i b_j = sum_k c[i][j][k] b_k with unit vector."""

    __slots__ = ("field", "dim", "basis", "table", "unit", "tensor_parts")

    def __init__(self, field, basis, table, unit):
        self.field = field
        self.dim = len(basis)
        self.basis = list(basis)
        # table[i][j] is a sparse dict {k: coeff}, zero entries absent
        self.table = [
            [{k: v for k, v in table[i][j].items() if v != field.zero}
             for j in range(self.dim)]
            for i in range(self.dim)
        ]
        self.unit = list(unit)
        assert len(self.unit) == self.dim
        self.tensor_parts = None

    def c(self, i, j, k):
        return self.table[i][j].get(k, self.field.zero)

    def mult(self, u, v):
        """Product of two coordinate vectors."""
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if a == f.zero:
                continue
            for j, b in enumerate(v):
                if b == f.zero:
                    continue
                ab = f.mul(a, b)
                for k, c in self.table[i][j].items():
                    out[k] = f.add(out[k], f.mul(ab, c))
        return out

    def left_matrix(self, i):
        """Matrix of left multiplication by basis element i."""
        f = self.field
        return Matrix.from_entries(
            f, self.dim, self.dim,
            ((k, j, c) for j in range(self.dim)
             for k, c in self.table[i][j].items()),
        )

    def right_matrix(self, j):
        """Matrix of right multiplication by basis element j."""
        f = self.field
        return Matrix.from_entries(
            f, self.dim, self.dim,
            ((k, i, c) for i in range(self.dim)
             for k, c in self.table[i][j].items()),
        )

    def left_action_of(self, vec):
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, a in enumerate(vec):
            if a != f.zero:
                out = out + self.left_matrix(i).scale(a)
        return out

    def right_action_of(self, vec):
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for j, a in enumerate(vec):
            if a != f.zero:
                out = out + self.right_matrix(j).scale(a)
        return out

    def basis_vector(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def __repr__(self):
        return "Algebra(dim=%d over %r)" % (self.dim, self.field)


def check_algebra(a):
    """None if associative and unital; else a description of the first failure."""
    f = a.field
    d = a.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                # sum_m c_ij^m c_mk^l vs sum_m c_jk^m c_im^l, all l at once
                lhs = [f.zero] * d
                for m, c1 in a.table[i][j].items():
                    for l, c2 in a.table[m][k].items():
                        lhs[l] = f.add(lhs[l], f.mul(c1, c2))
                rhs = [f.zero] * d
                for m, c1 in a.table[j][k].items():
                    for l, c2 in a.table[i][m].items():
                        rhs[l] = f.add(rhs[l], f.mul(c1, c2))
                if lhs != rhs:
                    l = next(x for x in range(d) if lhs[x] != rhs[x])
                    return {
                        "kind": "associativity",
                        "at": (i, j, k, l),
                        "lhs": lhs[l],
                        "rhs": rhs[l],
                    }
    for j in range(d):
        left = a.mult(a.unit, a.basis_vector(j))
        if left != a.basis_vector(j):
            return {"kind": "left-unit", "at": j}
        right = a.mult(a.basis_vector(j), a.unit)
        if right != a.basis_vector(j):
            return {"kind": "right-unit", "at": j}
    return None


def opposite(a):
    table = [[a.table[j][i] for j in range(a.dim)] for i in range(a.dim)]
    out = Algebra(a.field, ["%s^op" % b for b in a.basis], table, a.unit)
    return out


def tensor_algebra(a, b):
    """Tensor product algebra, basis lexicographic (i,j) -> i*b.dim + j."""
    assert a.field == b.field
    f = a.field
    d = a.dim * b.dim
    basis = ["%s*%s" % (x, y) for x in a.basis for y in b.basis]
    table = [[{} for _ in range(d)] for _ in range(d)]
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            r = i1 * b.dim + j1
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    s = i2 * b.dim + j2
                    cell = table[r][s]
                    for k1, c1 in a.table[i1][i2].items():
                        for k2, c2 in b.table[j1][j2].items():
                            cell[k1 * b.dim + k2] = f.mul(c1, c2)
    unit = [f.zero] * d
    for i, ua in enumerate(a.unit):
        if ua == f.zero:
            continue
        for j, ub in enumerate(b.unit):
            if ub != f.zero:
                unit[i * b.dim + j] = f.mul(ua, ub)
    out = Algebra(f, basis, table, unit)
    out.tensor_parts = (a, b)
    return out


def enveloping(a):
    return tensor_algebra(a, opposite(a))


def matrix_algebra(a, n):
    """n x n matrices over the algebra; basis (r,s,i) lexicographic."""
    f = a.field
    d = n * n * a.dim
    basis = [
        "E%d%d*%s" % (r, s, lbl)
        for r in range(n) for s in range(n) for lbl in a.basis
    ]
    table = [[{} for _ in range(d)] for _ in range(d)]
    for r in range(n):
        for s in range(n):
            for i in range(a.dim):
                p = (r * n + s) * a.dim + i
                for t in range(n):
                    if t != s:
                        continue
                    for u in range(n):
                        for j in range(a.dim):
                            q = (t * n + u) * a.dim + j
                            cell = table[p][q]
                            for k, c in a.table[i][j].items():
                                cell[(r * n + u) * a.dim + k] = c
    unit = [f.zero] * d
    for r in range(n):
        for i, ui in enumerate(a.unit):
            if ui != f.zero:
                unit[(r * n + r) * a.dim + i] = ui
    return Algebra(f, basis, table, unit)


class ModuleRep:
    """A module over an algebra: one action matrix per basis element."""

    __slots__ = ("algebra", "dim", "rho")

    def __init__(self, algebra, rho):
        self.algebra = algebra
        self.rho = list(rho)
        assert len(self.rho) == algebra.dim
        self.dim = self.rho[0].nrows if self.rho else 0
        for m in self.rho:
            assert m.nrows == m.ncols == self.dim

    def act_matrix(self, vec):
        """Action matrix of an algebra element given by coordinates."""
        f = self.algebra.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, a in enumerate(vec):
            if a != f.zero:
                out = out + self.rho[i].scale(a)
        return out

    def act(self, vec, m):
        return self.act_matrix(vec).apply(m)

    def __repr__(self):
        return "ModuleRep(dim=%d over %r)" % (self.dim, self.algebra)


def check_module(m):
    """None if the action respects unit and products; else first failure."""
    a = m.algebra
    f = a.field
    ident = Matrix.identity(f, m.dim)
    if m.act_matrix(a.unit) != ident:
        return {"kind": "unit-action"}
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.rho[i] @ m.rho[j]
            rhs = Matrix.zeros(f, m.dim, m.dim)
            for k, c in a.table[i][j].items():
                rhs = rhs + m.rho[k].scale(c)
            if lhs != rhs:
                return {"kind": "product-action", "at": (i, j)}
    return None


def free_module(algebra, rank_):
    """Direct sum of rank_ copies of the left regular representation."""
    ident = Matrix.identity(algebra.field, rank_)
    return ModuleRep(
        algebra, [kronecker(ident, algebra.left_matrix(i)) for i in range(algebra.dim)]
    )


def regular_bimodule(a):
    """A as a module over its enveloping algebra A (x) A^op."""
    env = enveloping(a)
    rho = []
    for i in range(a.dim):
        li = a.left_matrix(i)
        for j in range(a.dim):
            rho.append(li @ a.right_matrix(j))
    return ModuleRep(env, rho)


def direct_sum_modules(mods):
    assert mods
    a = mods[0].algebra
    f = a.field
    out = []
    for i in range(a.dim):
        blocks = [m.rho[i] for m in mods]
        total = sum(m.dim for m in mods)
        big = Matrix.zeros(f, total, total)
        off = 0
        for b in blocks:
            for r in range(b.nrows):
                big.data[off + r][off : off + b.ncols] = b.data[r]
            off += b.nrows
        out.append(big)
    return ModuleRep(a, out)


def zero_module(algebra):
    return ModuleRep(algebra, [Matrix.zeros(algebra.field, 0, 0)] * algebra.dim)


def submodule(m, w):
    """Submodule spanned by the columns of w.

    Returns (sub, incl) with incl a dim(m) x dim(sub) matrix whose columns
    are the pivot-canonical basis.  Asserts invariance under the action.
    """
    res = rref_analyze(w.transpose())
    rows = [res.reduced.row(i) for i in range(res.rank)]
    incl = Matrix(m.algebra.field, rows, copy=False, ncols=m.dim).transpose()
    rho = []
    for i in range(m.algebra.dim):
        img = m.rho[i] @ incl
        sol = solve_many(incl, img)
        assert sol is not None, "subspace not invariant"
        rho.append(sol)
    return ModuleRep(m.algebra, rho), incl


def quotient_module(m, w):
    """Quotient of m by the invariant subspace spanned by columns of w.

    Returns (quot, proj, sect) with proj @ sect the identity on the
    quotient and proj vanishing on the subspace.
    """
    f = m.algebra.field
    res = rref_analyze(w.transpose())
    sub_rows = [res.reduced.row(i) for i in range(res.rank)]
    pivots = res.pivots
    pivset = set(pivots)
    freecols = [c for c in range(m.dim) if c not in pivset]
    qdim = len(freecols)
    # column c of proj = free coordinates of (e_c reduced mod subspace)
    proj = Matrix.zeros(f, qdim, m.dim)
    for c in range(m.dim):
        vec = [f.zero] * m.dim
        vec[c] = f.one
        for ri, pc in enumerate(pivots):
            coef = vec[pc]
            if coef != f.zero:
                row = sub_rows[ri]
                for j in range(m.dim):
                    if row[j] != f.zero:
                        vec[j] = f.sub(vec[j], f.mul(coef, row[j]))
        for qi, fc in enumerate(freecols):
            proj.data[qi][c] = vec[fc]
    sect = Matrix.zeros(f, m.dim, qdim)
    for qi, c in enumerate(freecols):
        sect.data[c][qi] = f.one
    rho = []
    for i in range(m.algebra.dim):
        img = m.rho[i] @ w
        assert solve_many(w, img) is not None, "subspace not invariant"
        rho.append(proj @ m.rho[i] @ sect)
    quot = ModuleRep(m.algebra, rho)
    return quot, proj, sect


def module_hom_space(m, n):
    """Basis of module maps m -> n, each a dim(n) x dim(m) matrix."""
    f = m.algebra.field
    im_ = Matrix.identity(f, m.dim)
    in_ = Matrix.identity(f, n.dim)
    stacked = None
    for i in range(m.algebra.dim):
        c1 = kronecker(in_, m.rho[i].transpose())
        c2 = kronecker(n.rho[i], im_)
        block = c1 - c2
        stacked = block if stacked is None else stacked.vstack(block)
    ker = kernel_basis(stacked)
    out = []
    for j in range(ker.ncols):
        v = ker.col(j)
        out.append(
            Matrix(
                f,
                [v[r * m.dim : (r + 1) * m.dim] for r in range(n.dim)],
                ncols=m.dim,
            )
        )
    return out


def is_module_map(m, n, t):
    """Check t: m -> n commutes with all actions."""
    for i in range(m.algebra.dim):
        if t @ m.rho[i] != n.rho[i] @ t:
            return False
    return True


def bimodule_left_action(a, m, vec):
    """Left action of an algebra element on a bimodule over enveloping(a)."""
    f = a.field
    env_vec = [f.zero] * (a.dim * a.dim)
    for i, x in enumerate(vec):
        if x == f.zero:
            continue
        for j, u in enumerate(a.unit):
            if u != f.zero:
                env_vec[i * a.dim + j] = f.add(env_vec[i * a.dim + j], f.mul(x, u))
    return m.act_matrix(env_vec)


def bimodule_right_action(a, m, vec):
    """Right action of an algebra element on a bimodule over enveloping(a)."""
    f = a.field
    env_vec = [f.zero] * (a.dim * a.dim)
    for j, x in enumerate(vec):
        if x == f.zero:
            continue
        for i, u in enumerate(a.unit):
            if u != f.zero:
                env_vec[i * a.dim + j] = f.add(env_vec[i * a.dim + j], f.mul(u, x))
    return m.act_matrix(env_vec)


def tensor_over_algebra(a, m, n):
    """Bimodule tensor m (x)_a n for bimodules over enveloping(a).

    Returns (tens, proj, sect): tens is the quotient of the plain tensor
    product by the balancing relations, with the outer bimodule structure;
    proj and sect relate it to the full Kronecker space.
    """
    f = a.field
    big = m.dim * n.dim
    rels = []
    for s in range(a.dim):
        ra = bimodule_right_action(a, m, a.basis_vector(s))
        la = bimodule_left_action(a, n, a.basis_vector(s))
        for i in range(m.dim):
            for j in range(n.dim):
                v = [f.zero] * big
                for k in range(m.dim):
                    x = ra.data[k][i]
                    if x != f.zero:
                        v[k * n.dim + j] = f.add(v[k * n.dim + j], x)
                for l in range(n.dim):
                    x = la.data[l][j]
                    if x != f.zero:
                        v[i * n.dim + l] = f.sub(v[i * n.dim + l], x)
                if any(x != f.zero for x in v):
                    rels.append(v)
    w = Matrix.from_cols(f, rels, nrows=big)
    # outer action on the Kronecker space: (a (x) b^op) acts by the left
    # action on the m factor and the right action on the n factor
    env = m.algebra
    rho_big = []
    for i in range(a.dim):
        lm = bimodule_left_action(a, m, a.basis_vector(i))
        for j in range(a.dim):
            rn = bimodule_right_action(a, n, a.basis_vector(j))
            rho_big.append(kronecker(lm, rn))
    big_mod = ModuleRep(env, rho_big)
    quot, proj, sect = quotient_module(big_mod, w)
    return quot, proj, sect


def random_invertible(field, n, rng):
    while True:
        if field.kind == "rationals":
            m = Matrix(field, [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                               for _ in range(n)])
        else:
            m = Matrix(field, [[rng.randrange(field.p) for _ in range(n)]
                               for _ in range(n)])
        if rank(m) == n:
            return m


def conjugate_algebra(a, p):
    """Transport structure along the basis change b_i' = sum_j p[j][i] b_j."""
    f = a.field
    pinv = solve_many(p, Matrix.identity(f, a.dim))
    assert pinv is not None
    d = a.dim
    table = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(d):
        bi = p.col(i)
        for j in range(d):
            bj = p.col(j)
            prod = a.mult(bi, bj)
            coords = pinv.apply(prod)
            table[i][j] = {k: c for k, c in enumerate(coords) if c != f.zero}
    unit = pinv.apply(a.unit)
    return Algebra(f, ["r%d" % i for i in range(d)], table, unit)


def dual_numbers(field):
    """k[x]/(x^2), basis (1, x)."""
    z, o = field.zero, field.one
    table = [[{0: o}, {1: o}], [{1: o}, {}]]
    return Algebra(field, ["1", "x"], table, [o, z])


def truncated_polynomial(field, n):
    """k[x]/(x^n), basis 1, x, ..., x^{n-1}."""
    o = field.one
    table = [[{i + j: o} if i + j < n else {} for j in range(n)] for i in range(n)]
    unit = [field.zero] * n
    unit[0] = o
    return Algebra(field, ["x^%d" % i for i in range(n)], table, unit)


def upper_triangular2(field):
    """2x2 upper triangular matrices: basis e11, e22, e12."""
    o = field.one
    # e11*e11=e11, e11*e12=e12, e22*e22=e22, e12*e22=e12
    table = [
        [{0: o}, {}, {2: o}],
        [{}, {1: o}, {}],
        [{}, {2: o}, {}],
    ]
    return Algebra(field, ["e11", "e22", "e12"], table, [o, o, field.zero])


def random_algebra(field, dim, seed):
    """Seeded associative unital algebra: a known one in a random basis."""
    rng = random.Random(seed)
    if dim == 2:
        base = dual_numbers(field)
    elif dim == 3:
        base = upper_triangular2(field) if rng.random() < 0.5 else truncated_polynomial(field, 3)
    else:
        base = truncated_polynomial(field, dim)
    out = conjugate_algebra(base, random_invertible(field, dim, rng))
    assert check_algebra(out) is None
    return out
