"""Bialgebras and Hopf algebras on a fixed basis.

A bialgebra packs an algebra with a comultiplication matrix, a counit
row, and optionally an antipode, a parity grading (Koszul signs for the
multiplicativity check), and a distinguished R-matrix.  On top of that
this module provides the R-matrix axioms, the k-linear tensor product
of modules through the comultiplication with its braiding, the monoidal
context those live in, and the split embedding of trivial-coefficient
cohomology into the two-sided (Hochschild) theory.

Tensor power elements are dicts mapping index tuples to coefficients;
position p of a tuple indexes the p-th tensor factor.
"""

from .linalg import Matrix, kronecker, solve_many
from .algebras import (
    Algebra,
    ModuleRep,
    check_algebra,
    check_module,
    enveloping,
    is_module_map,
    regular_bimodule,
)
from .complexes import BarResolution, TrivialBarResolution, hom_complex
from .contexts import MonoidalContext, TensorObj
from .extensions import Extension, check_admissible, cocycle_to_extension, extension_to_cocycle


class Bialgebra:
    """Algebra plus comultiplication and counit on the same basis.

    comul is dim^2 x dim, column i the image of basis element i with
    coordinate j*dim + k at basis_j (x) basis_k.  counit is a plain list
    of field elements.  antipode, parity and r are optional; parity
    switches the multiplicativity check on the tensor square to the
    Koszul-signed product.
    """

    __slots__ = ("algebra", "comul", "counit", "antipode", "parity", "r")

    def __init__(self, algebra, comul, counit, antipode=None, parity=None, r=None):
        d = algebra.dim
        assert comul.nrows == d * d and comul.ncols == d
        assert len(counit) == d
        if antipode is not None:
            assert antipode.nrows == d and antipode.ncols == d
        if parity is not None:
            assert len(parity) == d
        if r is not None:
            assert len(r) == d * d
        self.algebra = algebra
        self.comul = comul
        self.counit = list(counit)
        self.antipode = antipode
        self.parity = list(parity) if parity is not None else None
        self.r = list(r) if r is not None else None

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    def comul_of(self, vec):
        """Comultiplication of a coefficient vector as a pair dict."""
        f = self.field
        d = self.dim
        out = {}
        for i, c in enumerate(vec):
            if c == f.zero:
                continue
            for row in range(d * d):
                x = self.comul.data[row][i]
                if x == f.zero:
                    continue
                key = (row // d, row % d)
                s = f.add(out.get(key, f.zero), f.mul(c, x))
                if s == f.zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def counit_of(self, vec):
        f = self.field
        acc = f.zero
        for i, c in enumerate(vec):
            acc = f.add(acc, f.mul(c, self.counit[i]))
        return acc


def tensor_elem_mult(a, e1, e2, parity=None):
    """Product of two tensor power elements, componentwise in a.

    With parity the Koszul rule applies: moving the q-th factor of e2
    past the p-th factor of e1 for q < p costs the product of their
    parities in the exponent of -1.
    """
    f = a.field
    out = {}
    for t1, c1 in e1.items():
        for t2, c2 in e2.items():
            coeff = f.mul(c1, c2)
            if coeff == f.zero:
                continue
            if parity is not None:
                exp = 0
                for p in range(len(t1)):
                    for q in range(p):
                        exp += parity[t1[p]] * parity[t2[q]]
                if exp % 2:
                    coeff = f.neg(coeff)
            acc = {(): coeff}
            for p in range(len(t1)):
                cell = a.table[t1[p]][t2[p]]
                nxt = {}
                for key, c in acc.items():
                    for k, ck in cell.items():
                        nk = key + (k,)
                        s = f.add(nxt.get(nk, f.zero), f.mul(c, ck))
                        if s == f.zero:
                            nxt.pop(nk, None)
                        else:
                            nxt[nk] = s
                acc = nxt
                if not acc:
                    break
            for key, c in acc.items():
                s = f.add(out.get(key, f.zero), c)
                if s == f.zero:
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def tensor_elem_equal(f, e1, e2):
    keys = set(e1) | set(e2)
    return all(e1.get(k, f.zero) == e2.get(k, f.zero) for k in keys)


def _unit_elem(a, width):
    """Unit of the width-fold tensor power as an element dict."""
    f = a.field
    out = {}
    acc = {(): f.one}
    for _ in range(width):
        nxt = {}
        for key, c in acc.items():
            for i, u in enumerate(a.unit):
                if u == f.zero:
                    continue
                nxt[key + (i,)] = f.mul(c, u)
        acc = nxt
    return acc


def _comul_at(b, elem, pos):
    """Apply the comultiplication to one slot of a tensor element."""
    f = b.field
    d = b.dim
    out = {}
    for t, c in elem.items():
        for row in range(d * d):
            x = b.comul.data[row][t[pos]]
            if x == f.zero:
                continue
            nt = t[:pos] + (row // d, row % d) + t[pos + 1:]
            s = f.add(out.get(nt, f.zero), f.mul(c, x))
            if s == f.zero:
                out.pop(nt, None)
            else:
                out[nt] = s
    return out


def check_bialgebra(b):
    """Verdict dict for the bialgebra axioms, plus antipode if present."""
    a = b.algebra
    f = a.field
    d = a.dim
    report = {}
    report["algebra"] = check_algebra(a) is None

    unit_pair = b.comul_of(a.unit)
    report["comul_unital"] = tensor_elem_equal(f, unit_pair, _unit_elem(a, 2))
    report["counit_unital"] = b.counit_of(a.unit) == f.one

    ok = True
    for i in range(d):
        delta = b.comul_of(a.basis_vector(i))
        lhs = _comul_at(b, delta, 0)
        rhs = _comul_at(b, delta, 1)
        if not tensor_elem_equal(f, lhs, rhs):
            ok = False
            break
    report["coassociative"] = ok

    ok = True
    for i in range(d):
        delta = b.comul_of(a.basis_vector(i))
        left = [f.zero] * d
        right = [f.zero] * d
        for (j, k), c in delta.items():
            left[k] = f.add(left[k], f.mul(b.counit[j], c))
            right[j] = f.add(right[j], f.mul(c, b.counit[k]))
        e_i = a.basis_vector(i)
        if left != e_i or right != e_i:
            ok = False
            break
    report["counit_laws"] = ok

    ok = True
    for i in range(d):
        di = b.comul_of(a.basis_vector(i))
        for j in range(d):
            dj = b.comul_of(a.basis_vector(j))
            prod = tensor_elem_mult(a, di, dj, parity=b.parity)
            direct = b.comul_of(a.mult(a.basis_vector(i), a.basis_vector(j)))
            if not tensor_elem_equal(f, prod, direct):
                ok = False
                break
        if not ok:
            break
    report["comul_multiplicative"] = ok

    ok = True
    for i in range(d):
        for j in range(d):
            lhs = b.counit_of(a.mult(a.basis_vector(i), a.basis_vector(j)))
            if lhs != f.mul(b.counit[i], b.counit[j]):
                ok = False
                break
        if not ok:
            break
    report["counit_multiplicative"] = ok

    if b.antipode is not None:
        s = b.antipode
        ok = True
        for i in range(d):
            delta = b.comul_of(a.basis_vector(i))
            left = [f.zero] * d
            right = [f.zero] * d
            for (j, k), c in delta.items():
                sj = s.col(j)
                sk = s.col(k)
                term = a.mult([f.mul(c, x) for x in sj], a.basis_vector(k))
                left = [f.add(p, q) for p, q in zip(left, term)]
                term = a.mult([f.mul(c, x) for x in a.basis_vector(j)], sk)
                right = [f.add(p, q) for p, q in zip(right, term)]
            target = [f.mul(b.counit[i], u) for u in a.unit]
            if left != target or right != target:
                ok = False
                break
        report["antipode"] = ok

    report["ok"] = all(report.values())
    return report


def _r_elem(b, r):
    f = b.field
    d = b.dim
    out = {}
    for idx, c in enumerate(r):
        if c != f.zero:
            out[(idx // d, idx % d)] = c
    return out


def _flip_elem(e):
    return {t[::-1]: c for t, c in e.items()}


def check_r_matrix(b, r=None):
    """Quasitriangularity report for an R-matrix on a bialgebra.

    Checks the intertwining identity, the two coproduct expansion laws,
    invertibility inside the tensor square algebra, and two competing
    normalizations through the counit, reported separately: the slotwise
    one (eps (x) eps)(r) = 1 and the multiplied one eps(r1 r2) = 1.
    """
    a = b.algebra
    f = a.field
    d = a.dim
    if r is None:
        r = b.r
    assert r is not None and len(r) == d * d
    re = _r_elem(b, r)
    report = {}

    ok = True
    for i in range(d):
        delta = b.comul_of(a.basis_vector(i))
        flipped = _flip_elem(delta)
        lhs = tensor_elem_mult(a, re, delta)
        rhs = tensor_elem_mult(a, flipped, re)
        if not tensor_elem_equal(f, lhs, rhs):
            ok = False
            break
    report["intertwines_comul"] = ok

    def place(pattern):
        # pattern maps slot -> "a"|"b"|"1" to build r_{..} in the cube
        out = {}
        for (j, k), c in re.items():
            for key0, cu in _unit_elem(a, 1).items():
                t = []
                for slot in pattern:
                    t.append({"a": j, "b": k, "1": key0[0]}[slot])
                nt = tuple(t)
                s = f.add(out.get(nt, f.zero), f.mul(c, cu))
                if s == f.zero:
                    out.pop(nt, None)
                else:
                    out[nt] = s
        return out

    r12 = place("ab1")
    r13 = place("a1b")
    r23 = place("1ab")
    lhs2 = _comul_at(b, re, 0)
    rhs2 = tensor_elem_mult(a, r13, r23)
    report["coproduct_left"] = tensor_elem_equal(f, lhs2, rhs2)
    lhs3 = _comul_at(b, re, 1)
    rhs3 = tensor_elem_mult(a, r13, r12)
    report["coproduct_right"] = tensor_elem_equal(f, lhs3, rhs3)

    acc = f.zero
    for (j, k), c in re.items():
        acc = f.add(acc, f.mul(c, f.mul(b.counit[j], b.counit[k])))
    report["counit_slotwise_normalized"] = acc == f.one

    acc = f.zero
    for (j, k), c in re.items():
        prod = a.mult(a.basis_vector(j), a.basis_vector(k))
        acc = f.add(acc, f.mul(c, b.counit_of(prod)))
    report["counit_product_normalized"] = acc == f.one

    # invertibility in the tensor square: solve r * s = 1 and confirm
    # the two-sided identity
    lmat = Matrix.zeros(f, d * d, d * d)
    for col in range(d * d):
        prod = tensor_elem_mult(a, re, {(col // d, col % d): f.one})
        for (p, q), c in prod.items():
            lmat.data[p * d + q][col] = c
    one2 = [f.zero] * (d * d)
    for t, c in _unit_elem(a, 2).items():
        one2[t[0] * d + t[1]] = c
    sol = solve_many(lmat, Matrix.from_cols(f, [one2], nrows=d * d))
    if sol is None:
        report["invertible"] = False
    else:
        svec = sol.col(0)
        se = {}
        for idx, c in enumerate(svec):
            if c != f.zero:
                se[(idx // d, idx % d)] = c
        back = tensor_elem_mult(a, se, re)
        one_e = _unit_elem(a, 2)
        report["invertible"] = tensor_elem_equal(f, back, one_e)

    axioms = (
        report["intertwines_comul"]
        and report["coproduct_left"]
        and report["coproduct_right"]
    )
    report["semi"] = axioms and report["counit_slotwise_normalized"]
    report["canonical"] = axioms and report["invertible"]
    return report


def trivial_module(b):
    """The base field as a module through the counit."""
    f = b.field
    return ModuleRep(
        b.algebra, [Matrix(f, [[b.counit[i]]]) for i in range(b.dim)]
    )


def boxtimes_modules(b, m, n):
    """Tensor product of modules over the bialgebra, action through
    the comultiplication; index (i, j) -> i*n.dim + j."""
    f = b.field
    d = b.dim
    rho = []
    for i in range(d):
        acc = Matrix.zeros(f, m.dim * n.dim, m.dim * n.dim)
        for (j, k), c in b.comul_of(b.algebra.basis_vector(i)).items():
            acc = acc + kronecker(m.rho[j], n.rho[k]).scale(c)
        rho.append(acc)
    return ModuleRep(b.algebra, rho)


def flip_map(f, dm, dn):
    """Coordinate flip m (x) n -> n (x) m."""
    out = Matrix.zeros(f, dm * dn, dm * dn)
    for i in range(dm):
        for j in range(dn):
            out.data[j * dm + i][i * dn + j] = f.one
    return out


def braiding_map(b, m, n, r):
    """Braiding m [x] n -> n [x] m: act by the R-matrix, then flip."""
    f = b.field
    d = b.dim
    act = Matrix.zeros(f, m.dim * n.dim, m.dim * n.dim)
    for (j, k), c in _r_elem(b, r).items():
        act = act + kronecker(m.rho[j], n.rho[k]).scale(c)
    return flip_map(f, m.dim, n.dim) @ act


class HopfContext(MonoidalContext):
    """Modules over a bialgebra with the comultiplication tensor
    product; the braiding comes from a fixed R-matrix."""

    def __init__(self, b, r=None):
        self.bialgebra = b
        self.field = b.field
        self.algebra = b.algebra
        self.unit = trivial_module(b)
        self.r = list(r) if r is not None else (list(b.r) if b.r else None)

    def tensor(self, m1, m2):
        mod = boxtimes_modules(self.bialgebra, m1, m2)
        ident = Matrix.identity(self.field, m1.dim * m2.dim)
        return TensorObj(mod, ident, ident, m1, m2)

    def left_unitor(self, tobj):
        # unit [x] M -> M along 1 (x) v -> v: the identity in coordinates
        out = Matrix.identity(self.field, tobj.right.dim)
        assert is_module_map(tobj.module, tobj.right, out)
        return out

    def right_unitor(self, tobj):
        out = Matrix.identity(self.field, tobj.left.dim)
        assert is_module_map(tobj.module, tobj.left, out)
        return out

    def braiding(self, tsrc, ttgt):
        assert self.r is not None, "no R-matrix fixed for this context"
        m, n = tsrc.left, tsrc.right
        assert ttgt.left is n and ttgt.right is m
        out = braiding_map(self.bialgebra, m, n, self.r)
        assert is_module_map(tsrc.module, ttgt.module, out)
        return out


def functor_LB(b, m, env=None):
    """Tensor a module with the algebra: m (x) B with the diagonal left
    action through the comultiplication and right multiplication on the
    second slot.  The result is a bimodule, i.e. a module over the
    enveloping algebra, index (v, j) -> v*dim + j."""
    a = b.algebra
    f = a.field
    d = a.dim
    if env is None:
        env = enveloping(a)
    lmats = [a.left_matrix(q) for q in range(d)]
    rmats = [a.right_matrix(j) for j in range(d)]
    rho = []
    for i in range(d):
        delta = b.comul_of(a.basis_vector(i))
        for j in range(d):
            acc = Matrix.zeros(f, m.dim * d, m.dim * d)
            for (p, q), c in delta.items():
                acc = acc + kronecker(m.rho[p], lmats[q] @ rmats[j]).scale(c)
            rho.append(acc)
    out = ModuleRep(env, rho)
    bad = check_module(out)
    assert bad is None, (
        "tensoring with the algebra did not produce a module; the "
        "comultiplication is not plainly multiplicative: %r" % (bad,)
    )
    return out


class Embedding:
    """Split embedding of trivial-coefficient cohomology classes into
    the two-sided theory over the enveloping algebra.

    A reduced cocycle on the one-sided free resolution becomes an
    extension of the trivial module, every term is tensored with the
    algebra, the ends are read as the regular bimodule, and the class
    is read back off the two-sided free resolution.
    """

    def __init__(self, b):
        check = check_bialgebra(b)
        assert check["ok"], "not a bialgebra: %r" % (check,)
        self.b = b
        a = b.algebra
        self.triv = TrivialBarResolution(a, b.counit)
        self.k = self.triv.target
        self.env = enveloping(a)
        self.reg = regular_bimodule(a)
        self.bar = BarResolution(a)
        self._hcx = None

    def trivial_cochain_complex(self, upto):
        if self._hcx is None or self._hcx.top < upto:
            self._hcx = hom_complex(self.triv, self.k, upto)
        return self._hcx

    def cocycle_matrix(self, vec, n):
        """Reshape a flat one-sided cochain vector to a reduced cocycle."""
        f = self.b.field
        return Matrix(f, [list(vec)], copy=False, ncols=self.triv.ngens(n))

    def embed(self, phi, n):
        """Image of the degree-n reduced cocycle phi, as a reduced
        two-sided cocycle over the enveloping algebra."""
        b = self.b
        a = b.algebra
        f = a.field
        d = a.dim
        if n == 0:
            # scalar maps of the trivial module go to central multiplications
            col = [f.mul(phi.data[0][0], u) for u in a.unit]
            return Matrix(f, [[v] for v in col], copy=False, ncols=1)
        ext = cocycle_to_extension(self.triv, self.k, phi, n)
        mids = [functor_LB(b, m, self.env) for m in ext.mids]
        ident = Matrix.identity(f, d)
        maps = [kronecker(mp, ident) for mp in ext.maps]
        for end in (ext.y, ext.x):
            endmod = functor_LB(b, end, self.env)
            assert all(
                endmod.rho[e] == self.reg.rho[e] for e in range(d * d)
            ), "end is not the regular bimodule on the nose"
        image = Extension(self.env, n, self.reg, self.reg, mids, maps)
        check_admissible(image)
        return extension_to_cocycle(self.bar, image)


def trivial_cup(b, phi, m, psi, n):
    """Cup product on trivial-coefficient cochains: evaluate the two
    factors on the front and back of each generator word."""
    f = b.field
    d = b.dim
    dm, dn = d ** m, d ** n
    out = Matrix.zeros(f, 1, dm * dn)
    for wf in range(dm):
        x = phi.data[0][wf]
        if x == f.zero:
            continue
        for wb in range(dn):
            out.data[0][wf * dn + wb] = f.mul(x, psi.data[0][wb])
    return out


def group_algebra(field, table):
    """Group algebra of a finite group given by its multiplication
    table (a Latin square with identity at index 0); group-likes as
    basis, inversion as antipode, 1 (x) 1 as R-matrix."""
    n = len(table)
    assert all(len(row) == n for row in table)
    assert all(sorted(row) == list(range(n)) for row in table), "not a Latin square"
    assert all(sorted(col) == list(range(n)) for col in zip(*table))
    assert all(table[0][j] == j and table[j][0] == j for j in range(n)), (
        "index 0 must be the identity"
    )
    f = field
    labels = ["1"] + ["g%d" % i for i in range(1, n)]
    mtable = [[{table[i][j]: f.one} for j in range(n)] for i in range(n)]
    unit = [f.one] + [f.zero] * (n - 1)
    alg = Algebra(f, labels, mtable, unit)
    comul = Matrix.zeros(f, n * n, n)
    for i in range(n):
        comul.data[i * n + i][i] = f.one
    counit = [f.one] * n
    antipode = Matrix.zeros(f, n, n)
    for i in range(n):
        inv = table[i].index(0)
        antipode.data[inv][i] = f.one
    r = [f.zero] * (n * n)
    r[0] = f.one
    return Bialgebra(alg, comul, counit, antipode=antipode, r=r)


def cyclic_group(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def taft(field, n=2, zeta=None):
    """Taft algebra of dimension n^2: grouplike g of order n and a
    skew-primitive x with x^n = 0 and xg = zeta gx."""
    f = field
    if zeta is None:
        assert n == 2
        zeta = f.neg(f.one)
    # zeta must be a primitive n-th root of unity
    acc = f.one
    for _ in range(1, n):
        acc = f.mul(acc, zeta)
        assert acc != f.one, "root of unity is not primitive"
    assert f.mul(acc, zeta) == f.one, "not an n-th root of unity"

    d = n * n

    def idx(i, j):
        return j * n + i

    def lbl(i, j):
        gi = "" if i == 0 else ("g" if i == 1 else "g%d" % i)
        xj = "" if j == 0 else ("x" if j == 1 else "x%d" % j)
        return (gi + xj) or "1"

    labels = [None] * d
    for i in range(n):
        for j in range(n):
            labels[idx(i, j)] = lbl(i, j)
    table = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for p in range(n):
                for q in range(n):
                    if j + q >= n:
                        continue
                    c = f.one
                    for _ in range(j * p):
                        c = f.mul(c, zeta)
                    table[idx(i, j)][idx(p, q)][idx((i + p) % n, j + q)] = c
    unit = [f.zero] * d
    unit[idx(0, 0)] = f.one
    alg = Algebra(f, labels, table, unit)

    ig, ix = idx(1, 0), idx(0, 1)
    dg = {(ig, ig): f.one}
    dx = {(ix, idx(0, 0)): f.one, (ig, ix): f.one}
    comul = Matrix.zeros(f, d * d, d)
    for i in range(n):
        for j in range(n):
            acc = _unit_elem(alg, 2)
            for _ in range(i):
                acc = tensor_elem_mult(alg, acc, dg)
            for _ in range(j):
                acc = tensor_elem_mult(alg, acc, dx)
            for (p, q), c in acc.items():
                comul.data[p * d + q][idx(i, j)] = c
    counit = [f.zero] * d
    for i in range(n):
        counit[idx(i, 0)] = f.one
    # antipode: S(g) = g^(n-1), S(x) = -g^(n-1) x, reversed on products
    sg = alg.basis_vector(idx(n - 1, 0))
    sx = [f.neg(c) for c in alg.basis_vector(idx(n - 1, 1))]
    antipode = Matrix.zeros(f, d, d)
    for i in range(n):
        for j in range(n):
            vec = list(alg.unit)
            for _ in range(j):
                vec = alg.mult(vec, sx)
            for _ in range(i):
                vec = alg.mult(vec, sg)
            for t in range(d):
                antipode.data[t][idx(i, j)] = vec[t]
    return Bialgebra(alg, comul, counit, antipode=antipode)


def taft_r_matrix(b, alpha):
    """R-matrix family of the four-dimensional Taft algebra."""
    f = b.field
    d = b.dim
    assert d == 4, "R-matrices exist only for the smallest Taft algebra"
    half = f.inv(f.add(f.one, f.one))
    one, g, x, gx = 0, 1, 2, 3
    r = [f.zero] * (d * d)

    def put(j, k, c):
        r[j * d + k] = c

    put(one, one, half)
    put(one, g, half)
    put(g, one, half)
    put(g, g, f.neg(half))
    ah = f.mul(alpha, half)
    put(x, x, ah)
    put(x, gx, f.neg(ah))
    put(gx, x, ah)
    put(gx, gx, ah)
    return r


def exterior(field, n):
    """Exterior algebra on n primitive generators, basis indexed by
    bitmask with ascending factors; graded via the word-length parity."""
    f = field
    d = 2 ** n

    def sign_exp(s, t):
        exp = 0
        for i in range(n):
            if t & (1 << i):
                exp += bin(s >> (i + 1)).count("1")
        return exp

    labels = []
    for mask in range(d):
        word = "".join("x%d" % (i + 1) for i in range(n) if mask & (1 << i))
        labels.append(word or "1")
    table = [[{} for _ in range(d)] for _ in range(d)]
    for s in range(d):
        for t in range(d):
            if s & t:
                continue
            c = f.one if sign_exp(s, t) % 2 == 0 else f.neg(f.one)
            table[s][t][s | t] = c
    unit = [f.one] + [f.zero] * (d - 1)
    alg = Algebra(f, labels, table, unit)
    parity = [bin(mask).count("1") % 2 for mask in range(d)]

    comul = Matrix.zeros(f, d * d, d)
    for mask in range(d):
        acc = _unit_elem(alg, 2)
        for i in range(n):
            if mask & (1 << i):
                gen = 1 << i
                dx = {(gen, 0): f.one, (0, gen): f.one}
                acc = tensor_elem_mult(alg, acc, dx, parity=parity)
        for (p, q), c in acc.items():
            comul.data[p * d + q][mask] = c
    counit = [f.one] + [f.zero] * (d - 1)
    antipode = Matrix.zeros(f, d, d)
    for mask in range(d):
        k = bin(mask).count("1")
        antipode.data[mask][mask] = f.one if k % 2 == 0 else f.neg(f.one)
    return Bialgebra(alg, comul, counit, antipode=antipode, parity=parity)
