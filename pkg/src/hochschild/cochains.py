"""Hochschild cochains with algebra coefficients and their graded operations.

A degree-m cochain is a dim(A) x dim(A)^m matrix: column w holds the value
on the w-th basis tuple, tuples ordered lexicographically with the first
slot most significant.  The coboundary here is written directly from the
two-sided action formula, independent of the resolution machinery, so the
two can check each other.
"""

from fractions import Fraction

from . import signs
from .complexes import BarResolution, cohomology, hom_complex
from .linalg import Matrix


class Cochain:
    """A Hochschild cochain of an algebra with coefficients in itself."""

    __slots__ = ("algebra", "degree", "mat")

    def __init__(self, algebra, degree, mat):
        assert mat.nrows == algebra.dim
        assert mat.ncols == algebra.dim ** degree
        self.algebra = algebra
        self.degree = degree
        self.mat = mat

    @classmethod
    def zero(cls, algebra, degree):
        return cls(
            algebra, degree,
            Matrix.zeros(algebra.field, algebra.dim, algebra.dim ** degree),
        )

    @classmethod
    def unit(cls, algebra):
        """The unit of the algebra as a degree-0 cochain."""
        return cls(
            algebra, 0,
            Matrix.from_cols(algebra.field, [algebra.unit], nrows=algebra.dim),
        )

    def value(self, word):
        """Value on a basis tuple given as a tuple of indices."""
        return self.mat.col(_windex(self.algebra.dim, word))

    def vec(self):
        """Flatten, tuple-major: coordinate (w, t) at w*dim + t."""
        d = self.algebra.dim
        out = []
        for w in range(self.mat.ncols):
            for t in range(d):
                out.append(self.mat.data[t][w])
        return out

    def is_zero(self):
        return self.mat.is_zero()

    def __add__(self, other):
        assert self.degree == other.degree
        return Cochain(self.algebra, self.degree, self.mat + other.mat)

    def __sub__(self, other):
        assert self.degree == other.degree
        return Cochain(self.algebra, self.degree, self.mat - other.mat)

    def scale(self, c):
        return Cochain(self.algebra, self.degree, self.mat.scale(c))

    def neg(self):
        return Cochain(self.algebra, self.degree, self.mat.neg())

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.mat == other.mat
        )


def _windex(d, word):
    idx = 0
    for s in word:
        idx = idx * d + s
    return idx


def _words(d, n):
    if n == 0:
        yield ()
        return
    for w in _words(d, n - 1):
        for i in range(d):
            yield w + (i,)


def from_vec(algebra, degree, v):
    d = algebra.dim
    ncols = d ** degree
    assert len(v) == d * ncols
    mat = Matrix.zeros(algebra.field, d, ncols)
    for w in range(ncols):
        for t in range(d):
            mat.data[t][w] = v[w * d + t]
    return Cochain(algebra, degree, mat)


def random_cochain(algebra, degree, rng):
    f = algebra.field
    d = algebra.dim
    if f.kind == "rationals":
        mat = Matrix(
            f,
            [[Fraction(rng.randint(-3, 3)) for _ in range(d ** degree)]
             for _ in range(d)],
        )
    else:
        mat = Matrix(
            f,
            [[rng.randrange(f.p) for _ in range(d ** degree)] for _ in range(d)],
        )
    return Cochain(algebra, degree, mat)


def coboundary(fc):
    """Hochschild coboundary, raising degree by one."""
    a = fc.algebra
    f = a.field
    d = a.dim
    n = fc.degree
    out = Matrix.zeros(f, d, d ** (n + 1))
    left = [a.left_matrix(i) for i in range(d)]
    right = [a.right_matrix(i) for i in range(d)]
    for s in _words(d, n + 1):
        col = [f.zero] * d
        v = fc.mat.col(_windex(d, s[1:]))
        lv = left[s[0]].apply(v)
        col = [f.add(x, y) for x, y in zip(col, lv)]
        sign = 1
        for i in range(1, n + 1):
            sign = -sign
            for m, c in a.table[s[i - 1]][s[i]].items():
                t = s[: i - 1] + (m,) + s[i + 1 :]
                w = fc.mat.col(_windex(d, t))
                cc = c if sign > 0 else f.neg(c)
                for r in range(d):
                    if w[r] != f.zero:
                        col[r] = f.add(col[r], f.mul(cc, w[r]))
        sign = -sign
        rv = right[s[-1]].apply(fc.mat.col(_windex(d, s[:-1])))
        if sign > 0:
            col = [f.add(x, y) for x, y in zip(col, rv)]
        else:
            col = [f.sub(x, y) for x, y in zip(col, rv)]
        oc = _windex(d, s)
        for r in range(d):
            out.data[r][oc] = col[r]
    return Cochain(a, n + 1, out)


def cup(fc, gc):
    """Concatenate arguments and multiply the values."""
    a = fc.algebra
    f = a.field
    d = a.dim
    m, n = fc.degree, gc.degree
    out = Matrix.zeros(f, d, d ** (m + n))
    dn = d ** n
    for w1 in range(d ** m):
        v1 = fc.mat.col(w1)
        if all(x == f.zero for x in v1):
            continue
        for w2 in range(dn):
            v2 = gc.mat.col(w2)
            prod = a.mult(v1, v2)
            oc = w1 * dn + w2
            for r in range(d):
                out.data[r][oc] = prod[r]
    return Cochain(a, m + n, out)


def circle_i(fc, gc, i):
    """Insert the value of g into argument slot i of f (0-based)."""
    a = fc.algebra
    f = a.field
    d = a.dim
    m, n = fc.degree, gc.degree
    assert 0 <= i <= m - 1
    out = Matrix.zeros(f, d, d ** (m + n - 1))
    dpost = d ** (m - 1 - i)
    dmid = d ** n
    dpre = d ** i
    for pre in range(dpre):
        for mid in range(dmid):
            gval = gc.mat.col(mid)
            for post in range(dpost):
                col = [f.zero] * d
                for k in range(d):
                    gk = gval[k]
                    if gk == f.zero:
                        continue
                    fcol = fc.mat.col((pre * d + k) * dpost + post)
                    for r in range(d):
                        if fcol[r] != f.zero:
                            col[r] = f.add(col[r], f.mul(gk, fcol[r]))
                oc = (pre * dmid + mid) * dpost + post
                for r in range(d):
                    out.data[r][oc] = col[r]
    return Cochain(a, m + n - 1, out)


def circle(fc, gc):
    """Pre-Lie product: signed sum of all insertions.

    For a pair of degree-0 cochains both insertion sums are empty; the
    result is reported as the zero cochain in degree 0.
    """
    a = fc.algebra
    m, n = fc.degree, gc.degree
    out = Cochain.zero(a, max(m + n - 1, 0))
    for i in range(m):
        term = circle_i(fc, gc, i)
        if signs.circle_term(i, n) < 0:
            term = term.neg()
        out = out + term
    return out


def bracket(fc, gc):
    """Gerstenhaber bracket at cochain level."""
    m, n = fc.degree, gc.degree
    first = circle(fc, gc)
    second = circle(gc, fc)
    if signs.bracket_swap(m, n) > 0:
        return first - second
    return first + second


def sq(fc):
    """Squaring map: self insertion.

    Defined for even degree cochains; in characteristic 2 the odd degrees
    make sense as well since the cup commutator obstruction vanishes.
    """
    f = fc.algebra.field
    assert fc.degree % 2 == 0 or (f.kind == "prime-field" and f.p == 2)
    return circle(fc, fc)


def cup_commutator(fc, gc):
    m, n = fc.degree, gc.degree
    first = cup(fc, gc)
    second = cup(gc, fc)
    if signs.cup_swap(m, n) > 0:
        return first - second
    return first + second


class HochschildRing:
    """Hochschild cohomology of an algebra through a top degree, with
    class-level cup, bracket, and squaring operations."""

    def __init__(self, algebra, top):
        self.algebra = algebra
        self.top = top
        self.resolution = BarResolution(algebra)
        self.complex = hom_complex(
            self.resolution, self.resolution.target, top + 1
        )
        self.spaces = [cohomology(self.complex, n) for n in range(top + 1)]

    def dims(self):
        return [sp.dim for sp in self.spaces]

    def is_cocycle(self, fc):
        return coboundary(fc).is_zero()

    def class_of(self, fc):
        """Quotient coordinates of a cocycle cochain."""
        assert self.is_cocycle(fc), "not a cocycle"
        assert fc.degree <= self.top
        coords = self.spaces[fc.degree].class_of(fc.vec())
        assert coords is not None
        return coords

    def representative(self, degree, coords):
        v = self.spaces[degree].representative(coords)
        return from_vec(self.algebra, degree, v)

    def basis_cochains(self, degree):
        sp = self.spaces[degree]
        return [self.representative(degree, c) for c in sp.basis_classes()]

    def classes_agree(self, fc, gc):
        assert fc.degree == gc.degree
        return self.class_of(fc) == self.class_of(gc)

    def cup_classes(self, fc, gc):
        out = cup(fc, gc)
        assert self.is_cocycle(out), "cup of cocycles must be a cocycle"
        return self.class_of(out)

    def bracket_classes(self, fc, gc):
        out = bracket(fc, gc)
        assert self.is_cocycle(out), "bracket of cocycles must be a cocycle"
        return self.class_of(out)

    def sq_class(self, fc):
        out = sq(fc)
        assert self.is_cocycle(out), "square of a cocycle must be a cocycle"
        return self.class_of(out)
