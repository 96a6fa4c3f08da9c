"""Exact dense linear algebra over the rationals and prime fields.

Entries are Fraction over the rationals and canonical residues 0..p-1 over
GF(p).  Elimination over GF(2) switches to packed integer bitrows, which is
what keeps the Morita-sized rank computations cheap.
"""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A scalar domain: kind 'rationals' or 'prime-field' with modulus p."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        assert kind in ("rationals", "prime-field")
        if kind == "prime-field":
            assert p is not None and _is_prime(p), p
        else:
            assert p is None
        self.kind = kind
        self.p = p

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rationals" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rationals" else 1

    def of(self, v):
        """Coerce an int, string, or Fraction into a field element."""
        if self.kind == "rationals":
            if isinstance(v, str):
                return Fraction(v)
            return Fraction(v)
        if isinstance(v, str):
            v = Fraction(v)
        if isinstance(v, Fraction):
            num, den = v.numerator, v.denominator
            assert den % self.p != 0, "denominator not invertible"
            return num * pow(den, -1, self.p) % self.p
        return v % self.p

    def add(self, a, b):
        return a + b if self.kind == "rationals" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rationals" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rationals" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rationals" else (-a) % self.p

    def inv(self, a):
        assert a != 0, "inverting zero"
        if self.kind == "rationals":
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a):
        """Canonical string form: 'p/q' reduced, or the residue."""
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "rationals" else "GF(%d)" % self.p


QQ = Field("rationals")


def GF(p):
    return Field("prime-field", p)


class Matrix:
    """Dense row-major exact matrix over a Field."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field, data, copy=True, ncols=None):
        # ncols disambiguates the column count of zero-row matrices
        self.field = field
        self.data = [list(r) for r in data] if copy else data
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else (ncols or 0)
        for r in self.data:
            assert len(r) == self.ncols

    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], copy=False, ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = o
        return cls(field, rows, copy=False)

    @classmethod
    def from_entries(cls, field, m, n, entries):
        """entries: iterable of (row, col, value); later entries accumulate."""
        out = cls.zeros(field, m, n)
        d, add = out.data, field.add
        for i, j, v in entries:
            d[i][j] = add(d[i][j], v)
        return out

    @classmethod
    def from_cols(cls, field, cols, nrows=None):
        if not cols:
            assert nrows is not None
            return cls.zeros(field, nrows, 0)
        m = len(cols[0])
        return cls(
            field,
            [[c[i] for c in cols] for i in range(m)],
            copy=False,
            ncols=len(cols),
        )

    def copy(self):
        return Matrix(self.field, self.data, ncols=self.ncols)

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [r[j] for r in self.data]

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.data for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __repr__(self):
        return "Matrix(%r, %dx%d)" % (self.field, self.nrows, self.ncols)

    def __add__(self, other):
        assert self.field == other.field
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        add = self.field.add
        rows = [
            [add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return Matrix(self.field, rows, copy=False, ncols=self.ncols)

    def __sub__(self, other):
        return self + other.neg()

    def neg(self):
        neg = self.field.neg
        return Matrix(
            self.field,
            [[neg(x) for x in r] for r in self.data],
            copy=False,
            ncols=self.ncols,
        )

    def scale(self, c):
        mul = self.field.mul
        c = self.field.of(c)
        return Matrix(
            self.field,
            [[mul(c, x) for x in r] for r in self.data],
            copy=False,
            ncols=self.ncols,
        )

    def __matmul__(self, other):
        assert self.field == other.field
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        f = self.field
        z = f.zero
        bt = [other.col(j) for j in range(other.ncols)]
        out = []
        if f.kind == "prime-field":
            p = f.p
            for ra in self.data:
                out.append(
                    [sum(a * b for a, b in zip(ra, cb) if a and b) % p for cb in bt]
                )
        else:
            for ra in self.data:
                row = []
                for cb in bt:
                    s = z
                    for a, b in zip(ra, cb):
                        if a and b:
                            s += a * b
                    row.append(s)
                out.append(row)
        return Matrix(f, out, copy=False, ncols=other.ncols)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        assert len(vec) == self.ncols
        f = self.field
        if f.kind == "prime-field":
            p = f.p
            return [sum(a * b for a, b in zip(r, vec) if a and b) % p for r in self.data]
        z = f.zero
        out = []
        for r in self.data:
            s = z
            for a, b in zip(r, vec):
                if a and b:
                    s += a * b
            out.append(s)
        return out

    def transpose(self):
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            copy=False,
            ncols=self.nrows,
        )

    def hstack(self, other):
        assert self.field == other.field and self.nrows == other.nrows
        return Matrix(
            self.field,
            [ra + rb for ra, rb in zip(self.data, other.data)],
            copy=False,
            ncols=self.ncols + other.ncols,
        )

    def vstack(self, other):
        assert self.field == other.field and self.ncols == other.ncols
        return Matrix(self.field, self.data + other.data, ncols=self.ncols)

    def submatrix(self, rows, cols):
        return Matrix(
            self.field,
            [[self.data[i][j] for j in cols] for i in rows],
            copy=False,
            ncols=len(cols),
        )


def block_diag(field, blocks):
    m = sum(b.nrows for b in blocks)
    n = sum(b.ncols for b in blocks)
    out = Matrix.zeros(field, m, n)
    i0 = j0 = 0
    for b in blocks:
        assert b.field == field
        for i in range(b.nrows):
            out.data[i0 + i][j0 : j0 + b.ncols] = b.data[i]
        i0 += b.nrows
        j0 += b.ncols
    return out


def block_matrix(field, grid):
    """Assemble from a 2d list of Matrix blocks with consistent shapes."""
    out = None
    for row in grid:
        assert all(b.nrows == row[0].nrows for b in row)
        stacked = row[0]
        for b in row[1:]:
            stacked = stacked.hstack(b)
        out = stacked if out is None else out.vstack(stacked)
    return out if out is not None else Matrix.zeros(field, 0, 0)


def kronecker(a, b):
    """Kronecker product, lexicographic: index (i,j) -> i*b.nrows + j."""
    assert a.field == b.field
    f = a.field
    out = Matrix.zeros(f, a.nrows * b.nrows, a.ncols * b.ncols)
    mul = f.mul
    for i in range(a.nrows):
        for j in range(a.ncols):
            c = a.data[i][j]
            if c == f.zero:
                continue
            for k in range(b.nrows):
                orow = out.data[i * b.nrows + k]
                brow = b.data[k]
                base = j * b.ncols
                for l in range(b.ncols):
                    if brow[l] != f.zero:
                        orow[base + l] = mul(c, brow[l])
    return out


class RrefResult:
    """rank, pivot columns, RREF, right kernel basis, column space basis."""

    __slots__ = ("rank", "pivots", "reduced", "kernel", "image")

    def __init__(self, rank, pivots, reduced, kernel, image):
        self.rank = rank
        self.pivots = pivots
        self.reduced = reduced
        self.kernel = kernel
        self.image = image


def _rref_rows_generic(field, rows, ncols):
    """In-place RREF on a list of row lists; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            inv = field.inv(pv)
            mul = field.mul
            rows[r] = [mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != field.zero:
                co = rows[i][c]
                sub, mul = field.sub, field.mul
                ri = rows[i]
                rows[i] = [sub(a, mul(co, b)) for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _rows_to_bits(data):
    out = []
    for r in data:
        w = 0
        for j, x in enumerate(r):
            if x:
                w |= 1 << j
        out.append(w)
    return out


def _bits_to_rows(bits, ncols):
    return [[(w >> j) & 1 for j in range(ncols)] for w in bits]


def _rref_bits(bits, ncols):
    """In-place RREF on packed GF(2) bitrows; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(bits)
    for c in range(ncols):
        mask = 1 << c
        piv = None
        for i in range(r, nrows):
            if bits[i] & mask:
                piv = i
                break
        if piv is None:
            continue
        bits[r], bits[piv] = bits[piv], bits[r]
        prow = bits[r]
        for i in range(nrows):
            if i != r and bits[i] & mask:
                bits[i] ^= prow
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(m):
    """Rank only; cheaper than rref_analyze on big GF(2) matrices."""
    f = m.field
    if f.kind == "prime-field" and f.p == 2:
        bits = _rows_to_bits(m.data)
        return len(_rref_bits(bits, m.ncols))
    rows = [list(r) for r in m.data]
    return len(_rref_rows_generic(f, rows, m.ncols))


def rref_analyze(m):
    """Full elimination report: rank, pivots, RREF, kernel and image bases.

    Kernel columns satisfy m @ v = 0; image columns are the pivot columns
    of the original matrix, so both bases are pivot-canonical.
    """
    f = m.field
    if f.kind == "prime-field" and f.p == 2:
        bits = _rows_to_bits(m.data)
        pivots = _rref_bits(bits, m.ncols)
        red = Matrix(f, _bits_to_rows(bits, m.ncols), copy=False, ncols=m.ncols)
    else:
        rows = [list(r) for r in m.data]
        pivots = _rref_rows_generic(f, rows, m.ncols)
        red = Matrix(f, rows, copy=False, ncols=m.ncols)
    rk = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    kcols = []
    for c in free:
        v = [f.zero] * m.ncols
        v[c] = f.one
        for i, pc in enumerate(pivots):
            x = red.data[i][c]
            if x != f.zero:
                v[pc] = f.neg(x)
        kcols.append(v)
    kernel = Matrix.from_cols(f, kcols, nrows=m.ncols)
    image = m.submatrix(range(m.nrows), pivots)
    return RrefResult(rk, pivots, red, kernel, image)


def solve_many(m, rhs):
    """Particular solution X with m @ X = rhs, or None if inconsistent."""
    assert m.field == rhs.field and m.nrows == rhs.nrows
    f = m.field
    aug = m.hstack(rhs)
    if f.kind == "prime-field" and f.p == 2:
        bits = _rows_to_bits(aug.data)
        pivots = _rref_bits(bits, aug.ncols)
        red = _bits_to_rows(bits, aug.ncols)
    else:
        red = [list(r) for r in aug.data]
        pivots = _rref_rows_generic(f, red, aug.ncols)
    if any(p >= m.ncols for p in pivots):
        return None
    out = Matrix.zeros(f, m.ncols, rhs.ncols)
    for i, pc in enumerate(pivots):
        out.data[pc] = red[i][m.ncols :]
    return out


def solve(m, b):
    """Particular solution of m @ x = b for a vector b, or None."""
    res = solve_many(m, Matrix.from_cols(m.field, [b], nrows=m.nrows))
    return None if res is None else res.col(0)


def column_space_contains(m, vec):
    return solve(m, vec) is not None


def kernel_basis(m):
    return rref_analyze(m).kernel


def pivot_complement(inner, outer):
    """Columns of outer extending span(inner) to span(inner)+span(outer).

    Both are matrices with the same row count.  Returns the list of column
    indices of outer chosen by pivot order, so the completion is canonical.
    """
    assert inner.field == outer.field and inner.nrows == outer.nrows
    combined = inner.hstack(outer)
    piv = rref_analyze(combined).pivots
    return [p - inner.ncols for p in piv if p >= inner.ncols]


def coordinates_in(basis, vec):
    """Coordinates of vec in the column basis, or None if outside."""
    return solve(basis, vec)
