import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochschild.linalg import (
    GF,
    QQ,
    Field,
    Matrix,
    block_diag,
    block_matrix,
    column_space_contains,
    coordinates_in,
    kernel_basis,
    kronecker,
    pivot_complement,
    rank,
    rref_analyze,
    solve,
    solve_many,
)


def rand_matrix(f, m, n, rng):
    if f.kind == "rationals":
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(m)]
    else:
        rows = [[rng.randrange(f.p) for _ in range(n)] for _ in range(m)]
    return Matrix(f, rows, ncols=n)


def test_field_kinds():
    assert QQ.kind == "rationals"
    assert GF(7).p == 7
    with pytest.raises(AssertionError):
        GF(6)
    with pytest.raises(AssertionError):
        GF(1)


def test_field_of_and_fmt():
    assert QQ.of("3/4") == Fraction(3, 4)
    assert QQ.of(2) == Fraction(2)
    assert QQ.fmt(Fraction(-1, 2)) == "-1/2"
    f = GF(5)
    assert f.of("7") == 2
    assert f.of(-1) == 4
    assert f.of("3/4") == f.div(3, 4)
    assert f.fmt(f.of(9)) == "4"


@given(st.integers(1, 4), st.integers(0, 24))
@settings(max_examples=30, deadline=None)
def test_gf_inverse(pexp, aval):
    p = [2, 3, 5, 7][pexp - 1]
    f = GF(p)
    a = f.of(aval)
    if a == f.zero:
        return
    assert f.mul(a, f.inv(a)) == f.one


def test_matrix_shapes_with_zero_rows():
    f = GF(2)
    m = Matrix(f, [], ncols=3)
    assert m.nrows == 0 and m.ncols == 3
    assert rank(m) == 0
    k = kernel_basis(m)
    assert k.ncols == 3
    i = Matrix.identity(f, 3)
    assert (i @ k) == k


def test_matmul_and_identity():
    f = QQ
    rng = random.Random(0)
    a = rand_matrix(f, 3, 4, rng)
    i3 = Matrix.identity(f, 3)
    i4 = Matrix.identity(f, 4)
    assert i3 @ a == a
    assert a @ i4 == a


@given(st.integers(0, 1000))
@settings(max_examples=20, deadline=None)
def test_matmul_associative(seed):
    rng = random.Random(seed)
    f = QQ if seed % 2 == 0 else GF(5)
    a = rand_matrix(f, 2, 3, rng)
    b = rand_matrix(f, 3, 2, rng)
    c = rand_matrix(f, 2, 4, rng)
    assert (a @ b) @ c == a @ (b @ c)


@given(st.integers(0, 1000))
@settings(max_examples=25, deadline=None)
def test_rank_nullity_and_kernel(seed):
    rng = random.Random(seed)
    f = [QQ, GF(2), GF(5)][seed % 3]
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    a = rand_matrix(f, m, n, rng)
    r = rank(a)
    k = kernel_basis(a)
    assert r + k.ncols == n
    assert (a @ k).is_zero()


@given(st.integers(0, 1000))
@settings(max_examples=25, deadline=None)
def test_solve_recovers_consistent_system(seed):
    rng = random.Random(seed)
    f = [QQ, GF(2), GF(3)][seed % 3]
    a = rand_matrix(f, rng.randint(1, 5), rng.randint(1, 5), rng)
    x = rand_matrix(f, a.ncols, 2, rng)
    b = a @ x
    sol = solve_many(a, b)
    assert sol is not None
    assert a @ sol == b


def test_solve_detects_inconsistency():
    f = QQ
    a = Matrix(f, [[Fraction(1)], [Fraction(1)]], ncols=1)
    b = [Fraction(1), Fraction(2)]
    assert solve(a, b) is None
    assert not column_space_contains(a, b)
    assert column_space_contains(a, [Fraction(3), Fraction(3)])


def test_rref_reduced_form():
    f = GF(5)
    rng = random.Random(7)
    a = rand_matrix(f, 4, 6, rng)
    res = rref_analyze(a)
    assert res.rank == len(res.pivots)
    for r, c in enumerate(res.pivots):
        assert res.reduced.entry(r, c) == f.one
        for r2 in range(res.reduced.nrows):
            if r2 != r:
                assert res.reduced.entry(r2, c) == f.zero


def test_gf2_bit_path_matches_generic_structure():
    # same 0/1 matrix, GF(2) packed elimination vs rational elimination:
    # the GF(2) rank can only drop, and kernel vectors stay in the kernel.
    rng = random.Random(21)
    rows = [[rng.randint(0, 1) for _ in range(8)] for _ in range(6)]
    a2 = Matrix(GF(2), rows)
    aq = Matrix(QQ, [[Fraction(v) for v in row] for row in rows])
    assert rank(a2) <= rank(aq)
    k = kernel_basis(a2)
    assert (a2 @ k).is_zero()
    assert rank(a2) + k.ncols == 8


def test_kronecker_mixed_product():
    rng = random.Random(3)
    f = GF(7)
    a = rand_matrix(f, 2, 3, rng)
    b = rand_matrix(f, 3, 2, rng)
    c = rand_matrix(f, 3, 2, rng)
    d = rand_matrix(f, 2, 3, rng)
    assert kronecker(a, c) @ kronecker(b, d) == kronecker(a @ b, c @ d)


def test_kronecker_identity():
    f = QQ
    assert kronecker(Matrix.identity(f, 2), Matrix.identity(f, 3)) == \
        Matrix.identity(f, 6)


def test_stack_and_submatrix():
    f = GF(3)
    rng = random.Random(5)
    a = rand_matrix(f, 2, 3, rng)
    b = rand_matrix(f, 2, 2, rng)
    h = a.hstack(b)
    assert h.ncols == 5 and h.submatrix(range(2), range(3)) == a
    c = rand_matrix(f, 1, 3, rng)
    v = a.vstack(c)
    assert v.nrows == 3 and v.submatrix([2], range(3)) == c
    assert a.transpose().transpose() == a


def test_block_helpers():
    f = QQ
    i2 = Matrix.identity(f, 2)
    d = block_diag(f, [i2, i2])
    assert d == Matrix.identity(f, 4)
    g = block_matrix(f, [[i2, Matrix.zeros(f, 2, 1)]])
    assert g.nrows == 2 and g.ncols == 3


def test_coordinates_in_and_pivot_complement():
    f = GF(5)
    basis = Matrix(f, [[1, 0], [0, 1], [0, 0]], ncols=2)
    v = [2, 3, 0]
    coords = coordinates_in(basis, v)
    assert coords is not None
    assert basis.apply(list(coords)) == v
    assert coordinates_in(basis, [0, 0, 1]) is None
    inner = Matrix(f, [[1], [0], [0]], ncols=1)
    outer = Matrix.identity(f, 3)
    cols = pivot_complement(inner, outer)
    assert cols == [1, 2]
    joint = inner.hstack(outer.submatrix(range(3), cols))
    assert rank(joint) == 3
