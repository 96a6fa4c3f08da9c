import random
from fractions import Fraction

import pytest

from hochschild.linalg import GF, QQ, Matrix
from hochschild.algebras import (
    Algebra,
    ModuleRep,
    check_algebra,
    check_module,
    conjugate_algebra,
    dual_numbers,
    enveloping,
    free_module,
    is_module_map,
    matrix_algebra,
    module_hom_space,
    opposite,
    quotient_module,
    random_algebra,
    random_invertible,
    regular_bimodule,
    submodule,
    tensor_algebra,
    truncated_polynomial,
    upper_triangular2,
)


def test_builtin_algebras_pass_checks():
    for a in (
        dual_numbers(QQ),
        dual_numbers(GF(2)),
        truncated_polynomial(QQ, 3),
        truncated_polynomial(GF(3), 4),
        upper_triangular2(QQ),
        random_algebra(QQ, 3, 11),
        random_algebra(GF(5), 3, 4),
    ):
        assert check_algebra(a) is None


def test_check_algebra_catches_broken_table():
    a = dual_numbers(QQ)
    bad = [[dict(cell) for cell in row] for row in a.table]
    bad[0][1] = {0: Fraction(1)}  # force 1*x = 1: breaks unit and associativity
    broken = Algebra(QQ, list(a.basis), bad, list(a.unit))
    assert check_algebra(broken) is not None


def test_dual_numbers_relations():
    a = dual_numbers(QQ)
    x = a.basis_vector(1)
    assert a.mult(x, x) == [Fraction(0), Fraction(0)]
    assert a.mult(a.unit, x) == x


def test_left_right_matrices_agree_with_mult():
    a = random_algebra(GF(7), 3, 9)
    for i in range(a.dim):
        for j in range(a.dim):
            via_left = a.left_matrix(i).apply(a.basis_vector(j))
            via_right = a.right_matrix(j).apply(a.basis_vector(i))
            direct = a.mult(a.basis_vector(i), a.basis_vector(j))
            assert via_left == direct
            assert via_right == direct


def test_opposite_and_tensor_and_enveloping():
    a = upper_triangular2(QQ)
    aop = opposite(a)
    assert check_algebra(aop) is None
    for i in range(a.dim):
        for j in range(a.dim):
            assert aop.mult(a.basis_vector(i), a.basis_vector(j)) == \
                a.mult(a.basis_vector(j), a.basis_vector(i))
    t = tensor_algebra(a, dual_numbers(QQ))
    assert check_algebra(t) is None
    assert t.dim == a.dim * 2
    env = enveloping(a)
    assert check_algebra(env) is None
    assert env.dim == a.dim ** 2


def test_matrix_algebra():
    a = dual_numbers(GF(2))
    m2 = matrix_algebra(a, 2)
    assert check_algebra(m2) is None
    assert m2.dim == 8


def test_regular_bimodule_is_module():
    a = dual_numbers(GF(2))
    reg = regular_bimodule(a)
    assert check_module(reg) is None
    assert reg.dim == a.dim


def test_check_module_catches_non_action():
    a = dual_numbers(QQ)
    env = enveloping(a)
    reg = regular_bimodule(a)
    rho = [m.copy() for m in reg.rho]
    rho[1] = Matrix.identity(QQ, a.dim)  # corrupt one action matrix
    bad = ModuleRep(env, rho)
    assert check_module(bad) is not None


def test_free_sub_quotient_modules():
    a = dual_numbers(QQ)
    env = enveloping(a)
    fm = free_module(env, 2)
    assert check_module(fm) is None
    reg = regular_bimodule(a)
    # the socle k*x inside A as a bimodule
    w = Matrix(QQ, [[Fraction(0)], [Fraction(1)]], ncols=1)
    sub, incl = submodule(reg, w)
    assert check_module(sub) is None
    assert sub.dim == 1
    quo, proj, sect = quotient_module(reg, w)
    assert check_module(quo) is None
    assert quo.dim == 1
    assert is_module_map(sub, reg, incl)
    assert is_module_map(reg, quo, proj)
    assert proj @ sect == Matrix.identity(QQ, quo.dim)
    assert (proj @ incl).is_zero()


def test_module_hom_space():
    a = dual_numbers(GF(2))
    reg = regular_bimodule(a)
    homs = module_hom_space(reg, reg)
    assert len(homs) >= 1
    for t in homs:
        assert is_module_map(reg, reg, t)


def test_conjugate_algebra_preserves_structure():
    rng = random.Random(13)
    a = dual_numbers(QQ)
    p = random_invertible(QQ, a.dim, rng)
    c = conjugate_algebra(a, p)
    assert check_algebra(c) is None


def test_random_algebra_deterministic():
    a = random_algebra(GF(5), 3, 42)
    b = random_algebra(GF(5), 3, 42)
    assert a.table == b.table
    c = random_algebra(GF(5), 3, 43)
    assert a.table != c.table
