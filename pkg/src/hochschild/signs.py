"""Every graded sign used by the workbench, in one place.

All exponents are reduced mod 2 before use, so negative degree arithmetic
is harmless.  Functions return +1 or -1 as plain ints; callers convert
through their field.
"""


def _pm(e):
    return -1 if e % 2 else 1


def circle_term(i, n):
    """Coefficient of f ._i g inside f . g, for g of degree n."""
    return _pm(i * (n - 1))


def bracket_swap(m, n):
    """Coefficient of g . f inside {f, g}."""
    return _pm((m - 1) * (n - 1))


def cup_swap(m, n):
    """Coefficient of g cup f inside the graded cup commutator."""
    return _pm(m * n)


def fund_df(n):
    """Coefficient of df . g in the coboundary of f . g."""
    return _pm(n - 1)


def fund_cup(n):
    """Coefficient of the cup commutator in the coboundary of f . g."""
    return _pm(n)


def leibniz_right(m):
    """Coefficient of f cup dg in the coboundary of f cup g."""
    return _pm(m)


def koszul(p):
    """Coefficient of id (x) f_q on the (p, q) block of a tensor complex."""
    return _pm(p)


def tensor_swap_pair(r, s):
    """Flip sign for a summand E_r (x) F_s inside the shuffle morphism."""
    return _pm(r * s)


def right_comparison(m, n):
    """Global twist relating the two ways around a tensor square."""
    return _pm(m * n)


def right_lambda(m, n, j):
    """Sign on the unit-contraction legs of the right comparison map."""
    return _pm(m * (m + n - j))


def schwede(m):
    """Comparison sign between the complex-level and loop-level brackets."""
    return _pm(m + 1)
