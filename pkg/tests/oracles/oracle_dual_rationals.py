"""Independent oracle: Hochschild cohomology dimensions of Q[x]/(x^2).

Self-contained on purpose: no imports from the package under test, cochains
held as dicts keyed by basis tuples, rank via a naive textbook elimination.
Run as a script to print the dimensions in degrees 0..4.
"""

from fractions import Fraction

# Q[x]/(x^2), basis (1, x).  mult[i][j] = coordinates of b_i * b_j.
DIM = 2
MULT = {
    (0, 0): {0: Fraction(1)},
    (0, 1): {1: Fraction(1)},
    (1, 0): {1: Fraction(1)},
    (1, 1): {},
}


def tuples(n):
    if n == 0:
        return [()]
    return [t + (i,) for t in tuples(n - 1) for i in range(DIM)]


def coboundary(n, f):
    """f: dict tuple->dict(targetindex->Fraction), length-n keys. Returns df."""
    out = {}
    for s in tuples(n + 1):
        acc = {}

        def add(vec, sign):
            for k, c in vec.items():
                acc[k] = acc.get(k, Fraction(0)) + sign * c

        # left action by s[0] on f(s[1:])
        for k, c in f.get(s[1:], {}).items():
            for m, cm in MULT[(s[0], k)].items():
                acc[m] = acc.get(m, Fraction(0)) + c * cm
        # inner multiplications
        for i in range(1, n + 1):
            prod = MULT[(s[i - 1], s[i])]
            sign = Fraction(-1) ** i
            for m, cm in prod.items():
                t = s[: i - 1] + (m,) + s[i + 1 :]
                for k, c in f.get(t, {}).items():
                    acc[k] = acc.get(k, Fraction(0)) + sign * cm * c
        # right action by s[-1] on f(s[:-1])
        sign = Fraction(-1) ** (n + 1)
        for k, c in f.get(s[:-1], {}).items():
            for m, cm in MULT[(k, s[-1])].items():
                acc[m] = acc.get(m, Fraction(0)) + sign * c * cm
        acc = {k: c for k, c in acc.items() if c != 0}
        if acc:
            out[s] = acc
    return out


def coboundary_matrix(n):
    """Matrix of d^n : C^n -> C^{n+1} as list of rows over Fraction."""
    src = [(t, k) for t in tuples(n) for k in range(DIM)]
    dst = [(t, k) for t in tuples(n + 1) for k in range(DIM)]
    dst_pos = {tk: i for i, tk in enumerate(dst)}
    cols = []
    for (t, k) in src:
        image = coboundary(n, {t: {k: Fraction(1)}})
        col = [Fraction(0)] * len(dst)
        for s, vec in image.items():
            for m, c in vec.items():
                col[dst_pos[(s, m)]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(len(src))] for i in range(len(dst))]


def naive_rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def hochschild_dims(maxdeg):
    ranks = [naive_rank(coboundary_matrix(n)) for n in range(maxdeg + 1)]
    dims = []
    for n in range(maxdeg + 1):
        cn = DIM * DIM**n
        kernel = cn - ranks[n]
        image_prev = ranks[n - 1] if n > 0 else 0
        dims.append(kernel - image_prev)
    return dims


if __name__ == "__main__":
    print(hochschild_dims(4))
