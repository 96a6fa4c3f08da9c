"""Tensor contexts: the ambient monoidal structure extensions live in.

A context fixes the algebra whose modules carry the extensions, a unit
module, a tensor product with explicit coordinates (projection from and
section into the flat Kronecker space), tensor products of maps, and
unitor isomorphisms.  The bimodule context tensors over the base
algebra; a braided context additionally provides the braiding.
"""

from .linalg import Matrix, kronecker, rank, solve_many
from .algebras import (
    bimodule_left_action,
    bimodule_right_action,
    enveloping,
    regular_bimodule,
    tensor_over_algebra,
)


class TensorObj:
    """A realized tensor product: module plus flat-space coordinates."""

    __slots__ = ("module", "proj", "sect", "left", "right")

    def __init__(self, module, proj, sect, left, right):
        self.module = module
        self.proj = proj
        self.sect = sect
        self.left = left
        self.right = right


class MonoidalContext:
    """Shared interface; concrete contexts fill in the tensor data."""

    def tensor(self, m1, m2):
        raise NotImplementedError

    def tensor_map(self, tsrc, ttgt, f, g):
        """Induced map on tensor products, with a definedness check."""
        raw = ttgt.proj @ kronecker(f, g)
        out = raw @ tsrc.sect
        assert (out @ tsrc.proj) == raw, "map does not respect the tensor"
        return out

    def left_unitor(self, tobj):
        raise NotImplementedError

    def right_unitor(self, tobj):
        raise NotImplementedError

    def unitor_inverse(self, tobj, unitor):
        inv = solve_many(unitor, Matrix.identity(self.field, unitor.nrows))
        assert inv is not None, "unitor is not invertible"
        assert (unitor @ inv) == Matrix.identity(self.field, unitor.nrows)
        return inv


class BimoduleContext(MonoidalContext):
    """Bimodules over a base algebra, tensored over that algebra."""

    def __init__(self, base):
        self.base = base
        self.field = base.field
        self.algebra = enveloping(base)
        self.unit = regular_bimodule(base)

    def tensor(self, m1, m2):
        tens, proj, sect = tensor_over_algebra(self.base, m1, m2)
        return TensorObj(tens, proj, sect, m1, m2)

    def left_unitor(self, tobj):
        """unit (x) M -> M by the left action."""
        a, m = self.base, tobj.right
        f = self.field
        raw = Matrix.zeros(f, m.dim, a.dim * m.dim)
        for i in range(a.dim):
            e_i = [f.one if k == i else f.zero for k in range(a.dim)]
            act = bimodule_left_action(a, m, e_i)
            for j in range(m.dim):
                col = act.col(j)
                for t in range(m.dim):
                    raw.data[t][i * m.dim + j] = col[t]
        out = raw @ tobj.sect
        assert (out @ tobj.proj) == raw
        assert rank(out) == m.dim, "left unitor must be invertible"
        return out

    def right_unitor(self, tobj):
        """M (x) unit -> M by the right action."""
        a, m = self.base, tobj.left
        f = self.field
        raw = Matrix.zeros(f, m.dim, m.dim * a.dim)
        for j in range(m.dim):
            for i in range(a.dim):
                e_i = [f.one if k == i else f.zero for k in range(a.dim)]
                act = bimodule_right_action(a, m, e_i)
                col = act.col(j)
                for t in range(m.dim):
                    raw.data[t][j * a.dim + i] = col[t]
        out = raw @ tobj.sect
        assert (out @ tobj.proj) == raw
        assert rank(out) == m.dim, "right unitor must be invertible"
        return out
