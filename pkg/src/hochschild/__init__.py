"""Exact workbench for Hochschild cohomology and its loop-space shadow.

Computes cup products, Gerstenhaber brackets and squares on Hochschild
cohomology of finite-dimensional algebras, the corresponding operations
built from extension categories, and the Hopf-algebra comparison maps,
all in exact arithmetic over the rationals or a prime field.
"""

__version__ = "0.1.0"

from .linalg import GF, QQ, Field, Matrix, kronecker, rank, rref_analyze, solve
from .algebras import (
    Algebra,
    ModuleRep,
    check_algebra,
    check_module,
    dual_numbers,
    enveloping,
    matrix_algebra,
    opposite,
    random_algebra,
    regular_bimodule,
    tensor_algebra,
    tensor_over_algebra,
)
from .complexes import (
    BarResolution,
    TrivialBarResolution,
    cohomology,
    cohomology_dims,
    hom_complex,
    lift_chain_map,
)
from .cochains import (
    Cochain,
    HochschildRing,
    bracket,
    circle,
    coboundary,
    cup,
    cup_commutator,
    sq,
)
from .extensions import (
    ExtMorphism,
    Extension,
    baer_sum,
    check_admissible,
    classes_equal,
    cocycle_to_extension,
    cocycles_cohomologous,
    extension_to_cocycle,
    splice,
    trivial_extension,
)
from .loops import (
    BoxProduct,
    Loop,
    gamma_components,
    left_collapse,
    loop_bracket,
    loop_sq,
    omega_loop,
    right_collapse,
    shear_loop,
    u_minus,
    u_plus,
)
from .contexts import BimoduleContext, MonoidalContext
from .hopf import (
    Bialgebra,
    Embedding,
    HopfContext,
    check_bialgebra,
    check_r_matrix,
    cyclic_group,
    exterior,
    group_algebra,
    taft,
    taft_r_matrix,
)
from .io import SchemaError, parse_algebra_file, serialize_algebra
from .verify import (
    braided_vanish_suite,
    gerstenhaber_suite,
    retakh_suite,
    schwede_suite,
)
