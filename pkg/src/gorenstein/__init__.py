"""Homological computations over monomial quiver algebras on GF(p).

Minimal projective resolutions, Ext, k-duality and projective-summand
stripping, used to decide when a module is n-strongly Gorenstein
projective, injective or flat.
"""

from .algebra import (
    InfiniteDimensional,
    MonomialAlgebra,
    Quiver,
    build_monomial_algebra,
    cyclic_nakayama,
    field_algebra,
    indecomposable_injective,
    indecomposable_projective,
    is_self_injective,
    opposite,
    regular_module,
)
from .fieldmat import FieldSpec
from .formats import ParseError, format_algebra, format_module, parse_algebra_file, parse_module_file
from .rep import (
    DEFAULT_SEED,
    Morphism,
    Representation,
    check_module,
    direct_sum,
    dual,
    hom_basis,
    image_and_cokernel,
    is_isomorphic,
    kernel,
    simple,
    strip_projective_summands,
)
from .resolution import (
    Resolution,
    complexity_estimate,
    cosyzygy,
    ext_dim,
    ext_vanishes_against_regular,
    injective_coresolution,
    min_resolution,
    projective_cover,
    radical_and_top,
    syzygy,
)
from .sg import (
    InvariantViolation,
    PeriodSet,
    SGVerdict,
    UncertifiedInput,
    is_n_sg_flat,
    is_n_sg_injective,
    is_n_sg_projective,
    projectivity_via_self_ext,
    sg_projective_period_set,
    syzygy_cycle_sum,
    verify_theorem_suite,
)

__version__ = "0.1.0"
