"""dblnerve: finite 2-categories, double categories, and their nerves.

Everything here is exhaustive desk-scale enumeration over composition
tables: validators for (2-/double) categories, weak-horizontal-
invertibility witnesses, biequivalence and trivial-fibration checkers, a
lifting-property engine, oriental shape families, and bisimplicial nerve
levels computed along two independent routes.
"""

from .cat import CatFunctor, FiniteCategory, is_free_category, validate_category
from .dblcat import (
    DoubleFunctor,
    FiniteDoubleCategory,
    equivalence_embed,
    horizontal_embed,
    underlying,
    validate_double_category,
    validate_double_functor,
    vertical_embed,
)
from .errors import (
    BoundaryMismatch,
    BudgetExceeded,
    DblnerveError,
    DisagreementBug,
    NotAdjoint,
    NotAnEquivalence,
    NotWhi,
    RangeExceeded,
    SchemaError,
    UsageError,
    ValidationError,
)
from .io import load_document, load_path, serialize
from .nerve import (
    SimplexSet,
    comparison_maps,
    dbl_nerve_degeneracy,
    dbl_nerve_face,
    dbl_nerve_level,
    dbl_nerve_oracle,
    fibrancy_vertical_check,
    n2_degeneracy,
    n2_face,
    n2_simplices,
    segal_tfib_check,
    two_nerve_level,
)
from .presentation import (
    Presentation,
    PresentationBuilder,
    PresentationMorphism,
    enumerate_functors,
    has_rlp,
)
from .pseudohom import (
    PseudoHom,
    enumerate_double_functors_concrete,
    hpnt_equivalence_report,
    is_hpnt_equivalence,
    pseudo_hom,
)
from .shapes import (
    generating_cofibrations_dbl,
    generating_cofibrations_two,
    oriental,
    oriental_adjoint_presentation,
    oriental_inv,
    oriental_inv_presentation,
    oriental_variant,
    shape_2cat,
    v_oriental_inv,
)
from .tensor import lx_presentations, x_presentation
from .twocat import (
    FiniteTwoCategory,
    TwoFunctor,
    is_biequivalence,
    is_trivial_fibration_two,
    promote_equivalence,
    validate_two_category,
    validate_two_functor,
)
from .whi import (
    HorizontalEquivalence,
    WhiWitness,
    horizontal_equivalences,
    is_double_biequivalence,
    is_trivial_fibration,
    is_weakly_horizontally_invariant,
    is_whi_square,
    promote_witness,
    weak_inverse,
    whi_squares,
)

__all__ = [name for name in dir() if not name.startswith("_")]
