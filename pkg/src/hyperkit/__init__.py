"""hyperkit: computation with finite hypermagmas, mosaics, hypergroups,
matroid mosaics, and their categories."""

from .axioms import AxiomReport, Tag, analyze, check_total_iff_associative_for_mosaics
from .core import (
    Hypermagma,
    Morphism,
    absorptive_closure,
    compose,
    find_isomorphism,
    from_masks,
    identity_morphism,
    initial,
    make_hypermagma,
    opposite,
    product_of_subsets,
    strict_sub_closure,
    terminal,
    weak_sub,
)
from .hom import (
    check_kind,
    enumerate_morphisms,
    is_coshort,
    is_reversible_via_lifting,
    is_short,
    is_short_via_lifting,
    is_strict_via_lifting,
    kernel,
    representing_object,
)
from .matroid import (
    Matroid,
    adjoin_point,
    fano_matroid,
    graphic_matroid,
    make_matroid,
    matroid_to_mosaic,
    projective_checks,
    simplify,
    uniform_matroid,
)
from .monoidal import (
    Bimorphism,
    boxdot,
    boxtimes,
    curry,
    enumerate_bimorphisms,
    hom_object,
    represents_bimorphisms,
    strict_classifier_check,
    tensor,
    to_monoid_object,
    uncurry,
    wedge_smash,
    wedge_unit,
)
from .univ import (
    Cocone,
    Cone,
    QuotientMap,
    coequalizer,
    cofree,
    coproduct,
    equalizer,
    free,
    is_normal_epi,
    is_normal_mono,
    product,
    pullback,
    regular_image_factorization,
    unitize,
)
from .zoo import (
    FiniteGroup,
    FiniteRing,
    Multiring,
    conjugacy_hypergroup,
    cyclic_group,
    double_coset_hypergroup,
    empty_sum_search,
    enumerate_canonical_hypergroups,
    gf9_quotient,
    group_to_hypermagma,
    klein_four_group,
    krasner,
    krasner_quotient,
    lattice_mosaic,
    make_gf9,
    orbit_hypergroup,
    refute_coproduct_candidate,
    refute_equalizer_candidate,
    symmetric_group,
)

__version__ = "0.1.0"
