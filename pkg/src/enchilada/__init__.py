"""Desk-scale computations in the category whose objects are C*-algebras and
whose morphisms are isomorphism classes of nondegenerate correspondences.

Objects are finite-dimensional (direct sums of matrix blocks), so morphisms
are multiplicity matrices over N ∪ {INF}: composition is matrix
multiplication, kernels and cokernels are ideal inclusions and quotient
maps, and Schubert images fall out of their composites.  A numeric layer
realizes finite classes as block-matrix Hilbert bimodules and recomputes
composition through an explicit Gram quotient, so every symbolic identity
can be checked against an independent oracle.
"""

from .algebras import (
    FdCStarAlgebra,
    IdealRef,
    ZERO_ALGEBRA,
    algebras_isomorphic,
    make_algebra,
    make_ideal,
    quotient,
)
from .cardinal import INF, Cardinal, card
from .checks import (
    RandomCheckReport,
    SuiteResult,
    enumerate_algebras,
    enumerate_corrs,
    random_algebra,
    random_corr,
    run_random_checks,
    suite_compose_laws,
    suite_schubert_identities,
    suite_short_exact_theorem,
    suite_tensor_oracle,
    suite_universal_properties,
    suite_zero_tensor,
)
from .concrete import (
    AxiomCheck,
    ConcreteCorr,
    ConcreteModule,
    InteriorTensor,
    ValidationReport,
    classify,
    compacts_span_defect,
    dual_concrete,
    interior_tensor,
    interior_tensor_norm,
    is_isomorphic,
    rank_one,
    realize,
    validate,
)
from .corr import (
    CorrClass,
    cokernel,
    compose,
    direct_sum,
    dual,
    epi_finite_rank_test,
    factor_through_quotient,
    ideal_inclusion_corr,
    identity_corr,
    is_full,
    is_hilbert_bimodule,
    is_invertible,
    is_split_epi,
    is_split_mono,
    kernel,
    left_kernel,
    mono_finite_rank_test,
    phi_injective,
    quotient_corr,
    restrict_right,
    right_support,
    schubert_coimage,
    schubert_image,
    tensor_is_zero,
    zero_corr,
)
from .errors import ValidationError
from .exactness import (
    GALLERY_NAMES,
    Condition,
    ExactnessReport,
    GalleryStep,
    GalleryTranscript,
    NodeVerdict,
    SequenceSpec,
    check_sequence,
    check_short_exact,
    exact_at,
    gallery,
    run_gallery,
)

__version__ = "0.1.0"

__all__ = [
    "FdCStarAlgebra",
    "IdealRef",
    "ZERO_ALGEBRA",
    "algebras_isomorphic",
    "make_algebra",
    "make_ideal",
    "quotient",
    "INF",
    "Cardinal",
    "card",
    "CorrClass",
    "identity_corr",
    "zero_corr",
    "compose",
    "direct_sum",
    "right_support",
    "left_kernel",
    "is_full",
    "phi_injective",
    "tensor_is_zero",
    "ideal_inclusion_corr",
    "quotient_corr",
    "kernel",
    "cokernel",
    "schubert_image",
    "schubert_coimage",
    "is_hilbert_bimodule",
    "is_split_mono",
    "is_split_epi",
    "is_invertible",
    "dual",
    "restrict_right",
    "factor_through_quotient",
    "mono_finite_rank_test",
    "epi_finite_rank_test",
    "ConcreteModule",
    "ConcreteCorr",
    "AxiomCheck",
    "ValidationReport",
    "InteriorTensor",
    "realize",
    "validate",
    "classify",
    "interior_tensor",
    "interior_tensor_norm",
    "is_isomorphic",
    "dual_concrete",
    "rank_one",
    "compacts_span_defect",
    "SequenceSpec",
    "NodeVerdict",
    "Condition",
    "ExactnessReport",
    "exact_at",
    "check_short_exact",
    "check_sequence",
    "GALLERY_NAMES",
    "GalleryStep",
    "GalleryTranscript",
    "gallery",
    "run_gallery",
    "SuiteResult",
    "RandomCheckReport",
    "run_random_checks",
    "random_algebra",
    "random_corr",
    "enumerate_algebras",
    "enumerate_corrs",
    "suite_compose_laws",
    "suite_universal_properties",
    "suite_schubert_identities",
    "suite_tensor_oracle",
    "suite_zero_tensor",
    "suite_short_exact_theorem",
    "ValidationError",
]
