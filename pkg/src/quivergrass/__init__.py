"""Exact-computation toolkit for representations of type A quivers.

Degeneration posets, minimal-degeneration decompositions, Betti numbers of
quiver Grassmannians (stratification recursion and a finite-field counting
oracle), and graded-dimension checks of specialization surjectivity.
"""

from .degen import (
    BongartzData,
    DegenPoset,
    bongartz_data,
    boundary_check,
    degeneration_poset,
    hom_leq,
)
from .grass import (
    PoincarePoly,
    StratumRecord,
    betti_oracle,
    betti_recursion,
    gaussian_binomial,
    gr_interval,
    peel_order,
    point_count,
    strata_sum,
    strata_table,
)
from .homalg import (
    ExplicitHom,
    euler_form,
    ext_dim,
    hom_basis,
    hom_dim,
    hom_dim_classes,
    hom_table,
    iso_identify,
    middle_term,
    subquotient_class,
    tau,
)
from .quiver import (
    ExplicitRep,
    InternalCheckError,
    Interval,
    RepClass,
    TypeAQuiver,
    dim_of,
    enumerate_rep_classes,
    explicit_of,
    intervals_of,
    semisimple_class,
)
from .specialize import (
    CoverCheck,
    SpecializationReport,
    VerifySummary,
    check_cover,
    check_degeneration,
    pbw_rep,
    saturated_chain,
    verify_theorem,
)

__all__ = [
    "BongartzData",
    "CoverCheck",
    "DegenPoset",
    "ExplicitHom",
    "ExplicitRep",
    "InternalCheckError",
    "Interval",
    "PoincarePoly",
    "RepClass",
    "SpecializationReport",
    "StratumRecord",
    "TypeAQuiver",
    "VerifySummary",
    "betti_oracle",
    "betti_recursion",
    "bongartz_data",
    "boundary_check",
    "check_cover",
    "check_degeneration",
    "degeneration_poset",
    "dim_of",
    "enumerate_rep_classes",
    "euler_form",
    "explicit_of",
    "ext_dim",
    "gaussian_binomial",
    "gr_interval",
    "hom_basis",
    "hom_dim",
    "hom_dim_classes",
    "hom_leq",
    "hom_table",
    "intervals_of",
    "iso_identify",
    "middle_term",
    "pbw_rep",
    "peel_order",
    "point_count",
    "saturated_chain",
    "semisimple_class",
    "strata_sum",
    "strata_table",
    "subquotient_class",
    "tau",
    "verify_theorem",
]
