"""Multivariate group entropies, formal group laws and their functional equations."""

from groupentropy.series import (
    AxiomReport,
    MultivarPoly,
    TruncatedSeries,
    compose,
    compositional_inverse,
    construct_group_law,
    construct_ring_product,
    verify_group_axioms,
    verify_ring_axioms,
)
from groupentropy.special import (
    DomainError,
    Generator,
    RangeError,
    group_log,
    invert_numeric,
    lambert_w0,
    lambert_w0_log,
)
from groupentropy.entropy import (
    Distribution,
    EntropyFunctional,
    catalog_eval,
    expand_zero,
    mze,
    product,
    renyi,
    uniform_eval,
    z_univariate,
)
from groupentropy.laws import (
    CompositionLaw,
    GrowthFunction,
    check_composability,
    extensivity_scan,
    law_for,
    law_from_growth,
)
from groupentropy.funceq import (
    DiscreteSystem,
    FunctionalEquation,
    check_recurrence,
    gen_sequence,
    lemma_solution,
    rational_solution,
    verify_on_grid,
)

__version__ = "0.1.0"
