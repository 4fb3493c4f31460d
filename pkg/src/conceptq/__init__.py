"""Quantum-like models of concept combination.

Hilbert-space fits of concept disjunction data, CHSH statistics from
coincidence and corpus counts, and double-slit density profiles.
"""
from .bell import (
    ChshReport,
    CoincidenceCounts,
    MarginalCounts,
    OutcomeCounts,
    check_chsh_bound,
    chsh_from_counts,
    chsh_from_marginals,
    chsh_statistic,
    expectation_value,
    probabilities_from_counts,
    product_expectations,
)
from .core import (
    DisjunctionDataset,
    ProbabilityDistribution,
    Projector,
    inner_product,
    project_probability,
    validate_dataset,
)
from .corpus import (
    ConceptPairGrid,
    Corpus,
    PhraseQuery,
    build_coincidence_counts,
    build_marginal_counts,
    count_documents_with_phrase,
    load_corpus,
)
from .interference import (
    InterferenceFit,
    SignAssignment,
    classify_interference,
    fit_disjunction,
    interference_terms,
    verify_reconstruction,
)
from .slit import ScreenProfile, SlitConfig, screen_profile, wave_amplitude

__version__ = "0.1.0"
