from ..guarantees import theorem_bound, theorem_ratios
from .bounds import (
    GuaranteeReport,
    VerificationReport,
    query_bound,
    raise_for_violation,
    validate_lemma_full,
    validate_lemma_partial,
    validate_run
)
from .bruteforce import BRUTE_FORCE_LIMIT, OptimalSolution, brute_force_opt
from .properties import (
    PROPERTY_LIMIT,
    PropertyCheck,
    Witness,
    check_dr,
    check_lattice_submodular,
    check_monotone,
    check_normalized,
    estimate_alpha
)
from .suite import SuiteCase, SuiteConfig, SuiteReport, run_suite

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "GuaranteeReport",
    "OptimalSolution",
    "PROPERTY_LIMIT",
    "PropertyCheck",
    "SuiteCase",
    "SuiteConfig",
    "SuiteReport",
    "VerificationReport",
    "Witness",
    "brute_force_opt",
    "check_dr",
    "check_lattice_submodular",
    "check_monotone",
    "check_normalized",
    "estimate_alpha",
    "query_bound",
    "raise_for_violation",
    "run_suite",
    "theorem_bound",
    "theorem_ratios",
    "validate_lemma_full",
    "validate_lemma_partial",
    "validate_run",
]
