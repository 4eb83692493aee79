"""Machine checks of the structural and cover-theoretic statements about K^m_n."""

from .combinatorial import (
    WORKED_PRODUCTS,
    check_arrow_chains,
    check_associativity,
    check_cartan,
    check_ell_drop,
    check_inverse_corner,
    check_inverse_identity,
    check_rotation,
    check_schedule,
    check_star,
    check_unit,
    check_worked_examples,
    check_worked_products,
)
from .faithfulness import (
    box_weight,
    check_0faithful,
    check_0faithful_failure,
    check_exact_equivalence,
    check_ext_transfer,
    check_ext_vanishing,
    check_projective_injective,
    check_tilting_coresolution,
    check_tilting_socle2,
    check_uniserial_standards,
    sample_modules,
)
from .report import CheckParams, CheckReport, ModuleReport, module_report, timed_check
from .representations import (
    check_brauer_humphreys,
    check_decomposition_numbers,
    check_functor_identities,
    check_radical,
    check_resolutions,
    check_restricted_modules,
    check_standard_structure,
    check_tilting_modules,
    check_translated_projectives,
    check_translated_standards,
)
from .suites import SUITE_NAMES, SUITES, Job, jobs_for, run_jobs, run_suite

__all__ = [
    "SUITES",
    "SUITE_NAMES",
    "WORKED_PRODUCTS",
    "CheckParams",
    "CheckReport",
    "Job",
    "ModuleReport",
    "box_weight",
    "check_0faithful",
    "check_0faithful_failure",
    "check_arrow_chains",
    "check_associativity",
    "check_brauer_humphreys",
    "check_cartan",
    "check_decomposition_numbers",
    "check_ell_drop",
    "check_exact_equivalence",
    "check_ext_transfer",
    "check_ext_vanishing",
    "check_functor_identities",
    "check_inverse_corner",
    "check_inverse_identity",
    "check_projective_injective",
    "check_radical",
    "check_resolutions",
    "check_restricted_modules",
    "check_rotation",
    "check_schedule",
    "check_standard_structure",
    "check_star",
    "check_tilting_coresolution",
    "check_tilting_modules",
    "check_tilting_socle2",
    "check_translated_projectives",
    "check_translated_standards",
    "check_uniserial_standards",
    "check_unit",
    "check_worked_examples",
    "check_worked_products",
    "jobs_for",
    "module_report",
    "run_jobs",
    "run_suite",
    "sample_modules",
    "timed_check",
]
