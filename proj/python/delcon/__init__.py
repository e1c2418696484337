"""Budget-optimal contract design for delegated classification."""

from ._delcon import (
    Contract,
    DelegationSetting,
    InputError,
    NumericalError,
    OutcomeDistribution,
    PreconditionError,
    ResourceError,
    SolveReport,
    best_response,
    binomial_pmf,
    budget_optimal,
    build_setting_from_samples,
    fit_power_law,
    is_implementable,
    is_mlrp_setting,
    make_ir,
    min_budget,
    min_budget_all_or_nothing,
    min_pay,
    principal_value,
    robustness_report,
    total_variation,
)

__all__ = [
    "Contract",
    "DelegationSetting",
    "InputError",
    "NumericalError",
    "OutcomeDistribution",
    "PreconditionError",
    "ResourceError",
    "SolveReport",
    "best_response",
    "binomial_pmf",
    "budget_optimal",
    "build_setting_from_samples",
    "fit_power_law",
    "is_implementable",
    "is_mlrp_setting",
    "make_ir",
    "min_budget",
    "min_budget_all_or_nothing",
    "min_pay",
    "principal_value",
    "robustness_report",
    "total_variation",
]
