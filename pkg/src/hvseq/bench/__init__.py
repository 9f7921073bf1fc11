from .constraints import (
    ConstraintCondition,
    ConstraintResult,
    evaluate_criteria,
    instantiate_pair,
    load_conditions,
    run_constraints,
)
from .criteria import Criteria, CriteriaParseError, parse_criteria
from .priming import (
    DatasetError,
    PrimingRecord,
    PrimingResult,
    UndefinedCorrelationError,
    baseline_correlation,
    load_priming_csv,
    pearson,
    run_priming,
)
from .runner import map_realizations, realization_rng, realization_seed
from .sweep import sweep_profile, sweep_radius
