"""Covariance-level separability toolkit for two-mode Gaussian states.

Classifies 4x4 covariance matrices as nonphysical, entangled or separable by
evaluating a hierarchy of criteria (an ensemble-refined condition, Simon's
partial-transpose condition, and the Duan-type EPR condition) and the
extremal-squeezing bound at the P-representation boundary.
"""

from .covariance import (
    J2,
    StandardForm,
    apply_symp,
    ensemble_matrix,
    is_physical,
    p_rep_ensemble,
    partial_transpose,
    standard_matrix,
    symplectic_form,
    to_standard_form,
)
from .criteria import (
    CriterionReport,
    Outcome,
    ParamSet,
    Verdict,
    classify,
    duan_criterion,
    gap_general,
    gap_separable,
    simon_algebraic,
    simon_bound,
    simon_criterion,
    stringent_criterion,
    weak_gap,
)
from .errors import (
    BoundaryPRep,
    CvsepError,
    DegenerateBlock,
    InvalidEnsemble,
    InvalidEnsembleMatrix,
    InvalidInput,
    InvalidSpec,
    InvalidTransform,
    NotPRepresentable,
    OutOfDomain,
)
from .matkit import DEFAULT_TOL
from .prep import PWeight, char_fn, p_density, p_moment_residual, p_sample, p_weight
from .squeezing import (
    SqueezeParams,
    SqueezeSolution,
    apply_squeeze,
    duan_bound_at,
    duan_split_residual,
    extremality_residual,
    optimal_squeeze,
    p_rep_bound_at,
    prep_conditions,
    r2_of_r1,
    superadditivity_gap,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPRep",
    "CriterionReport",
    "CvsepError",
    "DEFAULT_TOL",
    "DegenerateBlock",
    "InvalidEnsemble",
    "InvalidEnsembleMatrix",
    "InvalidInput",
    "InvalidSpec",
    "InvalidTransform",
    "J2",
    "NotPRepresentable",
    "Outcome",
    "OutOfDomain",
    "PWeight",
    "ParamSet",
    "SqueezeParams",
    "SqueezeSolution",
    "StandardForm",
    "Verdict",
    "apply_squeeze",
    "apply_symp",
    "char_fn",
    "classify",
    "duan_bound_at",
    "duan_criterion",
    "duan_split_residual",
    "ensemble_matrix",
    "extremality_residual",
    "gap_general",
    "gap_separable",
    "is_physical",
    "optimal_squeeze",
    "p_density",
    "p_moment_residual",
    "p_rep_bound_at",
    "p_rep_ensemble",
    "p_sample",
    "p_weight",
    "partial_transpose",
    "prep_conditions",
    "r2_of_r1",
    "simon_algebraic",
    "simon_bound",
    "simon_criterion",
    "standard_matrix",
    "stringent_criterion",
    "superadditivity_gap",
    "symplectic_form",
    "to_standard_form",
    "weak_gap",
]
