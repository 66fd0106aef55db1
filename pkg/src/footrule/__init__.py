"""Exact distribution of Spearman's footrule over permutations.

The library computes the weight enumerator N_n(q) of the footrule
statistic and the joint enumerator S_n(p, q) with the inversion count by
several independent exact algorithms, extracts moments as exact
rationals, fits closed-form polynomial formulas in n with guard-point
validation, and verifies the known identities and (bi)normal moment
limits with zero tolerance.

Everything is pure integer/rational arithmetic; all functions are pure
and safe to call concurrently.
"""

from .algebra import (BiPoly, GuardPointMismatch, RatPoly, UniPoly,
                      fraction_from_str, fraction_to_str, lagrange_fit)
from .enumerators import (SUBSET_FOOTRULE_MAX, SUBSET_JOINT_MAX,
                          contfrac_footrule_series, motzkin_footrule_series,
                          motzkin_joint_series, netto_poly, series_envelope,
                          subset_footrule_poly, subset_joint_poly)
from .formulas import (BI_DATA_CAP, UNI_DATA_CAP, Check, FittedFormula,
                       NoStableFit, VerificationReport, fit_mean_formula,
                       fit_mixed_formula, fit_moment_formula,
                       footrule_moment_data, inversion_moment_data,
                       mixed_moment_tables, normal_moment, reference_formulas,
                       run_verification, window_hi)
from .moments import (FOOTRULE_VARIANCE_LEAD, INV_VARIANCE_LEAD, RHO,
                      Sqrt10Value, binormal_moment, central_moment,
                      central_moment_qdq, mean_of_poly, mixed_central_moment,
                      mixed_central_moments, scaled_mixed_moment_limit,
                      scaled_moment_limit)
from .perms import (BRUTE_FORCE_MAX, CapExceeded, as_permutation,
                    brute_footrule_poly, brute_joint_poly, footrule,
                    format_permutation, inverse_permutation, inversions,
                    parse_permutation)

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "GuardPointMismatch", "RatPoly", "UniPoly",
    "fraction_from_str", "fraction_to_str", "lagrange_fit",
    "SUBSET_FOOTRULE_MAX", "SUBSET_JOINT_MAX", "contfrac_footrule_series",
    "motzkin_footrule_series", "motzkin_joint_series", "netto_poly",
    "series_envelope", "subset_footrule_poly", "subset_joint_poly",
    "BI_DATA_CAP", "UNI_DATA_CAP", "Check", "FittedFormula", "NoStableFit",
    "VerificationReport", "fit_mean_formula", "fit_mixed_formula",
    "fit_moment_formula", "footrule_moment_data", "inversion_moment_data",
    "mixed_moment_tables", "normal_moment", "reference_formulas",
    "run_verification", "window_hi",
    "FOOTRULE_VARIANCE_LEAD", "INV_VARIANCE_LEAD", "RHO", "Sqrt10Value",
    "binormal_moment", "central_moment", "central_moment_qdq", "mean_of_poly",
    "mixed_central_moment", "mixed_central_moments",
    "scaled_mixed_moment_limit", "scaled_moment_limit",
    "BRUTE_FORCE_MAX", "CapExceeded", "as_permutation", "brute_footrule_poly",
    "brute_joint_poly", "footrule", "format_permutation",
    "inverse_permutation", "inversions", "parse_permutation",
    "__version__",
]
