from .branch import BranchSeries, branch_expansion, evaluate_on_branch
from .residue import (RatDifferential, RatFun, pullback, rational_residue_at,
                      rational_residue_at_infinity, rational_residues, ratfun_series, residue, residue_at_point,
                      residue_sum_over_fiber)

__all__ = [
    "BranchSeries", "RatDifferential", "RatFun", "branch_expansion", "evaluate_on_branch",
    "pullback", "rational_residue_at", "rational_residue_at_infinity", "rational_residues",
    "ratfun_series", "residue", "residue_at_point", "residue_sum_over_fiber",
]
