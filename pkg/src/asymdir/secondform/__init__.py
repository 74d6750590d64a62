from .conditions import (ASYMPTOTIC, CONDITIONS, INDETERMINATE, NOT_ASYMPTOTIC, ConditionReport,
                         asymptotic_conditions, classify, cond_eqdg, cond_g, cond_g2, gamma_relation,
                         oracle_value, verdict_tolerance)
from .doublesplit import DoubleSplitResult, double_split_check, plane_double_split, trigonal_double_split
from .quadrics import (GAMMA_PENCILS, QuadricRank4, gamma_quadrics, i2_membership, pencil_quadrics,
                       random_curve_points, second_form)
from .schiffer import SchifferResult, curve_residual, higher_schiffer_residue, schiffer_mu2_test
from .split import (TWO_PI_I, SplitDeformation, Value, pairing_residues, point_deformation,
                    split_deformation, w_pairing)

__all__ = [
    "ASYMPTOTIC", "CONDITIONS", "INDETERMINATE", "NOT_ASYMPTOTIC", "ConditionReport",
    "asymptotic_conditions", "classify", "cond_eqdg", "cond_g", "cond_g2", "gamma_relation",
    "oracle_value", "verdict_tolerance",
    "DoubleSplitResult", "double_split_check", "plane_double_split", "trigonal_double_split",
    "GAMMA_PENCILS", "QuadricRank4", "gamma_quadrics", "i2_membership", "pencil_quadrics",
    "random_curve_points", "second_form",
    "SchifferResult", "curve_residual", "higher_schiffer_residue", "schiffer_mu2_test",
    "TWO_PI_I", "SplitDeformation", "Value", "pairing_residues", "point_deformation",
    "split_deformation", "w_pairing",
]
