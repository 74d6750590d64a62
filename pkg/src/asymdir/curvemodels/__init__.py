from .families import (ASYMPTOTIC, MARONI, SIGNATURES, TrigonalModel, build_family,
                       model_from_json, normalize_family, rescale_y)
from .fibers import BranchPoint, FiberPoint, curve_poly, fiber_points, is_reduced, ramification_data
from .genus import genus_riemann_hurwitz, infinity_chart
from .sampling import random_rational, sample_model, sample_params, stream
from .sections import CANONICAL_TAGS, G_TAG, L_TAGS, M_TAGS, Tag
from .plane import LineSection, PlaneCurveModel, build_plane_curve, line_section, smoothness_certificate

__all__ = [
    "ASYMPTOTIC", "MARONI", "SIGNATURES", "BranchPoint", "FiberPoint", "LineSection",
    "PlaneCurveModel", "TrigonalModel", "build_plane_curve", "line_section", "smoothness_certificate",
    "build_family", "curve_poly", "fiber_points", "genus_riemann_hurwitz", "infinity_chart",
    "is_reduced", "model_from_json", "normalize_family", "ramification_data", "rescale_y",
    "random_rational", "sample_model", "sample_params", "stream",
    "CANONICAL_TAGS", "G_TAG", "L_TAGS", "M_TAGS", "Tag",
]
