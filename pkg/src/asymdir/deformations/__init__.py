from .basis import CanonicalBasis, canonical_basis, kernel_generators
from .rank import KernelSpan, RankReport, cup_kernel_rank, cup_matrix, evaluation_rank, symbolic_kernel
from .tangency import MaroniTangency, Tangency, maroni_oracle, maroni_tangency, trigonal_tangency

__all__ = [
    "CanonicalBasis", "canonical_basis", "kernel_generators",
    "KernelSpan", "RankReport", "cup_kernel_rank", "cup_matrix", "evaluation_rank", "symbolic_kernel",
    "MaroniTangency", "Tangency", "maroni_oracle", "maroni_tangency", "trigonal_tangency",
]
