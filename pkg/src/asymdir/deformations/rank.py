"""Kernel and rank of the cup product with a split deformation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..curvemodels import curve_poly
from ..localexpand import RatDifferential, RatFun
from ..localexpand.residue import residue_at_point
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, to_complex
from ..secondform import SplitDeformation, random_curve_points, split_deformation
from .basis import CanonicalBasis, canonical_basis, kernel_generators

RANK_TOL = 1e-8


@dataclass
class KernelSpan:
    generators: list[list[int]]
    dimension: int


@dataclass
class RankReport:
    genus: int
    rank: int
    kernel: KernelSpan
    symbolic_dim: int
    numeric_dim: int
    expected_dim: int
    singular_values: list[float] = field(default_factory=list)
    evaluation_rank: int = 0

    @property
    def kernel_dim(self) -> int:
        return self.kernel.dimension

    @property
    def discrepancy(self) -> bool:
        """True if the symbolic, numeric and expected kernel dimensions disagree."""
        return len({self.symbolic_dim, self.numeric_dim, self.expected_dim}) > 1

    def __iter__(self):
        # unpacks as (rank, kernel)
        return iter((self.rank, self.kernel))

    def to_json(self) -> dict:
        return {"rank": self.rank, "kernel_dim": self.kernel_dim, "genus": self.genus,
                "method": "symbolic+numeric", "symbolic_kernel_dim": self.symbolic_dim,
                "numeric_kernel_dim": self.numeric_dim, "expected_kernel_dim": self.expected_dim,
                "discrepancy": self.discrepancy,
                "kernel_generators": self.kernel.generators,
                "cup_singular_values": self.singular_values,
                "basis_evaluation_rank": self.evaluation_rank}


def numeric_rank(M: np.ndarray, tol: float = RANK_TOL) -> tuple[int, list[float]]:
    s = np.linalg.svd(M, compute_uv=False) if M.size else np.zeros(0)
    top = s[0] if len(s) else 0.0
    return int(np.sum(s > tol * max(top, 1e-300))) if top else 0, [float(v) for v in s]


def symbolic_kernel(basis: CanonicalBasis) -> KernelSpan:
    gens = []
    for tag in kernel_generators(basis.genus_tag):
        v = basis.coordinates(tag)
        if v not in gens:
            gens.append(v)
    dim, _ = numeric_rank(np.array(gens, dtype=float))
    return KernelSpan(gens, dim)


def cup_matrix(basis: CanonicalBasis, zeta: SplitDeformation) -> np.ndarray:
    """``C[j, k] = sum_D Res(g_j g_k omega)`` with ``omega = x y dx / P_y``."""
    P = zeta.P
    weight = RatFun(Poly({(1, 1): 1}), P.diff(1))
    ratios = list(basis.ratios.values())
    n = len(ratios)
    C = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for k in range(j, n):
            diff = RatDifferential.h_dx(ratios[j] * ratios[k] * weight)
            v = sum(to_complex(residue_at_point(diff, zeta.curve, p, zeta.ctx)[0]) for p in zeta.D)
            C[j, k] = C[k, j] = v
    return C


def evaluation_rank(basis: CanonicalBasis, curve) -> int:
    """Rank of the basis ratios evaluated at ``2 g`` random curve points."""
    pts = random_curve_points(curve, 2 * basis.genus_tag, seed=3)
    E = np.array([[complex(f(x, y)) for f in basis.ratios.values()] for x, y in pts])
    E /= np.maximum(np.abs(E).max(axis=0), 1e-300)
    return numeric_rank(E)[0]


def cup_kernel_rank(model, zeta: SplitDeformation | None = None, ctx: NumCtx = DEFAULT_CTX) -> RankReport:
    """Rank of ``zeta`` as ``genus - dim ker(cup zeta)``.

    The kernel is the span of ``s1 H^0(M)`` and ``t H^0(L)`` in basis
    coordinates; the numeric check is the rank of the cup pairing matrix.
    """
    zeta = zeta or split_deformation(model, ctx)
    basis = canonical_basis(model)
    genus = basis.genus_tag
    kernel = symbolic_kernel(basis)
    C = cup_matrix(basis, zeta)
    c_rank, sv = numeric_rank(C)
    expected = len(kernel_generators(genus)) - 1
    return RankReport(genus, genus - kernel.dimension, kernel, kernel.dimension, genus - c_rank,
                      expected, sv, evaluation_rank(basis, curve_poly(model)))
