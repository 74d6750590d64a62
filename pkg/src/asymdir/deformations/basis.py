"""Monomial bases of holomorphic differentials on the trigonal models."""

from __future__ import annotations

from dataclasses import dataclass

from ..curvemodels.sections import CANONICAL_TAGS, L_TAGS, M_TAGS, S1, T, Tag, canonical_ratio
from ..localexpand import RatFun


@dataclass(frozen=True)
class CanonicalBasis:
    """Basis tags of ``H^0(K)`` and their ratios to ``omega = s1 t``.

    Tags are exponent vectors, so multiplying by ``s1``, ``s2`` or ``t`` is
    vector addition followed by a lookup in ``symbols``.
    """

    genus_tag: int
    symbols: tuple[Tag, ...]

    @property
    def names(self) -> list[str]:
        return [t.name for t in self.symbols]

    @property
    def ratios(self) -> dict[str, RatFun]:
        return {t.name: RatFun(*canonical_ratio(t)) for t in self.symbols}

    def index(self, tag: Tag) -> int | None:
        try:
            return self.symbols.index(tag)
        except ValueError:
            return None

    def multiply(self, tag: Tag, factor: Tag) -> int | None:
        """Index of ``factor * tag`` in the basis, or None if it is not a basis tag."""
        return self.index(tag * factor)

    def coordinates(self, tag: Tag) -> list[int]:
        k = self.index(tag)
        if k is None:
            raise KeyError(f"{tag.name} is not a basis monomial")
        return [int(i == k) for i in range(len(self.symbols))]

    def to_json(self) -> dict:
        return {"genus": self.genus_tag, "symbols": self.names,
                "ratios": {t.name: {"x": t.s1 - 1, "y": t.t - 1} for t in self.symbols}}


def canonical_basis(model) -> CanonicalBasis:
    genus = getattr(model, "genus", model)
    return CanonicalBasis(genus, CANONICAL_TAGS[genus])


def kernel_generators(genus: int) -> list[Tag]:
    """``s1 * H^0(M)`` together with ``t * H^0(L)``, as products of tags."""
    return [S1 * m for m in M_TAGS[genus]] + [T * l for l in L_TAGS]


__all__ = ["CanonicalBasis", "canonical_basis", "kernel_generators"]
