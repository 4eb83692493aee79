"""Oriented circle diagrams λ̲μν̄, the distinguished basis of K^m_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..combinatorics import (
    Weight,
    check_enumeration_cap,
    cup_diagram,
    degree,
    enumerate_weights,
    is_oriented,
    is_regular,
)
from ..exceptions import ValidationError


@dataclass(frozen=True)
class BasisDiagram:
    """
    The diagram with cup diagram of ``bottom`` below, cap diagram of ``top``
    above, and ``middle`` orienting both.
    """

    bottom: Weight
    middle: Weight
    top: Weight
    degree: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if not (self.bottom.box == self.middle.box == self.top.box):
            raise ValidationError(
                f"Weights {self.bottom}, {self.middle}, {self.top} lie in different boxes."
            )
        below, above = cup_diagram(self.bottom), cup_diagram(self.top)
        if not (is_oriented(below, self.middle) and is_oriented(above, self.middle)):
            raise ValidationError(f"{self.middle} does not orient {self.bottom}|{self.top}.")
        object.__setattr__(
            self, "degree", degree(below, self.middle) + degree(above, self.middle)
        )

    @classmethod
    def parse(cls, text: str) -> BasisDiagram:
        """Read ``"bottom|middle|top"``."""
        parts = text.split("|")
        if len(parts) != 3:
            raise ValidationError(f"Expected 'bottom|middle|top', got {text!r}.")
        return cls(*(Weight.parse(p) for p in parts))

    @classmethod
    def idempotent(cls, w: Weight) -> BasisDiagram:
        return cls(w, w, w)

    @property
    def box(self) -> tuple[int, int]:
        return self.bottom.box

    @property
    def is_idempotent(self) -> bool:
        return self.bottom == self.middle == self.top

    def star(self) -> BasisDiagram:
        """Reflect in the horizontal axis: λ̲μν̄ ↦ ν̲μλ̄."""
        return BasisDiagram(self.top, self.middle, self.bottom)

    def rotated(self) -> BasisDiagram:
        """Turn the picture half way round; the result lives in K^n_m."""
        return BasisDiagram(self.top.rotated(), self.middle.rotated(), self.bottom.rotated())

    def to_dict(self) -> dict[str, Any]:
        return {
            "bottom": str(self.bottom),
            "middle": str(self.middle),
            "top": str(self.top),
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BasisDiagram:
        d = cls(Weight(data["bottom"]), Weight(data["middle"]), Weight(data["top"]))
        if "degree" in data and data["degree"] != d.degree:
            raise ValidationError(f"Stored degree {data['degree']} disagrees with {d}.")
        return d

    def __str__(self) -> str:
        return f"{self.bottom}|{self.middle}|{self.top}"


def try_diagram(bottom: Weight, middle: Weight, top: Weight) -> BasisDiagram | None:
    """The diagram if ``middle`` orients both outer diagrams, else None."""
    if is_oriented(cup_diagram(bottom), middle) and is_oriented(cup_diagram(top), middle):
        return BasisDiagram(bottom, middle, top)
    return None


def enumerate_basis(m: int, n: int, truncated: bool = False) -> list[BasisDiagram]:
    """
    List every oriented circle diagram of K^m_n.

    Args:
        m: Number of ``^`` symbols
        n: Number of ``v`` symbols
        truncated: Keep only diagrams with regular outer weights (the basis of H^m_n)

    Returns:
        Diagrams ordered by the positions of (bottom, middle, top) in
        :func:`enumerate_weights`

    Raises:
        ResourceCapExceeded: If Λ_{m,n} is above ``ENUMERATION_CAP``

    Example:
        >>> len(enumerate_basis(1, 1))
        5
    """
    check_enumeration_cap(m, n)
    weights = enumerate_weights(m, n)
    rank = {w: k for k, w in enumerate(weights)}
    outer = [w for w in weights if is_regular(w)] if truncated else weights
    out = []
    for mu in weights:
        oriented = [lam for lam in outer if is_oriented(cup_diagram(lam), mu)]
        for lam in oriented:
            for nu in oriented:
                out.append(BasisDiagram(lam, mu, nu))
    out.sort(key=lambda d: (rank[d.bottom], rank[d.middle], rank[d.top]))
    return out


def rotate(d: BasisDiagram) -> BasisDiagram:
    """The anti-isomorphism K^m_n → K^n_m given by a half turn of the picture."""
    return d.rotated()
