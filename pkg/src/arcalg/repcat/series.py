"""Radical and socle series."""

from __future__ import annotations

from collections import Counter

from ..combinatorics import Weight
from ..exactla import Matrix, Subspace
from .module import ModuleMap, ModuleRep, quotient


def _radical_of(M: ModuleRep, space: Subspace) -> Subspace:
    images = [space.basis @ A.T for A in M.generator_actions()]
    return M.spin(Matrix.vstack(M.field, images, M.dim))


def radical(M: ModuleRep) -> Subspace:
    """
    rad M, spanned by the positive degree part of the algebra applied to M.

    Example:
        The radical of P(^v) over K^1_1 is one dimensional.
    """
    return _radical_of(M, Subspace.whole(M.field, M.dim))


def radical_series(M: ModuleRep) -> list[Subspace]:
    """``[M, rad M, rad² M, ..., 0]``."""
    series = [M.homogeneous_span(Matrix.identity(M.field, M.dim))]
    while series[-1].dim:
        series.append(_radical_of(M, series[-1]))
    return series


def socle(M: ModuleRep) -> Subspace:
    """soc M, the common kernel of the positive degree actions."""
    return _preimage(M, Subspace.zero(M.field, M.dim))


def _preimage(M: ModuleRep, inner: Subspace) -> Subspace:
    """Vectors pushed into ``inner`` by every positive degree generator."""
    actions = M.generator_actions()
    if not actions:
        return M.homogeneous_span(Matrix.identity(M.field, M.dim))
    reduce_to = inner.quotient_coordinates(Matrix.identity(M.field, M.dim)).T
    stacked = Matrix.vstack(M.field, [reduce_to @ A for A in actions], M.dim)
    return M.homogeneous_span(stacked.kernel_basis())


def socle_series(M: ModuleRep) -> list[Subspace]:
    """``[0, soc M, soc² M, ..., M]``."""
    series = [Subspace.zero(M.field, M.dim)]
    while series[-1].dim < M.dim:
        series.append(_preimage(M, series[-1]))
    return series


def layer_multisets(M: ModuleRep, series: list[Subspace]) -> list[dict[Weight, int]]:
    """Simple labels in each subquotient of a filtration, outermost first."""

    def labels(space: Subspace) -> Counter[Weight]:
        return Counter(M.weights[p] for p in space.pivots)

    outer_first = series if series[0].dim >= series[-1].dim else series[::-1]
    out = []
    for big, small in zip(outer_first, outer_first[1:], strict=False):
        diff = labels(big) - labels(small)
        out.append(dict(sorted(diff.items(), key=lambda item: item[0].symbols)))
    return out


def radical_layers(M: ModuleRep) -> list[dict[Weight, int]]:
    return layer_multisets(M, radical_series(M))


def socle_layers(M: ModuleRep) -> list[dict[Weight, int]]:
    """Socle layers listed from the top, to line up with :func:`radical_layers`."""
    return layer_multisets(M, socle_series(M))


def loewy_length(M: ModuleRep) -> int:
    return len(radical_series(M)) - 1


def top(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """M / rad M with the projection."""
    return quotient(M, radical(M), name=f"top {M.name}".strip())


def is_rigid(M: ModuleRep) -> bool:
    """True if the radical and socle series are the same filtration."""
    rad = radical_series(M)
    soc = socle_series(M)
    return len(rad) == len(soc) and all(
        a <= b and b <= a for a, b in zip(rad, reversed(soc), strict=True)
    )


def is_uniserial(M: ModuleRep) -> bool:
    """Every radical layer is simple."""
    return all(sum(layer.values()) == 1 for layer in radical_layers(M))
