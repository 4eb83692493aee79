"""Schur functors, projective functors and tilting modules."""

from .bimodule import (
    Bimodule,
    ProjectiveDecomposition,
    StackedDiagram,
    bimodule_eK,
    bimodule_Ke,
    bimodule_t,
    bimodule_t_star,
    left_projective_decomposition,
    relative_tensor,
    stacked_degree,
    truncate_bimodule,
)
from .projective import G_t, G_t_star
from .schur import eta, schur_f, schur_g, schur_g_tilde
from .tilting import tilting

__all__ = [
    "Bimodule",
    "G_t",
    "G_t_star",
    "ProjectiveDecomposition",
    "StackedDiagram",
    "bimodule_Ke",
    "bimodule_eK",
    "bimodule_t",
    "bimodule_t_star",
    "eta",
    "left_projective_decomposition",
    "relative_tensor",
    "schur_f",
    "schur_g",
    "schur_g_tilde",
    "stacked_degree",
    "tilting",
    "truncate_bimodule",
]
