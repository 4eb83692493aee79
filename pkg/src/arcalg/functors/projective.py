"""Projective functors G^{t_i}, G^{t_i*} and their truncations over H."""

from __future__ import annotations

from ..exceptions import ValidationError
from ..repcat import ModuleRep
from .bimodule import Bimodule, bimodule_t, bimodule_t_star, relative_tensor, truncate_bimodule


def _box_for_t(N: ModuleRep) -> tuple[int, int]:
    # N lives over K^{m-1}_{n-1}
    return N.ctx.m + 1, N.ctx.n + 1


def _apply(bim: Bimodule, N: ModuleRep, label: str, deep: bool) -> ModuleRep:
    out = relative_tensor(bim, N, deep=deep)
    return out.renamed(f"{label}({N.name})" if N.name else label)


def G_t(i: int, N: ModuleRep, deep: bool = False) -> ModuleRep:
    """
    G^{t_i}N = 𝐊^{t_i} ⊗ N, taking K^{m-1}_{n-1}-modules to K^m_n-modules.

    Over a truncated algebra the truncated bimodule is used, giving Ḡ^{t_i}.
    """
    m, n = _box_for_t(N)
    bim = bimodule_t(i, m, n, N.field.characteristic)
    if N.ctx.truncated:
        return _apply(truncate_bimodule(bim), N, f"Gbar^t{i}", deep)
    return _apply(bim, N, f"G^t{i}", deep)


def G_t_star(i: int, M: ModuleRep, deep: bool = False) -> ModuleRep:
    """G^{t_i*}M = 𝐊^{t_i*} ⊗ M, taking K^m_n-modules to K^{m-1}_{n-1}-modules."""
    m, n = M.ctx.m, M.ctx.n
    if m < 1 or n < 1:
        raise ValidationError(f"G^t{i}* needs m, n ≥ 1. Got ({m}, {n}).")
    bim = bimodule_t_star(i, m, n, M.field.characteristic)
    if M.ctx.truncated:
        return _apply(truncate_bimodule(bim), M, f"Gbar^t{i}*", deep)
    return _apply(bim, M, f"G^t{i}*", deep)
