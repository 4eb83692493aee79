"""Indecomposable tilting modules built by translating L(m^n)."""

from __future__ import annotations

import logging
from functools import lru_cache

from ..arcalgebra import AlgebraContext, get_context
from ..combinatorics import Weight, ascents, full_weight, remove_pair
from ..exceptions import ValidationError
from ..repcat import ModuleRep, simple
from .projective import G_t

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def tilting(lam: Weight, ctx: AlgebraContext | None = None, ascent: int | None = None) -> ModuleRep:
    """
    T(λ) over K^m_n.

    T(m^n) = L(m^n); otherwise T(λ) = G^{t_i} T(λ′) for an ascent i of λ,
    the smallest one unless ``ascent`` picks another.

    Raises:
        ValidationError: If ``ascent`` is not an ascent of λ.
    """
    ctx = ctx or get_context(lam.m, lam.n)
    if ctx.truncated or ctx.box != lam.box:
        raise ValidationError(f"{lam} does not label a tilting module of {ctx.name}.")
    if lam == full_weight(lam.m, lam.n):
        return simple(ctx, lam).renamed(f"T({lam})")
    choices = ascents(lam)
    i = choices[0] if ascent is None else ascent
    if i not in choices:
        raise ValidationError(f"{i} is not an ascent of {lam}; choose from {choices}.")
    smaller = remove_pair(lam, i)
    inner = tilting(smaller, get_context(lam.m - 1, lam.n - 1, ctx.field.characteristic))
    T = G_t(i, inner).renamed(f"T({lam})")
    logger.debug("Built %s from %s through t_%d: dim %d", T.name, inner.name, i, T.dim)
    return T
