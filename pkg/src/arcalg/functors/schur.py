"""The Schur functors f = e·(−), g = Hom_H(eK, −), g̃ = Ke ⊗_H (−) and the unit η."""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Any

from ..arcalgebra import AlgebraContext, get_context
from ..exactla import Matrix, Subspace
from ..exceptions import ValidationError
from ..repcat import ModuleMap, ModuleRep, hom_space
from .bimodule import bimodule_eK, bimodule_Ke, relative_tensor

logger = logging.getLogger(__name__)


def _truncated(ctx: AlgebraContext) -> AlgebraContext:
    return get_context(ctx.m, ctx.n, ctx.field.characteristic, truncated=True)


def schur_f(M: ModuleRep) -> ModuleRep:
    """
    eM as an H^m_n-module: the regular weight spaces of M.

    Raises:
        ValidationError: If M is not a K-module.
    """
    ctx = M.ctx
    if ctx.truncated:
        raise ValidationError(f"f takes K-modules, not modules over {ctx.name}.")
    h = _truncated(ctx)
    labels = set(h.weights)
    keep = [p for p, w in enumerate(M.weights) if w in labels]

    def provider(k: int) -> Matrix:
        return M.action(ctx.index[h.basis[k]]).submatrix(keep, keep)

    return ModuleRep(h, [M.weights[p] for p in keep], provider, name=f"f{M.name}")


class _HomModule:
    """Hom_H(eK, N) with a basis of functionals homogeneous for the right K-weights."""

    def __init__(self, ctx: AlgebraContext, N: ModuleRep) -> None:
        self.ctx = ctx
        self.N = N
        self.bim = bimodule_eK(ctx)
        self.source = self.bim.as_left_module()
        width = N.dim * self.bim.dim
        self.width = width
        flat = [self._flatten(f.matrix) for f in hom_space(self.source, N)]
        rows = Matrix.vstack(N.field, flat, width) if flat else Matrix.zeros(N.field, 0, width)
        blocks, pivots, weights = [], [], []
        groups: dict[Any, list[int]] = defaultdict(list)
        for r in range(N.dim):
            for x in range(self.bim.dim):
                groups[self.bim.right_weights[x]].append(r * self.bim.dim + x)
        for w in ctx.weights:
            cols = groups.get(w, [])
            part = Subspace.span(rows.select_cols(cols))
            if not part.dim:
                continue
            lifted = {
                i: {cols[j]: v for j, v in row.items()}
                for i, row in part.basis.row_dicts().items()
            }
            blocks.append(Matrix.from_dict(N.field, (part.dim, width), lifted))
            pivots.extend(cols[p] for p in part.pivots)
            weights.extend([w] * part.dim)
        basis = Matrix.vstack(N.field, blocks, width)
        self.space = Subspace(basis, tuple(pivots), width)
        self.weights = weights

    def _flatten(self, F: Matrix) -> Matrix:
        dim = self.bim.dim
        row = {r * dim + x: v for r, cols in F.row_dicts().items() for x, v in cols.items()}
        return Matrix.from_dict(F.field, (1, self.width), {0: row})

    def _unflatten(self, row: dict[int, Any]) -> Matrix:
        dim = self.bim.dim
        entries: dict[int, dict[int, Any]] = defaultdict(dict)
        for flat, v in row.items():
            entries[flat // dim][flat % dim] = v
        return Matrix.from_dict(self.N.field, (self.N.dim, dim), entries)

    def action(self, k: int) -> Matrix:
        """(a·φ)(x) = φ(x·a) in the functional basis."""
        R = self.bim.right_action(k)
        images = [
            self._flatten(self._unflatten(row) @ R)
            for _, row in sorted(self.space.basis.row_dicts().items())
        ]
        if not images:
            return Matrix.zeros(self.N.field, 0, 0)
        stacked = Matrix.vstack(self.N.field, images, self.width)
        return self.space.coordinates(stacked).T

    def module(self) -> ModuleRep:
        return ModuleRep(self.ctx, self.weights, self.action, name=f"g{self.N.name}")


def _parent(N: ModuleRep) -> AlgebraContext:
    if not N.ctx.truncated:
        raise ValidationError(f"g and g̃ take H-modules, not modules over {N.ctx.name}.")
    return get_context(N.ctx.m, N.ctx.n, N.ctx.field.characteristic)


def schur_g(N: ModuleRep) -> ModuleRep:
    """g(N) = Hom_H(eK, N) as a K-module."""
    return _HomModule(_parent(N), N).module()


def schur_g_tilde(N: ModuleRep) -> ModuleRep:
    """g̃(N) = Ke ⊗_H N as a K-module."""
    return relative_tensor(bimodule_Ke(_parent(N)), N).renamed(f"g~{N.name}")


def eta(M: ModuleRep) -> tuple[ModuleRep, ModuleMap]:
    """
    The unit ``η(M): M → gf(M)``, ``v ↦ (x ↦ x·v)``.

    Returns:
        gf(M) and the map η(M)
    """
    ctx = M.ctx
    fM = schur_f(M)
    hom = _HomModule(ctx, fM)
    gfM = hom.module()
    keep = {p: q for q, p in enumerate(p for p, w in enumerate(M.weights) if w in set(fM.ctx.weights))}
    columns: list[Matrix] = []
    for v in range(M.dim):
        entries: dict[int, dict[int, Any]] = defaultdict(dict)
        for x, d in enumerate(hom.bim.basis):
            for r, row in M.action(ctx.index[d]).row_dicts().items():
                if v in row and r in keep:
                    entries[keep[r]][x] = row[v]
        phi = Matrix.from_dict(M.field, (fM.dim, hom.bim.dim), entries)
        columns.append(hom._flatten(phi))
    stacked = Matrix.vstack(M.field, columns, hom.width) if columns else Matrix.zeros(M.field, 0, hom.width)
    matrix = hom.space.coordinates(stacked).T
    return gfM, ModuleMap(M, gfM, matrix)
