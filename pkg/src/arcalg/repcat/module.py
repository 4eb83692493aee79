"""Finite dimensional left modules over a based algebra.

Every module keeps a basis of weight vectors: each basis vector ``v`` has a
weight ``λ`` with ``e_λ v = v``. Operators act on column vectors; a module
map ``f`` has a ``target.dim × source.dim`` matrix.
"""

from __future__ import annotations

import copy
import logging
import random
from collections import defaultdict
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any

from ..arcalgebra import AlgebraContext, AlgebraElement
from ..combinatorics import Weight, less
from ..exactla import Field, Matrix, Subspace, spin
from ..exceptions import ArcAlgError, ValidationError

logger = logging.getLogger(__name__)

ActionProvider = Callable[[int], Matrix]


class ModuleRep:
    """
    A left module given by the action of every algebra basis element.

    Actions are produced on demand by ``provider`` and memoized; an absent
    action is the zero matrix.
    """

    def __init__(
        self,
        ctx: AlgebraContext,
        weights: Sequence[Weight],
        provider: ActionProvider | Mapping[int, Matrix],
        name: str = "",
    ) -> None:
        self.ctx = ctx
        self.weights: tuple[Weight, ...] = tuple(weights)
        labels = set(ctx.weights)
        for w in self.weights:
            if w not in labels:
                raise ValidationError(f"{w} is not a weight of {ctx.name}.")
        if isinstance(provider, Mapping):
            table = dict(provider)
            self._provider: ActionProvider = lambda k: table.get(
                k, Matrix.zeros(ctx.field, self.dim, self.dim)
            )
        else:
            self._provider = provider
        self._actions: dict[int, Matrix] = {}
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    def renamed(self, name: str) -> ModuleRep:
        """The same module under another name; computed actions are shared."""
        other = copy.copy(self)
        other._name = name
        return other

    @property
    def field(self) -> Field:
        return self.ctx.field

    @property
    def dim(self) -> int:
        return len(self.weights)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<ModuleRep{label} over {self.ctx.name}, dim {self.dim}>"

    @cached_property
    def weight_spaces(self) -> dict[Weight, list[int]]:
        """Basis positions of each nonzero e_λM, in label order."""
        spaces: dict[Weight, list[int]] = defaultdict(list)
        for pos, w in enumerate(self.weights):
            spaces[w].append(pos)
        order = {w: k for k, w in enumerate(self.ctx.weights)}
        return dict(sorted(spaces.items(), key=lambda item: order[item[0]]))

    def weight_dims(self) -> dict[Weight, int]:
        return {w: len(cols) for w, cols in self.weight_spaces.items()}

    def comp_mult(self, lam: Weight) -> int:
        """[M : L(λ)] = dim e_λM."""
        if lam not in set(self.ctx.weights):
            raise ValidationError(f"{lam} does not label a simple module of {self.ctx.name}.")
        return len(self.weight_spaces.get(lam, []))

    def action(self, k: int) -> Matrix:
        """Matrix of the algebra basis element with index ``k``."""
        mat = self._actions.get(k)
        if mat is None:
            d = self.ctx.basis[k]
            if d.top not in self.weight_spaces or d.bottom not in self.weight_spaces:
                mat = Matrix.zeros(self.field, self.dim, self.dim)
            else:
                mat = self._provider(k)
                if mat.shape != (self.dim, self.dim):
                    raise ArcAlgError(f"Action of {d} has shape {mat.shape} on a dim {self.dim} module.")
            self._actions[k] = mat
        return mat

    def act(self, x: AlgebraElement) -> Matrix:
        total = Matrix.zeros(self.field, self.dim, self.dim)
        for k, c in self.ctx.coordinates(x).items():
            total = total + self.action(k).scale(c)
        return total

    def generator_actions(self) -> list[Matrix]:
        """Actions of the positive degree generators."""
        return [self.action(k) for k in self.ctx.positive_generators]

    def weight_projection(self, lam: Weight) -> Matrix:
        return Matrix.from_dict(
            self.field, (self.dim, self.dim), {p: {p: 1} for p in self.weight_spaces.get(lam, [])}
        )

    def check_actions(self, samples: int = 20, seed: int = 0) -> None:
        """
        Spot-check that the actions respect the structure constants.

        Raises:
            ArcAlgError: If ``A(a) A(b) ≠ Σ c A(d)`` for a sampled composable pair.
        """
        rng = random.Random(seed)
        ctx = self.ctx
        pairs = [
            (i, j)
            for i in range(ctx.dim)
            for j in ctx.by_bottom.get(ctx.basis[i].top, [])
        ]
        for i, j in rng.sample(pairs, min(samples, len(pairs))):
            lhs = self.action(i) @ self.action(j)
            rhs = Matrix.zeros(self.field, self.dim, self.dim)
            for k, c in ctx.product_indices(i, j).items():
                rhs = rhs + self.action(k).scale(c)
            if lhs != rhs:
                raise ArcAlgError(
                    f"{self!r} violates the product {ctx.basis[i]} * {ctx.basis[j]}."
                )

    def homogeneous_span(self, vectors: Matrix) -> Subspace:
        """
        Span of the weight components of ``vectors`` with a basis of weight vectors.

        For a span stable under the idempotents this is the span itself.
        """
        field = self.field
        blocks: list[Matrix] = []
        pivots: list[int] = []
        for cols in self.weight_spaces.values():
            part = Subspace.span(vectors.select_cols(cols))
            if not part.dim:
                continue
            rows = {
                i: {cols[j]: v for j, v in row.items()}
                for i, row in part.basis.row_dicts().items()
            }
            blocks.append(Matrix.from_dict(field, (part.dim, self.dim), rows))
            pivots.extend(cols[p] for p in part.pivots)
        return Subspace(Matrix.vstack(field, blocks, self.dim), tuple(pivots), self.dim)

    def spin(self, vectors: Matrix) -> Subspace:
        """The submodule generated by weight vectors."""
        return self.homogeneous_span(spin(vectors, self.generator_actions()).basis)

    def to_report(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "algebra": self.ctx.name,
            "dim": self.dim,
            "weights": {str(w): d for w, d in self.weight_dims().items()},
        }


@dataclass(frozen=True)
class ModuleMap:
    """A module homomorphism ``source → target``."""

    source: ModuleRep
    target: ModuleRep
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValidationError(
                f"Map matrix {self.matrix.shape} does not fit "
                f"{self.source.dim} → {self.target.dim}."
            )

    def is_homomorphism(self) -> bool:
        f = self.matrix
        for k in range(self.source.ctx.dim):
            if f @ self.source.action(k) != self.target.action(k) @ f:
                return False
        return True

    def compose(self, first: ModuleMap) -> ModuleMap:
        """``self ∘ first``."""
        return ModuleMap(first.source, self.target, self.matrix @ first.matrix)

    def rank(self) -> int:
        return self.matrix.rank()

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()


def _check_label(ctx: AlgebraContext, lam: Weight) -> None:
    if lam not in set(ctx.weights):
        raise ValidationError(f"{lam} is not a label of {ctx.name}.")


def projective(ctx: AlgebraContext, lam: Weight) -> ModuleRep:
    """
    P(λ) = A e_λ on the diagrams with top weight λ.

    Example:
        >>> projective(get_context(1, 1), Weight("^v")).dim
        2
    """
    _check_label(ctx, lam)
    cols = ctx.by_top[lam]
    position = {k: p for p, k in enumerate(cols)}
    weights = [ctx.basis[k].bottom for k in cols]

    def provider(i: int) -> Matrix:
        entries: dict[int, dict[int, int]] = defaultdict(dict)
        for j in ctx.by_bottom.get(ctx.basis[i].top, []):
            if j not in position:
                continue
            for k, c in ctx.product_indices(i, j).items():
                entries[position[k]][position[j]] = c
        return Matrix.from_dict(ctx.field, (len(cols), len(cols)), entries)

    return ModuleRep(ctx, weights, provider, name=f"P({lam})")


def simple(ctx: AlgebraContext, lam: Weight) -> ModuleRep:
    """The one dimensional L(λ): only e_λ acts, by 1."""
    _check_label(ctx, lam)
    one = Matrix.identity(ctx.field, 1)
    return ModuleRep(ctx, [lam], {ctx.idempotent_index(lam): one}, name=f"L({lam})")


def submodule(M: ModuleRep, space: Subspace, name: str = "") -> tuple[ModuleRep, ModuleMap]:
    """The submodule on a weight basis ``space`` and its inclusion."""
    basis = space.basis

    def provider(k: int) -> Matrix:
        return space.coordinates(basis @ M.action(k).T).T

    weights = [M.weights[p] for p in space.pivots]
    N = ModuleRep(M.ctx, weights, provider, name=name)
    return N, ModuleMap(N, M, basis.T)


def quotient(M: ModuleRep, space: Subspace, name: str = "") -> tuple[ModuleRep, ModuleMap]:
    """``M / space`` on the complement columns, with the projection."""
    keep = space.complement_columns()

    def provider(k: int) -> Matrix:
        images = M.action(k).T.select_rows(keep)
        return space.quotient_coordinates(images).T

    weights = [M.weights[c] for c in keep]
    Q = ModuleRep(M.ctx, weights, provider, name=name)
    projection = space.quotient_coordinates(Matrix.identity(M.field, M.dim)).T
    return Q, ModuleMap(M, Q, projection)


def kernel(f: ModuleMap) -> tuple[ModuleRep, ModuleMap]:
    M = f.source
    space = M.homogeneous_span(f.matrix.kernel_basis())
    return submodule(M, space, name=f"ker({f.source.name}→{f.target.name})")


def image(f: ModuleMap) -> Subspace:
    return f.target.homogeneous_span(f.matrix.T)


def cokernel(f: ModuleMap) -> tuple[ModuleRep, ModuleMap]:
    return quotient(f.target, image(f), name=f"coker({f.source.name}→{f.target.name})")


def dual(M: ModuleRep) -> ModuleRep:
    """M^⊛ with ``(aψ)(m) = ψ(a* m)`` on the dual basis."""
    ctx = M.ctx

    def provider(k: int) -> Matrix:
        return M.action(ctx.star_index(k)).T

    return ModuleRep(ctx, M.weights, provider, name=f"{M.name}^*" if M.name else "")


def direct_sum(
    modules: Sequence[ModuleRep], name: str = ""
) -> tuple[ModuleRep, list[ModuleMap], list[ModuleMap]]:
    """
    The direct sum with its injections and projections.

    Raises:
        ValidationError: If the summands live over different algebras.
    """
    if not modules:
        raise ValidationError("A direct sum needs at least one summand.")
    ctx = modules[0].ctx
    if any(N.ctx is not ctx for N in modules):
        raise ValidationError("Summands live over different algebras.")
    field = ctx.field
    weights = [w for N in modules for w in N.weights]

    def provider(k: int) -> Matrix:
        return Matrix.block_diagonal(field, [N.action(k) for N in modules])

    S = ModuleRep(ctx, weights, provider, name=name or " ⊕ ".join(N.name for N in modules))
    injections, projections = [], []
    offset = 0
    for N in modules:
        inj = Matrix.from_dict(field, (S.dim, N.dim), {offset + i: {i: 1} for i in range(N.dim)})
        injections.append(ModuleMap(N, S, inj))
        projections.append(ModuleMap(S, N, inj.T))
        offset += N.dim
    return S, injections, projections


def zero_module(ctx: AlgebraContext) -> ModuleRep:
    return ModuleRep(ctx, [], {}, name="0")


def regular_module(ctx: AlgebraContext) -> ModuleRep:
    """A as a left module over itself, the sum of all P(λ)."""
    M, _, _ = direct_sum([projective(ctx, w) for w in ctx.weights], name=ctx.name)
    return M


def trace_submodule(M: ModuleRep, inside: Subspace, lam: Weight) -> Subspace:
    """Submodule generated by the weight-μ parts of ``inside`` with μ ≮ λ."""
    rows = [r for r, p in enumerate(inside.pivots) if not less(M.weights[p], lam)]
    return M.spin(inside.basis.select_rows(rows))


@lru_cache(maxsize=512)
def standard(ctx: AlgebraContext, lam: Weight) -> ModuleRep:
    """
    Δ(λ) = P(λ) / O^{π(λ)}(rad P(λ)).

    Raises:
        ValidationError: Over a truncated algebra, which is not quasi-hereditary
            with respect to these labels.
    """
    from .series import radical

    if ctx.truncated:
        raise ValidationError(f"Standard modules are defined over K, not over {ctx.name}.")
    P = projective(ctx, lam)
    trace = trace_submodule(P, radical(P), lam)
    D, _ = quotient(P, trace, name=f"Δ({lam})")
    return D
