"""Bimodules of stacked diagrams and relative tensor products.

𝐊^{t_i} is spanned by oriented pictures μ̲ν t_i λη̄: the cup diagram of μ
under the weight ν, the matching t_i joining positions i, i+1 of ν with
vertical strands elsewhere, the weight λ on top of those strands and the cap
diagram of η above. 𝐊^{t_i*} is the upside-down picture.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Literal

from ..arcalgebra import AlgebraContext, BasisDiagram, Layer, Picture, get_context, reduce_layer
from ..combinatorics import (
    Weight,
    cup_diagram,
    degree,
    enumerate_weights,
    is_clockwise,
    is_oriented,
    is_regular,
    remove_pair,
    sign_at,
)
from ..conf import dim_cap
from ..exactla import Matrix
from ..exceptions import ArcAlgError, ResourceCapExceeded, ValidationError
from ..repcat import ModuleRep, quotient

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]


@dataclass(frozen=True)
class StackedDiagram:
    """An oriented picture μ̲ν · (matching) · λη̄ spanning a bimodule."""

    bottom: Weight
    lower: Weight
    upper: Weight
    top: Weight

    def __str__(self) -> str:
        return f"{self.bottom}|{self.lower}|{self.upper}|{self.top}"


class Bimodule:
    """
    A finite dimensional (A, B)-bimodule on a basis of weight vectors.

    ``left_weights[p]`` and ``right_weights[p]`` are the idempotents fixing
    basis vector ``p`` from either side. Right actions are stored as
    operators on column vectors, ``x ↦ x·b``.
    """

    def __init__(
        self,
        left: AlgebraContext,
        right: AlgebraContext,
        basis: Sequence[Any],
        left_weights: Sequence[Weight],
        right_weights: Sequence[Weight],
        left_provider: Callable[[int], Matrix],
        right_provider: Callable[[int], Matrix],
        name: str = "",
    ) -> None:
        self.left = left
        self.right = right
        self.basis = list(basis)
        self.left_weights = tuple(left_weights)
        self.right_weights = tuple(right_weights)
        self._left_provider = left_provider
        self._right_provider = right_provider
        self._left: dict[int, Matrix] = {}
        self._right: dict[int, Matrix] = {}
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Any:
        return self.left.field

    def __repr__(self) -> str:
        return f"<Bimodule {self.name} ({self.left.name}, {self.right.name}), dim {self.dim}>"

    def left_action(self, k: int) -> Matrix:
        if k not in self._left:
            self._left[k] = self._left_provider(k)
        return self._left[k]

    def right_action(self, k: int) -> Matrix:
        if k not in self._right:
            self._right[k] = self._right_provider(k)
        return self._right[k]

    def check_commuting(self, samples: int = 20, seed: int = 0) -> None:
        """
        Spot-check ``(a·x)·b = a·(x·b)``.

        Raises:
            ArcAlgError: On the first sampled pair that fails.
        """
        rng = random.Random(seed)
        lefts = rng.sample(range(self.left.dim), min(samples, self.left.dim))
        rights = rng.sample(range(self.right.dim), min(samples, self.right.dim))
        for a, b in zip(lefts, rights, strict=False):
            if self.left_action(a) @ self.right_action(b) != self.right_action(b) @ self.left_action(a):
                raise ArcAlgError(
                    f"{self!r}: left {self.left.basis[a]} and right "
                    f"{self.right.basis[b]} do not commute."
                )

    def as_left_module(self) -> ModuleRep:
        return ModuleRep(self.left, self.left_weights, self.left_action, name=self.name)

    def restricted(self, keep: Callable[[int], bool], left: AlgebraContext, right: AlgebraContext, name: str) -> Bimodule:
        """The sub-bimodule on the basis vectors selected by ``keep``, over truncated algebras.

        Valid when the kept span is stable under the truncated actions, as
        for ``e·X·e′``.
        """
        cols = [p for p in range(self.dim) if keep(p)]

        def lift(mat_of: Callable[[int], Matrix], outer: AlgebraContext, inner: AlgebraContext) -> Callable[[int], Matrix]:
            def provider(k: int) -> Matrix:
                return mat_of(outer.index[inner.basis[k]]).submatrix(cols, cols)

            return provider

        return Bimodule(
            left,
            right,
            [self.basis[p] for p in cols],
            [self.left_weights[p] for p in cols],
            [self.right_weights[p] for p in cols],
            lift(self.left_action, self.left, left),
            lift(self.right_action, self.right, right),
            name=name,
        )


def _stacked_action(
    shape: Callable[[BasisDiagram, StackedDiagram], Picture | None],
    layer: int,
    read: Callable[[tuple[str, ...], BasisDiagram, StackedDiagram], StackedDiagram | None],
    ctx: AlgebraContext,
    basis: list[StackedDiagram],
    index: dict[StackedDiagram, int],
) -> Callable[[int], Matrix]:
    def provider(k: int) -> Matrix:
        a = ctx.basis[k]
        entries: dict[int, dict[int, int]] = defaultdict(dict)
        for col, x in enumerate(basis):
            picture = shape(a, x)
            if picture is None:
                continue
            for labels, c in reduce_layer(picture, layer).items():
                y = read(labels, a, x)
                if y is None:
                    raise ArcAlgError(
                        f"Surgery on {a} . {x} produced labels {labels}, "
                        "which give no basis vector of the bimodule."
                    )
                row = index[y]
                entries[row][col] = entries[row].get(col, 0) + c
        return Matrix.from_dict(ctx.field, (len(basis), len(basis)), entries)

    return provider


def _oriented(d: Weight, w: Weight) -> bool:
    return is_oriented(cup_diagram(d), w)


def _check_position(i: int, m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValidationError(f"t_i needs m, n ≥ 1. Got ({m}, {n}).")
    if not 1 <= i < m + n:
        raise ValidationError(f"i must lie in 1..{m + n - 1}. Got {i}.")


def stacked_degree(x: StackedDiagram, i: int, star: bool = False) -> int:
    """Clockwise cups and caps of the picture, the arc of t_i included."""
    row = x.upper if star else x.lower
    return (
        degree(cup_diagram(x.bottom), x.lower)
        + degree(cup_diagram(x.top), x.upper)
        + int(is_clockwise(row.at(i), row.at(i + 1)))
    )


@lru_cache(maxsize=64)
def bimodule_t(i: int, m: int, n: int, characteristic: int | None = None) -> Bimodule:
    """
    𝐊^{t_i} as a (K^m_n, K^{m-1}_{n-1})-bimodule.

    The basis is every (μ, ν, λ, η) with μ̲ν oriented, ν mixed at i, i+1,
    λ = ν with that pair removed, and λη̄ oriented.

    Raises:
        ValidationError: If ``i`` is out of range or the box is too small.
    """
    _check_position(i, m, n)
    big = get_context(m, n, characteristic)
    small = get_context(m - 1, n - 1, characteristic)
    basis = []
    for nu in enumerate_weights(m, n):
        if sign_at(nu, i) is None:
            continue
        lam = remove_pair(nu, i)
        bottoms = [mu for mu in big.weights if _oriented(mu, nu)]
        tops = [eta for eta in small.weights if _oriented(eta, lam)]
        basis.extend(StackedDiagram(mu, nu, lam, eta) for mu in bottoms for eta in tops)
    basis.sort(key=str)
    index = {x: p for p, x in enumerate(basis)}

    def left_shape(a: BasisDiagram, x: StackedDiagram) -> Picture | None:
        if a.top != x.bottom:
            return None
        return Picture(
            a.bottom,
            (a.middle.symbols, x.lower.symbols, x.upper.symbols),
            (Layer.mirror(a.top), Layer.t(i)),
            x.top,
        )

    def left_read(labels: tuple[str, ...], a: BasisDiagram, x: StackedDiagram) -> StackedDiagram | None:
        y = StackedDiagram(a.bottom, Weight(labels[1]), Weight(labels[2]), x.top)
        return y if y in index else None

    def right_shape(b: BasisDiagram, x: StackedDiagram) -> Picture | None:
        if b.bottom != x.top:
            return None
        return Picture(
            x.bottom,
            (x.lower.symbols, x.upper.symbols, b.middle.symbols),
            (Layer.t(i), Layer.mirror(b.bottom)),
            b.top,
        )

    def right_read(labels: tuple[str, ...], b: BasisDiagram, x: StackedDiagram) -> StackedDiagram | None:
        y = StackedDiagram(x.bottom, Weight(labels[0]), Weight(labels[1]), b.top)
        return y if y in index else None

    bim = Bimodule(
        big,
        small,
        basis,
        [x.bottom for x in basis],
        [x.top for x in basis],
        _stacked_action(left_shape, 0, left_read, big, basis, index),
        _stacked_action(right_shape, 1, right_read, small, basis, index),
        name=f"K^t{i}({m},{n})",
    )
    logger.debug("Built %r", bim)
    return bim


@lru_cache(maxsize=64)
def bimodule_t_star(i: int, m: int, n: int, characteristic: int | None = None) -> Bimodule:
    """
    𝐊^{t_i*} as a (K^{m-1}_{n-1}, K^m_n)-bimodule, the mirror image of 𝐊^{t_i}.

    Raises:
        ValidationError: If ``i`` is out of range or the box is too small.
    """
    _check_position(i, m, n)
    small = get_context(m - 1, n - 1, characteristic)
    big = get_context(m, n, characteristic)
    basis = []
    for lam in enumerate_weights(m, n):
        if sign_at(lam, i) is None:
            continue
        nu = remove_pair(lam, i)
        bottoms = [mu for mu in small.weights if _oriented(mu, nu)]
        tops = [eta for eta in big.weights if _oriented(eta, lam)]
        basis.extend(StackedDiagram(mu, nu, lam, eta) for mu in bottoms for eta in tops)
    basis.sort(key=str)
    index = {x: p for p, x in enumerate(basis)}

    def left_shape(a: BasisDiagram, x: StackedDiagram) -> Picture | None:
        if a.top != x.bottom:
            return None
        return Picture(
            a.bottom,
            (a.middle.symbols, x.lower.symbols, x.upper.symbols),
            (Layer.mirror(a.top), Layer.tstar(i)),
            x.top,
        )

    def left_read(labels: tuple[str, ...], a: BasisDiagram, x: StackedDiagram) -> StackedDiagram | None:
        y = StackedDiagram(a.bottom, Weight(labels[1]), Weight(labels[2]), x.top)
        return y if y in index else None

    def right_shape(b: BasisDiagram, x: StackedDiagram) -> Picture | None:
        if b.bottom != x.top:
            return None
        return Picture(
            x.bottom,
            (x.lower.symbols, x.upper.symbols, b.middle.symbols),
            (Layer.tstar(i), Layer.mirror(b.bottom)),
            b.top,
        )

    def right_read(labels: tuple[str, ...], b: BasisDiagram, x: StackedDiagram) -> StackedDiagram | None:
        y = StackedDiagram(x.bottom, Weight(labels[0]), Weight(labels[1]), b.top)
        return y if y in index else None

    return Bimodule(
        small,
        big,
        basis,
        [x.bottom for x in basis],
        [x.top for x in basis],
        _stacked_action(left_shape, 0, left_read, small, basis, index),
        _stacked_action(right_shape, 1, right_read, big, basis, index),
        name=f"K^t{i}*({m},{n})",
    )


def truncate_bimodule(bim: Bimodule) -> Bimodule:
    """e·X·e′: keep basis vectors whose outer weights are both regular."""
    left = get_context(bim.left.m, bim.left.n, bim.left.field.characteristic, truncated=True)
    right = get_context(bim.right.m, bim.right.n, bim.right.field.characteristic, truncated=True)
    return bim.restricted(
        lambda p: is_regular(bim.left_weights[p]) and is_regular(bim.right_weights[p]),
        left,
        right,
        name=f"e{bim.name}e'",
    )


def _algebra_bimodule(ctx: AlgebraContext, side: Side) -> Bimodule:
    """eK (left H, right K) for ``side="left"``, Ke (left K, right H) otherwise."""
    if ctx.truncated:
        raise ValidationError(f"Expected K, got {ctx.name}.")
    h = get_context(ctx.m, ctx.n, ctx.field.characteristic, truncated=True)
    if side == "left":
        cols = [k for k, d in enumerate(ctx.basis) if is_regular(d.bottom)]
    else:
        cols = [k for k, d in enumerate(ctx.basis) if is_regular(d.top)]
    position = {k: p for p, k in enumerate(cols)}

    def multiply_into(k: int, from_left: bool) -> Matrix:
        entries: dict[int, dict[int, int]] = defaultdict(dict)
        for col, j in enumerate(cols):
            a, b = (k, j) if from_left else (j, k)
            if ctx.basis[a].top != ctx.basis[b].bottom:
                continue
            for out, c in ctx.product_indices(a, b).items():
                if out in position:
                    entries[position[out]][col] = c
        return Matrix.from_dict(ctx.field, (len(cols), len(cols)), entries)

    def h_action(k: int) -> Matrix:
        return multiply_into(ctx.index[h.basis[k]], from_left=side == "left")

    def k_action(k: int) -> Matrix:
        return multiply_into(k, from_left=side != "left")

    basis = [ctx.basis[k] for k in cols]
    if side == "left":
        return Bimodule(
            h, ctx, basis, [d.bottom for d in basis], [d.top for d in basis],
            h_action, k_action, name=f"e{ctx.name}",
        )
    return Bimodule(
        ctx, h, basis, [d.bottom for d in basis], [d.top for d in basis],
        k_action, h_action, name=f"{ctx.name}e",
    )


def bimodule_eK(ctx: AlgebraContext) -> Bimodule:
    return _algebra_bimodule(ctx, "left")


def bimodule_Ke(ctx: AlgebraContext) -> Bimodule:
    return _algebra_bimodule(ctx, "right")


def relative_tensor(bim: Bimodule, N: ModuleRep, deep: bool = False) -> ModuleRep:
    """
    X ⊗_B N as a left module over the left algebra of X.

    Pairs x ⊗ v are kept only where the right weight of x is the weight of
    v; the relations x·b ⊗ v − x ⊗ b·v are imposed for the positive degree
    generators b of B.

    Raises:
        ValidationError: If N is not a module over the right algebra of X.
        ResourceCapExceeded: If the plain tensor space exceeds the dimension cap.
    """
    if N.ctx is not bim.right:
        raise ValidationError(f"{N!r} is not a module over {bim.right.name}.")
    field = bim.field
    pairs = [
        (x, v)
        for x in range(bim.dim)
        for v in N.weight_spaces.get(bim.right_weights[x], [])
    ]
    limit = dim_cap(deep)
    if len(pairs) > limit:
        raise ResourceCapExceeded("DEEP_DIM_CAP" if deep else "DIM_CAP", limit, len(pairs), f"{bim.name} ⊗ {N.name}")
    slot = {p: s for s, p in enumerate(pairs)}
    by_x: dict[int, list[int]] = defaultdict(list)
    for x, v in pairs:
        by_x[x].append(v)

    def provider(k: int) -> Matrix:
        entries: dict[int, dict[int, Any]] = defaultdict(dict)
        for x_new, row in bim.left_action(k).row_dicts().items():
            for x, c in row.items():
                for v in by_x.get(x, []):
                    if (x_new, v) in slot:
                        entries[slot[(x_new, v)]][slot[(x, v)]] = c
        return Matrix.from_dict(field, (len(pairs), len(pairs)), entries)

    plain = ModuleRep(bim.left, [bim.left_weights[x] for x, _ in pairs], provider)
    relations: list[dict[int, Any]] = []
    for b in bim.right.positive_generators:
        R = bim.right_action(b).row_dicts()  # R[x_new][x]: coefficient of x_new in x·b
        B = N.action(b).row_dicts()  # B[v_new][v]: coefficient of v_new in b·v
        right_cols: dict[int, dict[int, Any]] = defaultdict(dict)
        for x_new, row in R.items():
            for x, c in row.items():
                right_cols[x][x_new] = c
        module_cols: dict[int, dict[int, Any]] = defaultdict(dict)
        for v_new, row in B.items():
            for v, c in row.items():
                module_cols[v][v_new] = c
        d = bim.right.basis[b]
        for x in range(bim.dim):
            if bim.right_weights[x] != d.bottom:
                continue
            for v in N.weight_spaces.get(d.top, []):
                rel: dict[int, Any] = {}
                for x_new, c in right_cols.get(x, {}).items():
                    s = slot[(x_new, v)]
                    rel[s] = rel.get(s, field.zero) + c
                for v_new, c in module_cols.get(v, {}).items():
                    s = slot[(x, v_new)]
                    rel[s] = rel.get(s, field.zero) - c
                if any(rel.values()):
                    relations.append(rel)
    rel_matrix = Matrix.from_dict(field, (len(relations), len(pairs)), dict(enumerate(relations)))
    kernel_space = plain.spin(rel_matrix)
    result, _ = quotient(plain, kernel_space, name=f"{bim.name}⊗{N.name}")
    return result


@dataclass(frozen=True)
class ProjectiveDecomposition:
    """Top multiplicities of a bimodule seen as a left module."""

    summands: dict[Weight, int]
    is_projective: bool


def left_projective_decomposition(bim: Bimodule) -> ProjectiveDecomposition:
    """Compare X with the sum of the projectives covering its top."""
    from ..repcat import projective_cover

    M = bim.as_left_module()
    P, _, labels = projective_cover(M)
    counts: dict[Weight, int] = defaultdict(int)
    for w in labels:
        counts[w] += 1
    return ProjectiveDecomposition(dict(counts), P.dim == M.dim)


__all__ = [
    "Bimodule",
    "ProjectiveDecomposition",
    "StackedDiagram",
    "bimodule_Ke",
    "bimodule_eK",
    "bimodule_t",
    "bimodule_t_star",
    "left_projective_decomposition",
    "relative_tensor",
    "stacked_degree",
    "truncate_bimodule",
]
