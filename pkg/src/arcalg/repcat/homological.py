"""Hom spaces, covers, minimal projective resolutions and Ext."""

from __future__ import annotations

import itertools
import logging
import math
import random
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from ..combinatorics import Weight, sort_descending
from ..conf import dim_cap, get_setting
from ..exactla import Matrix
from ..exceptions import ResourceCapExceeded, ValidationError
from .module import (
    ModuleMap,
    ModuleRep,
    direct_sum,
    dual,
    kernel,
    projective,
    standard,
    zero_module,
)
from .series import radical

logger = logging.getLogger(__name__)


def _same_algebra(M: ModuleRep, N: ModuleRep) -> None:
    if M.ctx is not N.ctx:
        raise ValidationError(f"{M!r} and {N!r} live over different algebras.")


def hom_space(M: ModuleRep, N: ModuleRep) -> list[ModuleMap]:
    """
    A basis of Hom_A(M, N).

    Unknowns are the weight-preserving blocks of a matrix ``F``; one linear
    system ``F A_M(g) = A_N(g) F`` per positive degree generator ``g``.
    """
    _same_algebra(M, N)
    variables: dict[tuple[int, int], int] = {}
    for w, rows in N.weight_spaces.items():
        for c in M.weight_spaces.get(w, []):
            for r in rows:
                variables[(r, c)] = len(variables)
    by_col: dict[int, list[int]] = defaultdict(list)
    by_row: dict[int, list[int]] = defaultdict(list)
    for r, c in variables:
        by_col[c].append(r)
        by_row[r].append(c)

    equations: dict[tuple[int, int, int], dict[int, Any]] = defaultdict(dict)
    zero = M.field.zero
    for g, k in enumerate(M.ctx.positive_generators):
        for c, row in M.action(k).row_dicts().items():
            for j, value in row.items():
                for i in by_col.get(c, []):
                    eq = equations[(g, i, j)]
                    v = variables[(i, c)]
                    eq[v] = eq.get(v, zero) + value
        for i, row in N.action(k).row_dicts().items():
            for r, value in row.items():
                for j in by_row.get(r, []):
                    eq = equations[(g, i, j)]
                    v = variables[(r, j)]
                    eq[v] = eq.get(v, zero) - value

    system = Matrix.from_dict(
        M.field,
        (len(equations), len(variables)),
        {e: row for e, row in enumerate(equations.values())},
    )
    inverse = {v: rc for rc, v in variables.items()}
    maps = []
    for row in system.kernel_basis().row_dicts().values():
        entries: dict[int, dict[int, Any]] = defaultdict(dict)
        for v, value in row.items():
            r, c = inverse[v]
            entries[r][c] = value
        maps.append(ModuleMap(M, N, Matrix.from_dict(M.field, (N.dim, M.dim), entries)))
    return maps


def hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    return len(hom_space(M, N))


def _projective_points(p: int, r: int) -> Iterator[list[int]]:
    """Every nonzero vector of F_p^r whose first nonzero entry is 1."""
    for lead in range(r):
        for rest in itertools.product(range(p), repeat=r - lead - 1):
            yield [0] * lead + [1, *rest]


def is_iso(M: ModuleRep, N: ModuleRep, attempts: int | None = None, seed: int | None = None) -> bool:
    """
    True if some homomorphism ``M → N`` is invertible.

    Seeded random combinations of a Hom basis are tried first. A miss is then
    settled exactly over a finite field by running through every combination
    up to scalars, when there are at most ``ISO_ENUMERATION_CAP`` of them.
    Otherwise the determinant of a generic combination has degree at most
    ``dim N``, so drawing coefficients from a set of size s misses an
    existing isomorphism with probability at most ``dim N / s`` per attempt;
    enough attempts are made to push that below 1e-12.

    Raises:
        ResourceCapExceeded: Over a field with at most ``dim N`` elements
            when enumeration would pass ``ISO_ENUMERATION_CAP``.
    """
    _same_algebra(M, N)
    if M.dim != N.dim or M.weight_dims() != N.weight_dims():
        return False
    if M.dim == 0:
        return True
    basis = hom_space(M, N)
    if not basis:
        return False
    rng = random.Random(int(get_setting("SEED")) if seed is None else seed)
    tries = int(get_setting("ISO_ATTEMPTS")) if attempts is None else attempts
    field = M.field
    p = field.characteristic
    size = p if p else max(10**6, 100 * N.dim)

    def combine(coeffs: list[int]) -> Matrix:
        total = Matrix.zeros(field, N.dim, M.dim)
        for c, f in zip(coeffs, basis, strict=True):
            if c:
                total = total + f.matrix.scale(c)
        return total

    for _ in range(tries):
        if combine([rng.randrange(size) for _ in basis]).is_invertible():
            return True

    if p:
        r = len(basis)
        points = (p**r - 1) // (p - 1)
        cap = int(get_setting("ISO_ENUMERATION_CAP"))
        if points <= cap:
            return any(combine(c).is_invertible() for c in _projective_points(p, r))
        if p <= N.dim:
            raise ResourceCapExceeded(
                "ISO_ENUMERATION_CAP",
                cap,
                points,
                what=f"the isomorphism test {M.name} → {N.name}",
            )
    # Schwartz–Zippel: each miss has probability at most N.dim / size.
    needed = math.ceil(-12 / math.log10(N.dim / size))
    logger.debug("is_iso(%s, %s): %d more random attempts", M.name, N.name, needed)
    return any(
        combine([rng.randrange(size) for _ in basis]).is_invertible()
        for _ in range(max(needed - tries, 0))
    )


def projective_cover(M: ModuleRep) -> tuple[ModuleRep, ModuleMap, list[Weight]]:
    """
    The projective cover ``P → M`` built from the top of M.

    Returns:
        The cover, the surjection, and the labels of its summands in order
    """
    ctx = M.ctx
    rad = radical(M)
    tops = rad.complement_columns()
    labels = [M.weights[c] for c in tops]
    if not labels:
        return _zero_cover(M)
    summands = [projective(ctx, lam) for lam in labels]
    P, _, _ = direct_sum(summands, name=" ⊕ ".join(S.name for S in summands))
    columns: dict[int, dict[int, Any]] = defaultdict(dict)
    offset = 0
    for lam, c in zip(labels, tops, strict=True):
        for p, k in enumerate(ctx.by_top[lam]):
            for r, value in M.action(k).row_dicts().items():
                if c in value:
                    columns[r][offset + p] = value[c]
        offset += len(ctx.by_top[lam])
    surjection = ModuleMap(P, M, Matrix.from_dict(M.field, (M.dim, P.dim), columns))
    return P, surjection, labels


def _zero_cover(M: ModuleRep) -> tuple[ModuleRep, ModuleMap, list[Weight]]:
    Z = zero_module(M.ctx)
    return Z, ModuleMap(Z, M, Matrix.zeros(M.field, M.dim, 0)), []


def injective_hull(M: ModuleRep) -> tuple[ModuleRep, ModuleMap, list[Weight]]:
    """``M → I``, dual to the projective cover of M^⊛."""
    P, pi, labels = projective_cover(dual(M))
    I = dual(P).renamed(f"({P.name})^*")
    return I, ModuleMap(M, I, pi.matrix.T), labels


@dataclass
class Resolution:
    """A minimal projective resolution ``... → P_1 → P_0 → M``."""

    module: ModuleRep
    terms: list[ModuleRep] = field(default_factory=list)
    labels: list[list[Weight]] = field(default_factory=list)
    differentials: list[ModuleMap] = field(default_factory=list)
    augmentation: ModuleMap | None = None
    complete: bool = False

    def multiplicities(self, k: int) -> dict[Weight, int]:
        """How often each P(μ) occurs in P_k."""
        counts: dict[Weight, int] = defaultdict(int)
        for w in self.labels[k]:
            counts[w] += 1
        return dict(counts)

    def projective_dimension(self) -> int | None:
        """Length of the resolution when it stopped, otherwise None."""
        if not self.complete:
            return None
        return len(self.terms) - 1 if self.terms else -1


def minimal_resolution(M: ModuleRep, length: int, deep: bool = False) -> Resolution:
    """
    Resolve M by iterated projective covers of syzygies.

    Args:
        M: The module to resolve
        length: Highest index k of a term P_k to compute
        deep: Use ``DEEP_DIM_CAP`` instead of ``DIM_CAP``

    Raises:
        ResourceCapExceeded: If a term would exceed the dimension cap. The
            partial resolution is logged first.
    """
    limit = dim_cap(deep)
    res = Resolution(M)
    current = M
    inclusion: ModuleMap | None = None
    for k in range(length + 1):
        if current.dim == 0:
            res.complete = True
            break
        P, cover, labels = projective_cover(current)
        if P.dim > limit:
            logger.warning(
                "Resolution of %s stopped at P_%d: %s", M.name, k, [len(x) for x in res.labels]
            )
            raise ResourceCapExceeded("DEEP_DIM_CAP" if deep else "DIM_CAP", limit, P.dim, f"P_{k} of {M.name}")
        res.terms.append(P)
        res.labels.append(labels)
        if inclusion is None:
            res.augmentation = cover
        else:
            res.differentials.append(inclusion.compose(cover))
        current, inclusion = kernel(cover)
        logger.debug("P_%d of %s: %s", k, M.name, [str(w) for w in labels])
    else:
        res.complete = current.dim == 0
    return res


def _hom_coordinates(labels: list[Weight], N: ModuleRep) -> list[list[int]]:
    """Positions of e_μN for each summand P(μ); Hom(⊕P(μ), N) ≅ ⊕ e_μN."""
    return [N.weight_spaces.get(w, []) for w in labels]


def _hom_differential(res: Resolution, k: int, N: ModuleRep) -> Matrix:
    """Matrix of ``φ ↦ φ ∘ d_k`` from Hom(P_{k-1}, N) to Hom(P_k, N)."""
    ctx = N.ctx
    source_labels, target_labels = res.labels[k - 1], res.labels[k]
    source_slots = _hom_coordinates(source_labels, N)
    target_slots = _hom_coordinates(target_labels, N)
    source_offsets = _offsets(source_slots)
    target_offsets = _offsets(target_slots)
    summand_offsets = _offsets([ctx.by_top[w] for w in source_labels])
    d = res.differentials[k - 1].matrix.row_dicts()

    entries: dict[int, dict[int, Any]] = defaultdict(dict)
    zero = N.field.zero
    generator_position = 0
    for i, mu in enumerate(target_labels):
        gen = generator_position + ctx.by_top[mu].index(ctx.idempotent_index(mu))
        generator_position += len(ctx.by_top[mu])
        for j, nu in enumerate(source_labels):
            block: dict[int, dict[int, Any]] = defaultdict(dict)
            start = summand_offsets[j]
            for p, k_diagram in enumerate(ctx.by_top[nu]):
                coeff = d.get(start + p, {}).get(gen)
                if not coeff:
                    continue
                for r, row in N.action(k_diagram).row_dicts().items():
                    for c, value in row.items():
                        block[r][c] = block[r].get(c, zero) + coeff * value
            out_pos = {pos: t for t, pos in enumerate(target_slots[i])}
            in_pos = {pos: t for t, pos in enumerate(source_slots[j])}
            for r, row in block.items():
                if r not in out_pos:
                    continue
                for c, value in row.items():
                    if c in in_pos and value:
                        entries[target_offsets[i] + out_pos[r]][source_offsets[j] + in_pos[c]] = value
    shape = (sum(len(s) for s in target_slots), sum(len(s) for s in source_slots))
    return Matrix.from_dict(N.field, shape, entries)


def _offsets(groups: list[list[int]]) -> list[int]:
    out, total = [], 0
    for g in groups:
        out.append(total)
        total += len(g)
    return out


def ext_dim(M: ModuleRep, N: ModuleRep, i: int, deep: bool = False) -> int:
    """
    dim Ext^i(M, N), the cohomology of Hom(P_•, N) in degree i.

    Raises:
        ValidationError: If ``i`` is negative.
        ResourceCapExceeded: If the resolution outgrows the dimension cap.
    """
    return ext_dims(M, N, i, deep)[i]


def ext_dims(M: ModuleRep, N: ModuleRep, up_to: int, deep: bool = False) -> list[int]:
    """``[dim Ext^0, ..., dim Ext^up_to]`` from one resolution."""
    _same_algebra(M, N)
    if up_to < 0:
        raise ValidationError(f"Ext degree must be non-negative. Got {up_to}.")
    return ext_dims_from(minimal_resolution(M, up_to + 1, deep), N, up_to)


def ext_dims_from(res: Resolution, N: ModuleRep, up_to: int) -> list[int]:
    """Ext dimensions against N from a resolution computed up to ``P_{up_to+1}``."""
    _same_algebra(res.module, N)
    if not res.complete and len(res.terms) < up_to + 2:
        raise ValidationError(
            f"Resolution of {res.module.name} has {len(res.terms)} terms, "
            f"Ext^{up_to} needs {up_to + 2}."
        )
    dims = []
    for i in range(up_to + 1):
        if i >= len(res.terms):
            dims.append(0)
            continue
        width = sum(len(N.weight_spaces.get(w, [])) for w in res.labels[i])
        incoming = _hom_differential(res, i, N).rank() if i >= 1 else 0
        outgoing = _hom_differential(res, i + 1, N).rank() if i + 1 < len(res.terms) else 0
        dims.append(width - outgoing - incoming)
    return dims


@dataclass
class DeltaMultiplicities:
    """Solution of ``[M] = Σ c_λ [Δ(λ)]``; negative values rule out a Δ-flag."""

    mults: dict[Weight, int]
    negative: list[Weight]

    @property
    def is_consistent(self) -> bool:
        return not self.negative

    def diagnostic(self) -> str:
        if not self.negative:
            return ""
        names = ", ".join(f"{w}: {self.mults[w]}" for w in self.negative)
        return f"not Δ-filtered evidence: negative multiplicities {names}"


def delta_filtration_mults(M: ModuleRep) -> DeltaMultiplicities:
    """
    (M : Δ(λ)) from composition multiplicities, largest weights first.

    Only meaningful when M has a Δ-flag.
    """
    ctx = M.ctx
    if ctx.truncated:
        raise ValidationError(f"Δ-multiplicities need K, not {ctx.name}.")
    remaining = {w: M.comp_mult(w) for w in ctx.weights}
    mults: dict[Weight, int] = {}
    for lam in sort_descending(list(ctx.weights)):
        c = remaining[lam]
        if c:
            for mu, d in standard(ctx, lam).weight_dims().items():
                remaining[mu] -= c * d
        mults[lam] = c
    negative = [w for w, c in mults.items() if c < 0]
    result = DeltaMultiplicities({w: c for w, c in mults.items() if c}, negative)
    if negative:
        logger.warning("%s: %s", M.name, result.diagnostic())
    return result


def comp_mult(M: ModuleRep, lam: Weight) -> int:
    return M.comp_mult(lam)
