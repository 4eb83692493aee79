"""Cover-level checks: tilting coresolutions, 0-faithfulness and Ext transfer.

Each check takes a box (m, n) and returns a :class:`CheckReport` whose
witnesses carry the dimensions compared on both sides.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..arcalgebra import AlgebraContext, get_context, truncate
from ..combinatorics import (
    Partition,
    Weight,
    empty_weight,
    full_weight,
    is_regular,
    partition_to_weight,
)
from ..conf import ext_degree
from ..exceptions import ResourceCapExceeded, ValidationError
from ..functors import eta, schur_f, schur_g, tilting
from ..repcat import (
    ModuleRep,
    cokernel,
    dual,
    ext_dims_from,
    hom_dim,
    injective_hull,
    is_iso,
    layer_multisets,
    minimal_resolution,
    projective,
    radical,
    radical_layers,
    simple,
    socle_series,
    standard,
    submodule,
)
from .report import CheckReport, timed_check

logger = logging.getLogger(__name__)


def box_weight(parts: Iterable[int], m: int, n: int) -> Weight:
    """The weight of a partition given by its parts, e.g. (m^m) as ``[m] * m``."""
    return partition_to_weight(Partition(tuple(parts), m, n))


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ValidationError(message)


def _labels(ws: Iterable[Weight]) -> list[str]:
    return [str(w) for w in ws]


def _finish(report: CheckReport) -> CheckReport:
    logger.info(report.summary_line())
    return report


def check_tilting_coresolution(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """
    Embed every T(λ) into a projective-injective P⁰ and the cokernel into P¹.

    Injective hulls are duals of projective covers, so a hull is
    projective-injective exactly when all of its labels are regular.
    """
    _require(m != n, f"Tilting coresolutions need m ≠ n. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    with timed_check("tilting_coresolution", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            T = tilting(lam, ctx)
            _, iota, first = injective_hull(T)
            C, _ = cokernel(iota)
            _, _, second = injective_hull(C)
            report.record(
                iota.is_injective()
                and all(is_regular(w) for w in first)
                and all(is_regular(w) for w in second),
                weight=str(lam),
                P0=_labels(first),
                P1=_labels(second),
            )
    return _finish(report)


def check_0faithful(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """
    η(T) is an isomorphism for every tilting module, and f preserves Hom
    dimensions between standards and tiltings.
    """
    _require(m != n, f"0-faithfulness is checked for m ≠ n. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    with timed_check("0faithful", m=m, n=n, char=ctx.field.characteristic) as report:
        modules: list[ModuleRep] = []
        for lam in ctx.weights:
            T = tilting(lam, ctx)
            gfT, unit = eta(T)
            report.record(
                unit.is_iso(), kind="eta", module=T.name, dim=T.dim, gf_dim=gfT.dim
            )
            modules.extend([standard(ctx, lam), T])
        images = {id(M): schur_f(M) for M in modules}
        for M in modules:
            for N in modules:
                k_side = hom_dim(M, N)
                h_side = hom_dim(images[id(M)], images[id(N)])
                report.record(
                    k_side == h_side,
                    kind="hom",
                    source=M.name,
                    target=N.name,
                    K=k_side,
                    H=h_side,
                )
    return _finish(report)


def check_0faithful_failure(m: int, characteristic: int | None = None) -> CheckReport:
    """Hom(Δ(∅), Δ(m^m)) vanishes over K^m_m but not after applying f."""
    _require(m >= 1, f"The failure witness needs m ≥ 1. Got {m}.")
    ctx = get_context(m, m, characteristic)
    with timed_check("0faithful_failure", m=m, n=m, char=ctx.field.characteristic) as report:
        top_standard = standard(ctx, empty_weight(m, m))
        bottom_standard = standard(ctx, full_weight(m, m))
        k_side = hom_dim(top_standard, bottom_standard)
        h_side = hom_dim(schur_f(top_standard), schur_f(bottom_standard))
        report.record(
            k_side == 0 and h_side >= 1,
            source=top_standard.name,
            target=bottom_standard.name,
            K=k_side,
            H=h_side,
        )
    return _finish(report)


def _ext_window(up: int, jmax: int | None, deep: bool) -> int:
    """Highest degree to test below ``up``, clipped by the Ext budget."""
    bound = ext_degree(deep) if jmax is None else jmax
    return min(up - 1, bound)


def check_ext_vanishing(
    m: int,
    n: int,
    jmax: int | None = None,
    deep: bool = False,
    characteristic: int | None = None,
) -> CheckReport:
    """
    The Ext vanishing statements behind the Ext transfer, over H^m_n.

    Parts: (i) Ext^j(D(m^m), D(m^n)) for j < n−m; (ii) Ext^j(D(m^m), fT(λ))
    for 0 < j < n−m; (iii) Hom(D(m^m), S(λ)) for λ ≠ ∅; (iv)
    Ext^j(fP(λ), S(μ)) for 0 < j < n−m.
    """
    _require(n > m, f"The Ext vanishing checks assume n > m. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    h = truncate(ctx)
    top_j = _ext_window(n - m, jmax, deep)
    with timed_check(
        "ext_vanishing", m=m, n=n, char=ctx.field.characteristic, jmax=top_j
    ) as report:
        square = simple(h, box_weight([m] * m, m, n))
        cells = {lam: schur_f(standard(ctx, lam)) for lam in ctx.weights}
        try:
            if top_j >= 0:
                res = minimal_resolution(square, top_j + 1, deep)
                dims = ext_dims_from(res, simple(h, full_weight(m, n)), top_j)
                report.record(not any(dims), part="i", ext=dims)
                for lam in ctx.weights:
                    dims = ext_dims_from(res, schur_f(tilting(lam, ctx)), top_j)
                    report.record(not any(dims[1:]), part="ii", weight=str(lam), ext=dims)
            for lam in ctx.weights:
                if lam == empty_weight(m, n):
                    continue
                dim = hom_dim(square, cells[lam])
                report.record(dim == 0, part="iii", weight=str(lam), hom=dim)
            if top_j >= 1:
                for lam in ctx.weights:
                    res = minimal_resolution(schur_f(projective(ctx, lam)), top_j + 1, deep)
                    for mu, cell in cells.items():
                        dims = ext_dims_from(res, cell, top_j)
                        report.record(
                            not any(dims[1:]),
                            part="iv",
                            source=str(lam),
                            target=str(mu),
                            ext=dims,
                        )
        except ResourceCapExceeded as e:
            report.note = f"partial: {e}"
            logger.warning("ext_vanishing(%d, %d) stopped early: %s", m, n, e)
    return _finish(report)


def sample_modules(ctx: AlgebraContext) -> list[ModuleRep]:
    """
    Test modules X for the Ext transfer.

    Standards, simples, radicals of projectives and duals of standards.
    """
    out: list[ModuleRep] = []
    for lam in ctx.weights:
        out.append(standard(ctx, lam))
        out.append(simple(ctx, lam))
        P = projective(ctx, lam)
        rad, _ = submodule(P, radical(P), name=f"rad P({lam})")
        if rad.dim:
            out.append(rad)
        out.append(dual(standard(ctx, lam)))
    return out


def check_ext_transfer(
    m: int,
    n: int,
    deep: bool = False,
    characteristic: int | None = None,
    sharpness: bool = True,
) -> CheckReport:
    """
    dim Ext^j_K(X, Δ(μ)) = dim Ext^j_H(fX, S(μ)) for 0 ≤ j < |n−m|.

    With ``sharpness`` the degree |n−m| is computed as well and the first
    degree where the two sides differ is recorded in the note; a difference
    there does not fail the check.
    """
    _require(m != n, f"The Ext transfer needs m ≠ n. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    gap = abs(n - m)
    top_j = _ext_window(gap, None, deep)
    last_degree = top_j + 1 if sharpness and top_j == gap - 1 else top_j
    with timed_check(
        "ext_transfer", m=m, n=n, char=ctx.field.characteristic, jmax=top_j
    ) as report:
        cells = {mu: (standard(ctx, mu), schur_f(standard(ctx, mu))) for mu in ctx.weights}
        first_break: int | None = None
        try:
            for X in sample_modules(ctx):
                k_res = minimal_resolution(X, last_degree + 1, deep)
                h_res = minimal_resolution(schur_f(X), last_degree + 1, deep)
                for mu, (D, S) in cells.items():
                    k_dims = ext_dims_from(k_res, D, last_degree)
                    h_dims = ext_dims_from(h_res, S, last_degree)
                    report.record(
                        k_dims[: top_j + 1] == h_dims[: top_j + 1],
                        source=X.name,
                        target=str(mu),
                        K=k_dims,
                        H=h_dims,
                    )
                    for j, (a, b) in enumerate(zip(k_dims, h_dims, strict=True)):
                        if a != b and (first_break is None or j < first_break):
                            first_break = j
        except ResourceCapExceeded as e:
            report.note = f"partial: {e}"
            logger.warning("ext_transfer(%d, %d) stopped early: %s", m, n, e)
        if first_break is not None:
            report.note = (report.note + "; " if report.note else "") + (
                f"first differing degree {first_break}"
            )
    return _finish(report)


def check_exact_equivalence(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """
    g(fM) ≅ M and f(g(fM)) ≅ fM for standards, tiltings and projectives.

    Projectives stand in for iterated extensions of standards.
    """
    _require(abs(n - m) >= 2, f"The exact equivalence needs |n − m| ≥ 2. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    with timed_check("exact_equivalence", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            for M in (standard(ctx, lam), tilting(lam, ctx), projective(ctx, lam)):
                fM = schur_f(M)
                gfM = schur_g(fM)
                report.record(
                    is_iso(gfM, M) and is_iso(schur_f(gfM), fM),
                    module=M.name,
                    dim=M.dim,
                    gf_dim=gfM.dim,
                )
    return _finish(report)


def check_projective_injective(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """P(λ) is self-dual exactly when λ is regular."""
    ctx = get_context(m, n, characteristic)
    with timed_check("projective_injective", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            P = projective(ctx, lam)
            self_dual = is_iso(dual(P), P)
            report.record(
                self_dual == is_regular(lam),
                weight=str(lam),
                self_dual=self_dual,
                regular=is_regular(lam),
            )
    return _finish(report)


def check_tilting_socle2(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """P(m^n) ≅ T(m^{n−m}), with simple socle L(m^n) and regular second socle layer."""
    _require(n > m, f"The second socle check assumes n > m. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    with timed_check("tilting_socle2", m=m, n=n, char=ctx.field.characteristic) as report:
        bottom = full_weight(m, n)
        P = projective(ctx, bottom)
        T = tilting(box_weight([m] * (n - m), m, n), ctx)
        report.record(is_iso(P, T), part="iso", projective=P.name, tilting=T.name)
        series = socle_series(P)
        layers = layer_multisets(P, series[:3])
        first = layers[-1]
        second = layers[-2] if len(layers) > 1 else {}
        report.record(first == {bottom: 1}, part="socle", layer=_labels(first))
        report.record(
            all(is_regular(w) for w in second), part="socle2", layer=_labels(second)
        )
    return _finish(report)


def check_uniserial_standards(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """rad_t Δ(∅) = L(t^t) and rad_t Δ(m^{n−m}) = L(m^{n−m}, t^t) for 0 ≤ t ≤ m."""
    _require(n >= m, f"The uniserial standards need n ≥ m. Got ({m}, {n}).")
    ctx = get_context(m, n, characteristic)
    with timed_check("uniserial_standards", m=m, n=n, char=ctx.field.characteristic) as report:
        heads: dict[Weight, list[int]] = {
            empty_weight(m, n): [],
            box_weight([m] * (n - m), m, n): [m] * (n - m),
        }
        for top_weight, head in heads.items():
            layers = radical_layers(standard(ctx, top_weight))
            expected = [{box_weight(head + [t] * t, m, n): 1} for t in range(m + 1)]
            report.record(
                layers == expected,
                weight=str(top_weight),
                layers=[_labels(layer) for layer in layers],
                expected=[_labels(layer) for layer in expected],
            )
    return _finish(report)
