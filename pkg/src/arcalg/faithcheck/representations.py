"""Checks on standard, projective and tilting modules and the projective functors."""

from __future__ import annotations

import logging
from collections import Counter

from ..arcalgebra import get_context
from ..combinatorics import (
    Weight,
    ascents,
    enumerate_weights,
    insert_pair,
    lambda_circ,
    leq,
    remove_pair,
    sign_at,
)
from ..exactla import Matrix, Subspace
from ..functors import G_t, G_t_star, schur_f, tilting
from ..klpoly import n_poly, p_coefficient
from ..repcat import (
    ModuleRep,
    delta_filtration_mults,
    dual,
    hom_dim,
    is_iso,
    is_rigid,
    minimal_resolution,
    projective,
    radical,
    radical_layers,
    simple,
    socle,
    standard,
)
from .report import CheckReport, timed_check

logger = logging.getLogger(__name__)


def _finish(report: CheckReport) -> CheckReport:
    logger.info(report.summary_line())
    return report


def _socle_labels(M: ModuleRep) -> dict[Weight, int]:
    return dict(Counter(M.weights[p] for p in socle(M).pivots))


def _named(counts: dict[Weight, int]) -> dict[str, int]:
    return {str(w): c for w, c in counts.items()}


def check_decomposition_numbers(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """[Δ(λ) : L(μ)] = n_{λμ}(1)."""
    ctx = get_context(m, n, characteristic)
    with timed_check("decomposition_numbers", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            D = standard(ctx, lam)
            for mu in ctx.weights:
                got, expected = D.comp_mult(mu), n_poly(lam, mu).evaluate(1)
                if got != expected:
                    report.fail(lam=str(lam), mu=str(mu), got=got, expected=expected)
        report.conclude(weights=len(ctx.weights))
    return _finish(report)


def check_standard_structure(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """Δ(λ) is rigid, its k-th radical layer is the degree k part, and soc Δ(λ) = L(λ°)."""
    ctx = get_context(m, n, characteristic)
    with timed_check("standard_structure", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            D = standard(ctx, lam)
            graded: dict[int, dict[Weight, int]] = {}
            for mu in ctx.weights:
                p = n_poly(lam, mu)
                if not p.is_zero:
                    graded.setdefault(p.degree, {})[mu] = 1
            expected = [graded.get(k, {}) for k in range(max(graded) + 1)]
            layers = radical_layers(D)
            soc = _socle_labels(D)
            report.record(
                is_rigid(D) and layers == expected and soc == {lambda_circ(lam): 1},
                weight=str(lam),
                layers=[_named(layer) for layer in layers],
                socle=_named(soc),
            )
    return _finish(report)


def check_radical(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """The radical spun from the generators equals the span of all positive degree images."""
    ctx = get_context(m, n, characteristic)
    positive = [k for k, d in enumerate(ctx.basis) if d.degree > 0]
    with timed_check("radical", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            P = projective(ctx, lam)
            images = [P.action(k).T for k in positive]
            direct = Subspace.span(Matrix.vstack(P.field, images, P.dim))
            spun = radical(P)
            report.record(
                direct <= spun and spun <= direct, weight=str(lam), dim=spun.dim
            )
    return _finish(report)


def check_resolutions(
    m: int, n: int, length: int = 3, characteristic: int | None = None
) -> CheckReport:
    """The k-th term of the minimal resolution of Δ(λ) is ⊕ p^{(k)}_{λμ} P(μ)."""
    ctx = get_context(m, n, characteristic)
    with timed_check("resolutions", m=m, n=n, char=ctx.field.characteristic, jmax=length) as report:
        for lam in ctx.weights:
            res = minimal_resolution(standard(ctx, lam), length)
            for k in range(length + 1):
                got = res.multiplicities(k) if k < len(res.terms) else {}
                expected = {
                    mu: c
                    for mu in ctx.weights
                    if leq(lam, mu) and (c := p_coefficient(lam, mu, k))
                }
                report.record(
                    got == expected, weight=str(lam), k=k, terms=_named(got)
                )
    return _finish(report)


def check_brauer_humphreys(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """(P(λ) : Δ(μ)) = [Δ(μ) : L(λ)]."""
    ctx = get_context(m, n, characteristic)
    with timed_check("brauer_humphreys", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            got = delta_filtration_mults(projective(ctx, lam))
            expected = {
                mu: c for mu in ctx.weights if (c := n_poly(mu, lam).evaluate(1))
            }
            report.record(
                got.is_consistent and got.mults == expected,
                weight=str(lam),
                mults=_named(got.mults),
            )
    return _finish(report)


def _boxes(m: int, n: int) -> tuple[list[Weight], list[int]]:
    if m < 1 or n < 1:
        return [], []
    return enumerate_weights(m - 1, n - 1), list(range(1, m + n))


def check_translated_projectives(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """G^{t_i} P(λ′) ≅ P(λ⁺)."""
    ctx = get_context(m, n, characteristic)
    small_weights, positions = _boxes(m, n)
    with timed_check("translated_projectives", m=m, n=n, char=ctx.field.characteristic) as report:
        if not positions:
            report.status = "skipped"
        else:
            small = get_context(m - 1, n - 1, ctx.field.characteristic)
            for lam in small_weights:
                for i in positions:
                    image = G_t(i, projective(small, lam))
                    target = projective(ctx, insert_pair(lam, i, "+"))
                    report.record(
                        is_iso(image, target), weight=str(lam), i=i, dim=image.dim
                    )
    return _finish(report)


def check_translated_standards(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """G^{t_i} Δ(λ′) is an extension of Δ(λ⁺) by the submodule Δ(λ⁻)."""
    ctx = get_context(m, n, characteristic)
    small_weights, positions = _boxes(m, n)
    with timed_check("translated_standards", m=m, n=n, char=ctx.field.characteristic) as report:
        if not positions:
            report.status = "skipped"
        else:
            small = get_context(m - 1, n - 1, ctx.field.characteristic)
            for lam in small_weights:
                for i in positions:
                    image = G_t(i, standard(small, lam))
                    plus = standard(ctx, insert_pair(lam, i, "+"))
                    minus = standard(ctx, insert_pair(lam, i, "-"))
                    mults = delta_filtration_mults(image)
                    expected = {insert_pair(lam, i, "+"): 1, insert_pair(lam, i, "-"): 1}
                    report.record(
                        image.dim == plus.dim + minus.dim
                        and mults.mults == expected
                        and hom_dim(minus, image) >= 1
                        and hom_dim(image, plus) >= 1,
                        weight=str(lam),
                        i=i,
                        mults=_named(mults.mults),
                    )
    return _finish(report)


def check_restricted_modules(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """G^{t_i*} on standards and simples.

    G^{t_i*}Δ(μ) ≅ Δ(μ′) when positions i, i+1 of μ are mixed, else 0;
    G^{t_i*}L(μ) ≅ L(μ′) when they read ``v^``, else 0.
    """
    ctx = get_context(m, n, characteristic)
    _, positions = _boxes(m, n)
    with timed_check("restricted_modules", m=m, n=n, char=ctx.field.characteristic) as report:
        if not positions:
            report.status = "skipped"
        else:
            small = get_context(m - 1, n - 1, ctx.field.characteristic)
            for mu in ctx.weights:
                for i in positions:
                    sign = sign_at(mu, i)
                    from_standard = G_t_star(i, standard(ctx, mu))
                    from_simple = G_t_star(i, simple(ctx, mu))
                    if sign is None:
                        ok = from_standard.dim == 0 and from_simple.dim == 0
                    else:
                        prime = remove_pair(mu, i)
                        ok = is_iso(from_standard, standard(small, prime))
                        if sign == "+":
                            ok = ok and is_iso(from_simple, simple(small, prime))
                        else:
                            ok = ok and from_simple.dim == 0
                    report.record(
                        ok,
                        weight=str(mu),
                        i=i,
                        standard_dim=from_standard.dim,
                        simple_dim=from_simple.dim,
                    )
    return _finish(report)


def check_functor_identities(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """
    Biadjointness on Hom dimensions, G^{t_i} commuting with duality, and
    Ḡ^{t_i} f ≅ f G^{t_i}, tested on standard modules.
    """
    ctx = get_context(m, n, characteristic)
    small_weights, positions = _boxes(m, n)
    with timed_check("functor_identities", m=m, n=n, char=ctx.field.characteristic) as report:
        if not positions:
            report.status = "skipped"
        else:
            small = get_context(m - 1, n - 1, ctx.field.characteristic)
            big_standards = [standard(ctx, w) for w in ctx.weights]
            for lam in small_weights:
                X = standard(small, lam)
                for i in positions:
                    GX = G_t(i, X)
                    for Y in big_standards:
                        GY = G_t_star(i, Y)
                        left = (hom_dim(GX, Y), hom_dim(X, GY))
                        right = (hom_dim(GY, X), hom_dim(Y, GX))
                        report.record(
                            left[0] == left[1] and right[0] == right[1],
                            kind="adjunction",
                            source=X.name,
                            target=Y.name,
                            i=i,
                            dims=[*left, *right],
                        )
                    report.record(
                        is_iso(G_t(i, dual(X)), dual(GX)), kind="duality", module=X.name, i=i
                    )
                    report.record(
                        is_iso(schur_f(GX), G_t(i, schur_f(X))),
                        kind="schur",
                        module=X.name,
                        i=i,
                    )
    return _finish(report)


def check_tilting_modules(
    m: int, n: int, characteristic: int | None = None
) -> CheckReport:
    """
    T(λ) is self-dual with (T(λ):Δ(λ)) = 1, Δ-support below λ and socle
    L(λ°); other ascents build isomorphic modules.
    """
    ctx = get_context(m, n, characteristic)
    with timed_check("tilting_modules", m=m, n=n, char=ctx.field.characteristic) as report:
        for lam in ctx.weights:
            T = tilting(lam, ctx)
            mults = delta_filtration_mults(T)
            report.record(
                is_iso(dual(T), T)
                and mults.is_consistent
                and mults.mults.get(lam) == 1
                and all(leq(mu, lam) for mu in mults.mults)
                and _socle_labels(T) == {lambda_circ(lam): 1},
                weight=str(lam),
                dim=T.dim,
                mults=_named(mults.mults),
            )
            for i in ascents(lam)[1:]:
                report.record(
                    is_iso(tilting(lam, ctx, i), T), kind="ascent", weight=str(lam), i=i
                )
    return _finish(report)
