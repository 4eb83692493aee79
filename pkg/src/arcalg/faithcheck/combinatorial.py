"""Checks on weights, KL polynomials and the multiplication of K^m_n."""

from __future__ import annotations

import logging

from ..arcalgebra import BasisDiagram, get_context, multiply, rotate
from ..combinatorics import (
    Weight,
    cup_diagram,
    degree,
    enumerate_weights,
    full_weight,
    lambda_circ,
    weight_to_partition,
)
from ..klpoly import (
    Poly,
    arrow_chain_violations,
    cartan_matrix,
    ell_drop_violations,
    p_poly,
    verify_inverse,
)
from .faithfulness import box_weight
from .report import CheckReport, timed_check

logger = logging.getLogger(__name__)

# (left, right, terms of the product), each term with coefficient 1
WORKED_PRODUCTS: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    (
        "v^v^|v^v^|vv^^",
        "vv^^|v^v^|v^v^",
        ("v^v^|v^^v|v^v^", "v^v^|^vv^|v^v^"),
    ),
    (
        "vv^^|v^v^|v^v^",
        "v^v^|v^v^|vv^^",
        ("vv^^|^v^v|vv^^", "vv^^|v^v^|vv^^"),
    ),
)


def _finish(report: CheckReport) -> CheckReport:
    logger.info(report.summary_line())
    return report


def check_worked_examples() -> CheckReport:
    """Partition, cup diagram, degree and λ° on the hand-worked weights."""
    with timed_check("worked_examples") as report:
        w = Weight("v^v^^vv^^v")
        parts = weight_to_partition(w).parts
        report.record(parts == (5, 4, 2, 2), example="partition", got=list(parts))
        d = cup_diagram(w).to_dict()
        report.record(
            d == {"cups": [[1, 2], [3, 4], [6, 9], [7, 8]], "rays": [5, 10]},
            example="cup diagram",
            got=d,
        )
        deg = degree(cup_diagram(w), Weight("^v^v^^v^vv"))
        report.record(deg == 3, example="degree", got=deg)
        circ = lambda_circ(Weight("vvv^^v^^vv^"))
        report.record(
            str(circ) == "vvv^v^vv^^^"
            and weight_to_partition(circ).parts == (5, 5, 5, 4, 3, 3),
            example="lambda circ",
            got=str(circ),
        )
    return _finish(report)


def check_inverse_identity(m: int, n: int) -> CheckReport:
    with timed_check("inverse_identity", m=m, n=n) as report:
        report.record(verify_inverse(m, n))
    return _finish(report)


def check_inverse_corner(m: int, n: int) -> CheckReport:
    """p_{(m^n)(m^m)} = q^{m(n−m)}."""
    with timed_check("inverse_corner", m=m, n=n) as report:
        lo, hi = min(m, n), max(m, n)
        p = p_poly(full_weight(lo, hi), box_weight([lo] * lo, lo, hi))
        report.record(p == Poly.monomial(lo * (hi - lo)), got=str(p))
    return _finish(report)


def check_arrow_chains(m: int, n: int) -> CheckReport:
    """Every nonzero p^{(k)}_{λμ} is supported on an arrow chain of length k."""
    with timed_check("arrow_chains", m=m, n=n) as report:
        for bad in arrow_chain_violations(m, n):
            report.fail(**bad)
        report.conclude()
    return _finish(report)


def check_ell_drop(m: int, n: int) -> CheckReport:
    """min ℓ_h drops by at most one along each arrow."""
    with timed_check("ell_drop", m=m, n=n) as report:
        lo, hi = min(m, n), max(m, n)
        for bad in ell_drop_violations(lo, hi):
            report.fail(**bad)
        report.conclude()
    return _finish(report)


def check_cartan(m: int, n: int) -> CheckReport:
    """dim e_λKe_μ counted on the basis equals Σ_ν n_{νλ}(1)n_{νμ}(1)."""
    ctx = get_context(m, n)
    with timed_check("cartan", m=m, n=n, char=ctx.field.characteristic) as report:
        expected = cartan_matrix(m, n)
        rank = {w: k for k, w in enumerate(enumerate_weights(m, n))}
        counted = [[0] * len(rank) for _ in rank]
        for d in ctx.basis:
            counted[rank[d.bottom]][rank[d.top]] += 1
        report.record(counted == expected, dim=ctx.dim)
    return _finish(report)


def check_associativity(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """(ab)c = a(bc) and deg(ab) = deg a + deg b over every composable basis triple."""
    ctx = get_context(m, n, characteristic)
    with timed_check("associativity", m=m, n=n, char=ctx.field.characteristic) as report:
        triples = 0
        for i, a in enumerate(ctx.basis):
            for j in ctx.by_bottom.get(a.top, []):
                ab = ctx.product_indices(i, j)
                for k in ctx.by_bottom.get(ctx.basis[j].top, []):
                    left: dict[int, int] = {}
                    for x, c in ab.items():
                        for y, e in ctx.product_indices(x, k).items():
                            left[y] = left.get(y, 0) + c * e
                    right: dict[int, int] = {}
                    for x, c in ctx.product_indices(j, k).items():
                        for y, e in ctx.product_indices(i, x).items():
                            right[y] = right.get(y, 0) + c * e
                    triples += 1
                    left = {y: c for y, c in left.items() if c}
                    right = {y: c for y, c in right.items() if c}
                    if left != right:
                        report.fail(
                            a=str(a), b=str(ctx.basis[j]), c=str(ctx.basis[k])
                        )
        values = sorted(ctx.structure_constant_values())
        report.conclude(triples=triples, constants=values)
        if set(values) - {0, 1}:
            logger.warning("%s has structure constants %s", ctx.name, values)
    return _finish(report)


def check_worked_products() -> CheckReport:
    with timed_check("worked_products") as report:
        for left, right, expected in WORKED_PRODUCTS:
            a, b = BasisDiagram.parse(left), BasisDiagram.parse(right)
            product = multiply(a, b)
            got = {str(d): c for d, c in product}
            report.record(
                got == {t: product.field.one for t in expected},
                left=left,
                right=right,
                got=sorted(got),
            )
    return _finish(report)


def check_rotation(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """rotate∘star carries the structure constants of K^m_n onto those of K^n_m."""
    ctx = get_context(m, n, characteristic)
    other = get_context(n, m, characteristic)
    with timed_check("rotation", m=m, n=n, char=ctx.field.characteristic) as report:

        def phi(k: int) -> int:
            return other.index[rotate(ctx.basis[k].star())]

        for (i, j), row in list(ctx.build_table().items()):
            mapped = {phi(k): c for k, c in row.items()}
            if other.product_indices(phi(i), phi(j)) != mapped:
                report.fail(a=str(ctx.basis[i]), b=str(ctx.basis[j]))
        if ctx.dim != other.dim:
            report.fail(dims=[ctx.dim, other.dim])
        report.conclude(dim=ctx.dim)
    return _finish(report)


def check_star(m: int, n: int, characteristic: int | None = None) -> CheckReport:
    """(ab)* = b*a* on every composable pair."""
    ctx = get_context(m, n, characteristic)
    with timed_check("star", m=m, n=n, char=ctx.field.characteristic) as report:
        for (i, j), row in list(ctx.build_table().items()):
            mirrored = ctx.product_indices(ctx.star_index(j), ctx.star_index(i))
            if {ctx.star_index(k): c for k, c in row.items()} != mirrored:
                report.fail(a=str(ctx.basis[i]), b=str(ctx.basis[j]))
        report.conclude()
    return _finish(report)


def check_schedule(m: int, n: int) -> CheckReport:
    """Products do not depend on the order of the surgeries."""
    ctx = get_context(m, n)
    with timed_check("schedule", m=m, n=n, char=ctx.field.characteristic) as report:
        for a in ctx.basis:
            for j in ctx.by_bottom.get(a.top, []):
                b = ctx.basis[j]
                if multiply(a, b, ctx.field, "ltr") != multiply(a, b, ctx.field, "rtl"):
                    report.fail(a=str(a), b=str(b))
        report.conclude()
    return _finish(report)


def check_unit(m: int, n: int) -> CheckReport:
    """The sum of the idempotents is a two-sided identity."""
    ctx = get_context(m, n)
    with timed_check("unit", m=m, n=n, char=ctx.field.characteristic) as report:
        one = ctx.unit()
        for d in ctx.basis:
            x = ctx.element({ctx.index[d]: 1})
            if one * x != x or x * one != x:
                report.fail(diagram=str(d))
        report.conclude()
    return _finish(report)
