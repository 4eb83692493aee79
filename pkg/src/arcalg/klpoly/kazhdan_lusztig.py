"""The monomials n_{λμ}(q) and the inverse family p_{λμ}(q).

p_{λμ} is computed by the recursion on a descent ``i`` of λ: removing the
``v^`` pair at i, i+1 moves to the smaller box Λ_{m-1,n-1}; replacing it by
``^v`` moves up in the order. Results are memoised across boxes.
"""

from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache

from ..combinatorics import (
    Weight,
    arrow_successors,
    cup_diagram,
    degree,
    descents,
    enumerate_weights,
    insert_pair,
    is_oriented,
    leq,
    min_ell_on_ups,
    remove_pair,
    sign_at,
)
from ..exceptions import ValidationError
from .polynomials import ONE, ZERO, Poly

logger = logging.getLogger(__name__)

PolyMatrix = list[list[Poly]]


def _check_box(lam: Weight, mu: Weight) -> None:
    if lam.box != mu.box:
        raise ValidationError(
            f"Weights {lam} and {mu} lie in different boxes {lam.box} and {mu.box}."
        )


def n_poly(lam: Weight, mu: Weight) -> Poly:
    """q^{deg(μ̲λ)} when λ orients the cup diagram of μ, else 0."""
    _check_box(lam, mu)
    d = cup_diagram(mu)
    if not is_oriented(d, lam):
        return ZERO
    return Poly.monomial(degree(d, lam))


@lru_cache(maxsize=None)
def _p_poly(lam: Weight, mu: Weight) -> Poly:
    if lam == mu:
        return ONE
    if not leq(lam, mu):
        return ZERO
    # λ < μ, so λ is not maximal and has a descent
    return _p_poly_at(lam, mu, descents(lam)[0])


def _p_poly_at(lam: Weight, mu: Weight, i: int) -> Poly:
    lam_prime = remove_pair(lam, i)
    lam_minus = insert_pair(lam_prime, i, "-")
    result = _p_poly(lam_minus, mu).shift(1)
    if sign_at(mu, i) == "+":
        result = _p_poly(lam_prime, remove_pair(mu, i)) + result
    return result


def p_poly(lam: Weight, mu: Weight, descent: int | None = None) -> Poly:
    """
    The inverse Kazhdan–Lusztig polynomial p_{λμ}(q).

    Args:
        lam: λ
        mu: μ, in the same box as λ
        descent: Position i with λ ∈ Λ^{∨∧}(i) used for the first step of
            the recursion. Defaults to the smallest one; the value does not
            depend on the choice.

    Returns:
        p_{λμ} as a :class:`Poly` with non-negative coefficients

    Raises:
        ValidationError: If the boxes differ or ``descent`` is not a descent.

    Example:
        >>> str(p_poly(Weight("v^"), Weight("^v")))
        'q'
    """
    _check_box(lam, mu)
    if descent is None or lam == mu or not leq(lam, mu):
        return _p_poly(lam, mu)
    if sign_at(lam, descent) != "+":
        raise ValidationError(f"Position {descent} is not a 'v^' descent of {lam}.")
    return _p_poly_at(lam, mu, descent)


def p_coefficient(lam: Weight, mu: Weight, k: int) -> int:
    """p^{(k)}_{λμ}, the coefficient of q^k."""
    return p_poly(lam, mu).coefficient(k)


def kl_matrix(m: int, n: int) -> PolyMatrix:
    """Matrix (n_{λμ}) indexed by :func:`enumerate_weights` order."""
    weights = enumerate_weights(m, n)
    return [[n_poly(lam, mu) for mu in weights] for lam in weights]


def inverse_kl_matrix(m: int, n: int) -> PolyMatrix:
    """Matrix (p_{λμ}) indexed by :func:`enumerate_weights` order."""
    weights = enumerate_weights(m, n)
    return [[p_poly(lam, mu) for mu in weights] for lam in weights]


def inverse_product(m: int, n: int) -> PolyMatrix:
    """Σ_ν p_{λν}(-q) n_{μν}(q) for every pair (λ, μ)."""
    weights = enumerate_weights(m, n)
    size = len(weights)
    p = [[p_poly(a, b).at_minus_q().to_sympy() for b in weights] for a in weights]
    nm = [[n_poly(a, b).to_sympy() for b in weights] for a in weights]
    out: PolyMatrix = []
    for r in range(size):
        row = []
        for c in range(size):
            total = sum((p[r][k] * nm[c][k] for k in range(size)), ZERO.to_sympy())
            row.append(Poly.from_sympy(total))
        out.append(row)
    return out


def verify_inverse(m: int, n: int) -> bool:
    """Check that (p_{λν}(-q)) inverts the n-matrix in ℤ[q]."""
    product = inverse_product(m, n)
    ok = all(
        product[r][c] == (ONE if r == c else ZERO)
        for r in range(len(product))
        for c in range(len(product))
    )
    logger.info("inverse identity for (%d,%d): %s", m, n, "pass" if ok else "fail")
    return ok


def arrow_layers(lam: Weight, depth: int) -> list[set[Weight]]:
    """Weights reachable from λ by arrow chains of length exactly 0..depth."""
    layers = [{lam}]
    for _ in range(depth):
        layers.append({b for a in layers[-1] for b in arrow_successors(a)})
    return layers


def arrow_chain_violations(m: int, n: int) -> list[dict[str, object]]:
    """Triples (λ, μ, k) with p^{(k)}_{λμ} ≠ 0 but no arrow chain of length k."""
    violations: list[dict[str, object]] = []
    for lam in enumerate_weights(m, n):
        row = {mu: p_poly(lam, mu) for mu in enumerate_weights(m, n)}
        depth = max((p.degree for p in row.values() if not p.is_zero), default=0)
        layers = arrow_layers(lam, depth)
        for mu, p in row.items():
            for k, c in enumerate(p.coeffs):
                if c and mu not in layers[k]:
                    violations.append({"lam": str(lam), "mu": str(mu), "k": k})
    return violations


def shortest_arrow_chain(a: Weight, b: Weight) -> int | None:
    """Length of a shortest arrow chain from a to b, found breadth first."""
    seen = {a: 0}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            return seen[cur]
        for nxt in arrow_successors(cur):
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                queue.append(nxt)
    return None


def matrix_to_rows(m: int, n: int, matrix: PolyMatrix) -> list[list[str]]:
    """Label a polynomial matrix for CSV export."""
    weights = [str(w) for w in enumerate_weights(m, n)]
    rows = [["", *weights]]
    for label, row in zip(weights, matrix, strict=True):
        rows.append([label, *(" ".join(str(c) for c in p.coeffs) for p in row)])
    return rows


def p_poly_coefficients(lam: Weight, mu: Weight) -> list[int]:
    """[p^{(0)}_{λμ}, p^{(1)}_{λμ}, ...]; empty when p_{λμ} = 0."""
    return list(p_poly(lam, mu).coeffs)


def max_arrow_chain(a: Weight, b: Weight) -> int | None:
    """Length of a longest arrow chain from a to b, or None if there is none."""
    _check_box(a, b)

    @lru_cache(maxsize=None)
    def longest(cur: Weight) -> int | None:
        if cur == b:
            return 0
        best = None
        for nxt in arrow_successors(cur):
            if not leq(nxt, b):
                continue
            sub = longest(nxt)
            if sub is not None and (best is None or sub + 1 > best):
                best = sub + 1
        return best

    return longest(a)


def ell_drop_violations(m: int, n: int) -> list[dict[str, object]]:
    """
    Arrow pairs λ → μ breaking min ℓ_h(μ) ≥ min ℓ_h(λ) - 1.

    The minimum runs over the ``^`` positions h. An empty list means the
    inequality holds throughout Λ_{m,n}.
    """
    if m > n:
        raise ValidationError(f"The inequality is stated for m ≤ n. Got ({m}, {n}).")
    failures: list[dict[str, object]] = []
    for lam in enumerate_weights(m, n):
        before = min_ell_on_ups(lam)
        if before is None:
            continue
        for mu in arrow_successors(lam):
            after = min_ell_on_ups(mu)
            if after is not None and after < before - 1:
                failures.append({"lam": str(lam), "mu": str(mu), "before": before, "after": after})
    return failures


def cartan_matrix(m: int, n: int) -> list[list[int]]:
    """dim e_λ K e_μ = Σ_ν n_{νλ}(1) n_{νμ}(1), in :func:`enumerate_weights` order."""
    weights = enumerate_weights(m, n)
    at_one = [[n_poly(nu, lam).evaluate(1) for lam in weights] for nu in weights]
    size = len(weights)
    return [
        [sum(at_one[k][r] * at_one[k][c] for k in range(size)) for c in range(size)]
        for r in range(size)
    ]
