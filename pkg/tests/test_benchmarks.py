"""Performance benchmarks for the heavier computations.

Targets on a laptop core:
- Building K^2_3 from scratch: < 2s
- Minimal resolution of every standard module of K^2_2 to length 3: < 1s
- One Ext transfer comparison on K^1_3: < 5s

Run benchmarks with:
    pytest tests/test_benchmarks.py -m slow --benchmark-enable --benchmark-only -v
"""

import pytest

from arcalg.arcalgebra import AlgebraContext
from arcalg.exactla import Field
from arcalg.faithcheck import check_ext_transfer
from arcalg.klpoly import inverse_kl_matrix
from arcalg.klpoly.kazhdan_lusztig import _p_poly
from arcalg.repcat import minimal_resolution, standard

pytestmark = pytest.mark.slow


class TestAlgebraBenchmarks:
    """Benchmarks for enumerating bases and structure constants."""

    @pytest.mark.benchmark(group="algebra")
    def test_build_k23(self, benchmark):
        """Fresh context for K^2_3, bypassing the cache."""
        ctx = benchmark(AlgebraContext, 2, 3, Field(0), False)

        assert ctx.dim > 0

    @pytest.mark.benchmark(group="algebra")
    def test_structure_constants_k22(self, benchmark):
        """Every product of composable basis diagrams of K^2_2."""

        def all_products():
            ctx = AlgebraContext(2, 2, Field(0), False)
            return sum(
                len(ctx.product_indices(i, j))
                for i, a in enumerate(ctx.basis)
                for j in ctx.by_bottom.get(a.top, [])
            )

        assert benchmark(all_products) > 0


class TestPolynomialBenchmarks:
    """Benchmarks for the p recursion."""

    @pytest.mark.benchmark(group="klpoly")
    def test_inverse_matrix_3_4(self, benchmark):
        """The full p matrix of Λ_{3,4}, cache cleared each round."""

        def fresh_matrix():
            _p_poly.cache_clear()
            return inverse_kl_matrix(3, 4)

        assert len(benchmark(fresh_matrix)) == 35


class TestHomologicalBenchmarks:
    """Benchmarks for resolutions and Ext."""

    @pytest.mark.benchmark(group="repcat")
    def test_resolve_standards_k22(self, benchmark, k22):
        """Minimal resolutions of all six standards of K^2_2."""

        def resolve_all():
            return [minimal_resolution(standard(k22, w), 3) for w in k22.weights]

        assert len(benchmark(resolve_all)) == 6

    @pytest.mark.benchmark(group="faithcheck")
    def test_ext_transfer_k13(self, benchmark):
        """One pass of the Ext comparison on K^1_3."""
        report = benchmark.pedantic(check_ext_transfer, args=(1, 3), rounds=1, iterations=1)

        assert report.passed
