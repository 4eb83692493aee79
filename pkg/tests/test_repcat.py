"""Tests for modules, their layers and homological algebra over K^m_n."""

import pytest

from arcalg.arcalgebra import get_context
from arcalg.combinatorics import Weight, enumerate_weights, lambda_circ
from arcalg.exceptions import ResourceCapExceeded, ValidationError
from arcalg.repcat import (
    cokernel,
    delta_filtration_mults,
    direct_sum,
    dual,
    ext_dims,
    hom_dim,
    injective_hull,
    is_iso,
    is_rigid,
    is_uniserial,
    kernel,
    loewy_length,
    minimal_resolution,
    projective,
    projective_cover,
    radical_layers,
    regular_module,
    simple,
    socle,
    socle_layers,
    standard,
    top,
)

UP_DOWN, DOWN_UP = Weight("^v"), Weight("v^")


class TestModules:
    """Tests for the basic modules of K^1_1."""

    def test_dimensions(self, k11):
        """P(v^) has dimension 3, Δ(^v) = P(^v) dimension 2."""
        assert projective(k11, DOWN_UP).dim == 3
        assert projective(k11, UP_DOWN).dim == 2
        assert standard(k11, DOWN_UP).dim == 1
        assert standard(k11, UP_DOWN).dim == 2
        assert simple(k11, UP_DOWN).dim == 1

    def test_actions_respect_structure_constants(self, k22):
        """Spot checks of the projective actions pass."""
        for w in enumerate_weights(2, 2):
            projective(k22, w).check_actions()

    def test_regular_module(self, k11):
        """The regular module has the dimension of the algebra."""
        assert regular_module(k11).dim == k11.dim

    def test_unknown_label(self, k11):
        """Labels must be weights of the algebra."""
        with pytest.raises(ValidationError):
            projective(k11, Weight("v^v"))

    def test_standard_needs_untruncated_algebra(self):
        """Standard modules live over K only."""
        h = get_context(1, 1, truncated=True)

        with pytest.raises(ValidationError, match="defined over K"):
            standard(h, DOWN_UP)

    def test_renamed_leaves_cached_module_alone(self, k11):
        """Renaming returns a copy; the memoized Δ keeps its own name."""
        D = standard(k11, UP_DOWN)
        E = D.renamed("other")

        assert E.name == "other"
        assert E.weights == D.weights
        assert standard(k11, UP_DOWN).name == "Δ(^v)"

    def test_name_is_read_only(self, k11):
        """Module names cannot be reassigned in place."""
        with pytest.raises(AttributeError):
            standard(k11, UP_DOWN).name = "other"

    def test_direct_sum(self, k11):
        """Injections and projections are module maps."""
        S, inj, proj = direct_sum([simple(k11, DOWN_UP), standard(k11, UP_DOWN)])

        assert S.dim == 3
        assert all(f.is_homomorphism() for f in inj + proj)

    def test_direct_sum_needs_summands(self):
        """An empty direct sum is rejected."""
        with pytest.raises(ValidationError, match="at least one summand"):
            direct_sum([])


class TestLayers:
    """Tests for radical and socle series."""

    def test_projective_is_uniserial(self, k11):
        """P(v^) has layers L(v^), L(^v), L(v^)."""
        P = projective(k11, DOWN_UP)

        assert radical_layers(P) == [{DOWN_UP: 1}, {UP_DOWN: 1}, {DOWN_UP: 1}]
        assert is_uniserial(P)
        assert loewy_length(P) == 3

    def test_standard_socle_is_lambda_circ(self, k22):
        """soc Δ(λ) = L(λ°)."""
        for lam in k22.weights:
            D = standard(k22, lam)
            labels = {D.weights[p] for p in socle(D).pivots}
            assert labels == {lambda_circ(lam)}

    def test_standards_rigid(self, k22):
        """Radical and socle series of Δ(λ) agree."""
        assert all(is_rigid(standard(k22, lam)) for lam in k22.weights)

    def test_socle_layers_line_up_with_radical_layers(self, k11):
        """Socle layers are listed from the top, so a rigid Δ gives the radical layers."""
        D = standard(k11, UP_DOWN)

        assert socle_layers(D) == radical_layers(D)
        assert socle_layers(D) == [{UP_DOWN: 1}, {DOWN_UP: 1}]

    def test_top(self, k11):
        """The top of P(λ) is L(λ)."""
        T, _ = top(projective(k11, UP_DOWN))

        assert T.weights == (UP_DOWN,)


class TestHomological:
    """Tests for Hom, Ext, covers and resolutions."""

    def test_hom_dims(self, k11):
        """Hom(P(λ), M) counts [M : L(λ)]."""
        assert hom_dim(projective(k11, DOWN_UP), standard(k11, UP_DOWN)) == 1
        assert hom_dim(standard(k11, UP_DOWN), simple(k11, DOWN_UP)) == 0
        assert hom_dim(standard(k11, DOWN_UP), standard(k11, UP_DOWN)) == 1

    def test_hom_needs_same_algebra(self, k11, k12):
        """Modules over different algebras are rejected."""
        with pytest.raises(ValidationError):
            hom_dim(simple(k11, DOWN_UP), simple(k12, Weight("vv^")))

    def test_is_iso(self, k11):
        """Simples are self-dual; Δ(^v) is not."""
        L = simple(k11, DOWN_UP)
        D = standard(k11, UP_DOWN)

        assert is_iso(dual(L), L)
        assert not is_iso(dual(D), D)
        assert not is_iso(L, D)

    def test_is_iso_enumerates_over_small_fields(self):
        """Over F_2 the isomorphisms of L ⊕ L are found without random attempts.

        Hom is M_2(F_2); the all-ones combination and every single basis
        vector are singular, so only a sum of two basis vectors works.
        """
        k = get_context(1, 1, 2)
        L = simple(k, DOWN_UP)
        LL, _, _ = direct_sum([L, L])

        assert hom_dim(LL, LL) == 4
        assert is_iso(LL, LL, attempts=0)

    def test_is_iso_refuses_to_guess_over_small_fields(self, monkeypatch):
        """Without room to enumerate over F_2 the test stops at the cap."""
        monkeypatch.setenv("ARCALG_ISO_ENUMERATION_CAP", "1")
        k = get_context(1, 1, 2)
        L = simple(k, DOWN_UP)
        LL, _, _ = direct_sum([L, L])

        with pytest.raises(ResourceCapExceeded, match="ISO_ENUMERATION_CAP"):
            is_iso(LL, LL, attempts=0)

    def test_is_iso_over_rationals_without_seeded_attempts(self, k11):
        """Over Q the bounded random search still finds the isomorphism."""
        L = simple(k11, DOWN_UP)
        LL, _, _ = direct_sum([L, L])

        assert is_iso(LL, LL, attempts=0)

    def test_projective_cover(self, k11):
        """The cover of Δ(^v) is P(^v)."""
        P, cover, labels = projective_cover(standard(k11, UP_DOWN))

        assert labels == [UP_DOWN]
        assert cover.is_surjective()
        assert P.dim == 2

    def test_injective_hull_and_cokernel(self, k11):
        """L(v^) embeds into its hull with a nonzero cokernel."""
        _, iota, labels = injective_hull(simple(k11, DOWN_UP))
        C, _ = cokernel(iota)

        assert labels == [DOWN_UP]
        assert iota.is_injective()
        assert C.dim == 2

    def test_kernel(self, k11):
        """The kernel of P(v^) → Δ(v^) is Δ(^v)."""
        _, cover, _ = projective_cover(standard(k11, DOWN_UP))
        K, _ = kernel(cover)

        assert is_iso(K, standard(k11, UP_DOWN))

    def test_resolution_of_standard(self, k11):
        """0 → P(^v) → P(v^) → Δ(v^) → 0."""
        res = minimal_resolution(standard(k11, DOWN_UP), 3)

        assert res.complete
        assert res.projective_dimension() == 1
        assert res.multiplicities(0) == {DOWN_UP: 1}
        assert res.multiplicities(1) == {UP_DOWN: 1}

    def test_ext_between_simples(self, k11):
        """L(^v) has projective dimension 2 with P(v^) in the middle."""
        top_simple, bottom_simple = simple(k11, UP_DOWN), simple(k11, DOWN_UP)

        assert ext_dims(top_simple, bottom_simple, 2) == [0, 1, 0]
        assert ext_dims(top_simple, top_simple, 2) == [1, 0, 1]

    def test_ext_between_standards(self, k11):
        """Ext^1(Δ(v^), Δ(^v)) is one dimensional."""
        assert ext_dims(standard(k11, DOWN_UP), standard(k11, UP_DOWN), 2) == [1, 1, 0]

    def test_dim_cap(self, k22, monkeypatch):
        """Resolution terms above DIM_CAP stop the computation."""
        monkeypatch.setenv("ARCALG_DIM_CAP", "1")

        with pytest.raises(ResourceCapExceeded, match="DIM_CAP"):
            minimal_resolution(simple(k22, Weight("^^vv")), 2)


class TestDeltaFiltration:
    """Tests for Δ-multiplicities."""

    def test_projective(self, k11):
        """P(v^) is filtered by Δ(v^) and Δ(^v)."""
        mults = delta_filtration_mults(projective(k11, DOWN_UP))

        assert mults.is_consistent
        assert mults.mults == {DOWN_UP: 1, UP_DOWN: 1}

    def test_simple_is_not_filtered(self, k11):
        """L(^v) gives a negative multiplicity."""
        mults = delta_filtration_mults(simple(k11, UP_DOWN))

        assert not mults.is_consistent
        assert "negative multiplicities" in mults.diagnostic()
