"""Tests for the Schur functors, the projective functors and tilting modules."""

import pytest

from arcalg.arcalgebra import get_context
from arcalg.combinatorics import Weight
from arcalg.exceptions import ArcAlgError, ValidationError
from arcalg.faithcheck import (
    check_functor_identities,
    check_restricted_modules,
    check_tilting_modules,
    check_translated_projectives,
    check_translated_standards,
)
from arcalg.functors import (
    G_t,
    G_t_star,
    bimodule_t,
    eta,
    left_projective_decomposition,
    schur_f,
    schur_g,
    schur_g_tilde,
    tilting,
)
from arcalg.repcat import is_iso, projective, simple, standard

UP_DOWN, DOWN_UP = Weight("^v"), Weight("v^")


class TestTilting:
    """Tests for tilting()."""

    def test_minimal_weight_is_simple(self, k11):
        """T(m^n) = L(m^n)."""
        T = tilting(DOWN_UP, k11)

        assert T.dim == 1
        assert is_iso(T, simple(k11, DOWN_UP))

    def test_name_does_not_leak_into_simple(self, k11):
        """Naming T(m^n) leaves L(m^n) and the cached tilting module untouched."""
        T = tilting(DOWN_UP, k11)

        assert T.name == "T(v^)"
        assert simple(k11, DOWN_UP).name == "L(v^)"
        assert tilting(DOWN_UP, k11) is T
        with pytest.raises(AttributeError):
            T.name = "renamed"

    def test_translated_from_empty_box(self, k11):
        """T(^v) = G^{t_1} L(∅) is the projective P(v^)."""
        T = tilting(UP_DOWN, k11)

        assert T.dim == 3
        assert is_iso(T, projective(k11, DOWN_UP))

    def test_bad_ascent(self):
        """Only ascents of λ may be used."""
        with pytest.raises(ValidationError, match="not an ascent"):
            tilting(Weight("^v^v"), ascent=2)

    def test_truncated_algebra_rejected(self):
        """Tilting modules are built over K."""
        with pytest.raises(ValidationError, match="does not label"):
            tilting(DOWN_UP, get_context(1, 1, truncated=True))

    def test_other_ascent_agrees(self, k22):
        """^v^v has ascents 1 and 3; both build the same module."""
        lam = Weight("^v^v")

        assert is_iso(tilting(lam, k22, 1), tilting(lam, k22, 3))


class TestSchurFunctors:
    """Tests for f, g, g̃ and η."""

    def test_f_keeps_regular_weight_spaces(self, k11):
        """Only v^ is regular in Λ_{1,1}."""
        assert schur_f(standard(k11, UP_DOWN)).dim == 1
        assert schur_f(projective(k11, DOWN_UP)).dim == 2
        assert schur_f(simple(k11, UP_DOWN)).dim == 0

    def test_f_needs_k_module(self, k11):
        """f does not apply twice."""
        with pytest.raises(ValidationError, match="f takes K-modules"):
            schur_f(schur_f(projective(k11, DOWN_UP)))

    def test_g_needs_h_module(self, k11):
        """g and g̃ refuse K-modules."""
        with pytest.raises(ValidationError, match="g and g̃ take H-modules"):
            schur_g(projective(k11, DOWN_UP))
        with pytest.raises(ValidationError, match="g and g̃ take H-modules"):
            schur_g_tilde(projective(k11, DOWN_UP))

    def test_unit_on_projective_injective(self, k11):
        """η(P(v^)) is an isomorphism onto gf P(v^)."""
        P = projective(k11, DOWN_UP)
        gfP, unit = eta(P)

        assert unit.is_homomorphism()
        assert unit.is_iso()
        assert is_iso(gfP, P)

    def test_g_tilde_of_regular_projective(self, k11):
        """g̃ f P(v^) ≅ P(v^)."""
        P = projective(k11, DOWN_UP)

        assert is_iso(schur_g_tilde(schur_f(P)), P)


class TestProjectiveFunctors:
    """Tests for the bimodules K^{t_i} and the functors they define."""

    def test_bimodule_actions_commute(self):
        """Left and right actions on K^{t_1} commute."""
        bimodule_t(1, 1, 1).check_commuting()

    def test_bimodule_is_left_projective(self):
        """K^{t_i} is projective as a left module."""
        assert left_projective_decomposition(bimodule_t(1, 1, 2)).is_projective

    def test_unoriented_surgery_term_raises(self, monkeypatch):
        """A surgery result outside the bimodule basis is an error, not a dropped term."""
        from arcalg.functors import bimodule

        bim = bimodule.bimodule_t.__wrapped__(1, 1, 1)
        monkeypatch.setattr(bimodule, "reduce_layer", lambda picture, layer: {("v^", "v^", "^"): 1})

        with pytest.raises(ArcAlgError, match="no basis vector"):
            for k in range(len(bim.left.basis)):
                bim.left_action(k)

    def test_position_out_of_range(self):
        """i runs over 1..m+n-1."""
        with pytest.raises(ValidationError, match="must lie in"):
            bimodule_t(3, 1, 1)

    def test_translation_of_projective(self, k12):
        """G^{t_1} P(v) ≅ P(v^v) over K^1_2."""
        small = get_context(0, 1)

        assert is_iso(G_t(1, projective(small, Weight("v"))), projective(k12, Weight("v^v")))

    def test_restriction_needs_room(self):
        """G^{t_i*} cannot leave K^0_n."""
        with pytest.raises(ValidationError, match="needs m, n ≥ 1"):
            G_t_star(1, simple(get_context(0, 2), Weight("vv")))

    def test_restriction_of_simple(self, k11):
        """G^{t_1*} L(v^) = L(∅) and G^{t_1*} L(^v) = 0."""
        assert G_t_star(1, simple(k11, DOWN_UP)).dim == 1
        assert G_t_star(1, simple(k11, UP_DOWN)).dim == 0


class TestFunctorChecks:
    """The functor checks pass on small boxes."""

    @pytest.mark.parametrize(
        "check",
        [
            check_translated_projectives,
            check_translated_standards,
            check_restricted_modules,
            check_functor_identities,
            check_tilting_modules,
        ],
    )
    def test_box_1_2(self, check):
        """Every functor check passes on K^1_2."""
        report = check(1, 2)

        assert report.status == "pass", report.witnesses

    @pytest.mark.parametrize("check", [check_translated_projectives, check_tilting_modules])
    def test_box_2_2(self, check):
        """The cheaper functor checks also pass on K^2_2."""
        assert check(2, 2).status == "pass"

    def test_empty_box_is_skipped(self):
        """Without a smaller box there is nothing to translate."""
        assert check_translated_projectives(0, 2).status == "skipped"
