"""Tests for the verification checks, their reports and the suite runner."""

import pytest

from arcalg.combinatorics import Weight
from arcalg.exceptions import ValidationError
from arcalg.faithcheck import (
    CheckParams,
    CheckReport,
    Job,
    check_0faithful,
    check_0faithful_failure,
    check_cartan,
    check_ell_drop,
    check_exact_equivalence,
    check_ext_transfer,
    check_ext_vanishing,
    check_projective_injective,
    check_tilting_coresolution,
    check_tilting_socle2,
    check_uniserial_standards,
    check_worked_examples,
    jobs_for,
    module_report,
    run_suite,
    sample_modules,
)
from arcalg.faithcheck.suites import failure_at_diagonal, skip_reason
from arcalg.repcat import projective, simple


def make_report(**params):
    return CheckReport(check="demo", params=CheckParams(**params))


def check_rejects_its_input(m, n):
    raise ValidationError(f"bad intermediate weight on ({m}, {n})")


class TestCheckReport:
    """Tests for the report model."""

    def test_starts_passing(self):
        """A fresh report passes with no witnesses."""
        report = make_report(m=1, n=2)

        assert report.passed
        assert report.witnesses == []

    def test_fail_records_witness(self):
        """fail() flips the status and keeps the witness."""
        report = make_report()
        report.fail(weight="v^")

        assert not report.passed
        assert report.witnesses == [{"ok": False, "weight": "v^"}]

    def test_record_only_fails_on_false(self):
        """record(True) leaves the status alone."""
        report = make_report()
        report.record(True, k=0)
        report.record(False, k=1)

        assert report.status == "fail"
        assert [w["ok"] for w in report.witnesses] == [True, False]

    def test_conclude_carries_status(self):
        """The closing witness is ok exactly when the check passed."""
        report = make_report()
        report.conclude(weights=2)

        assert report.witnesses[-1] == {"ok": True, "weights": 2}

    def test_skipped_counts_as_passed(self):
        """Only 'fail' is a failure."""
        assert make_report().model_copy(update={"status": "skipped"}).passed

    def test_summary_line(self):
        """The summary names the check, its box and the failing witnesses."""
        report = make_report(m=1, n=2)
        report.fail(weight="v^v")

        line = report.summary_line()

        assert line.startswith("FAIL")
        assert "demo(m=1, n=2, char=0)" in line
        assert "1 failing witnesses" in line

    def test_json_round_trip_keeps_extra_params(self):
        """Extra parameters survive model_dump/model_validate."""
        report = CheckReport(check="demo", params=CheckParams(m=1, n=1, last_degree=3))

        again = CheckReport.model_validate(report.model_dump())

        assert again.params.model_dump()["last_degree"] == 3


class TestModuleReport:
    """Tests for module_report()."""

    def test_projective_over_k(self, k11):
        """P(v^) reports its layers and Δ-multiplicities."""
        report = module_report(projective(k11, Weight("v^")))

        assert report.dim == 3
        assert report.radical_layers == [{"v^": 1}, {"^v": 1}, {"v^": 1}]
        assert report.delta_multiplicities == {"v^": 1, "^v": 1}

    def test_simple_has_diagnostic(self, k11):
        """L(^v) has no Δ-flag, which the diagnostic explains."""
        report = module_report(simple(k11, Weight("^v")))

        assert "negative multiplicities" in report.diagnostic


class TestCombinatorialChecks:
    """Checks that only need weights and polynomials."""

    def test_worked_examples(self):
        """The hand-worked partition, diagram, degree and λ° agree."""
        assert check_worked_examples().status == "pass"

    def test_ell_drop_either_orientation(self):
        """The check swaps m and n when m > n."""
        assert check_ell_drop(3, 2).passed

    def test_cartan(self):
        """The basis count of e_λKe_μ matches the polynomials."""
        assert check_cartan(2, 2).status == "pass"


class TestCoverChecks:
    """Cover-level checks on small boxes."""

    @pytest.mark.parametrize("box", [(1, 2), (2, 1)])
    def test_tilting_coresolution(self, box):
        """Every tilting module has a projective-injective coresolution."""
        assert check_tilting_coresolution(*box).status == "pass"

    def test_tilting_coresolution_needs_m_ne_n(self):
        """On the diagonal the coresolution does not exist."""
        with pytest.raises(ValidationError, match="m ≠ n"):
            check_tilting_coresolution(1, 1)

    def test_0faithful(self):
        """f is fully faithful on standards and tiltings of K^1_2."""
        report = check_0faithful(1, 2)

        assert report.status == "pass", report.witnesses
        assert any(w["kind"] == "eta" for w in report.witnesses)

    def test_0faithful_failure(self):
        """Hom(Δ(∅), Δ(1^1)) is 0 over K^1_1 and 1 after f."""
        report = check_0faithful_failure(1)

        assert report.status == "pass"
        assert report.witnesses[0]["K"] == 0
        assert report.witnesses[0]["H"] >= 1

    def test_failure_only_on_diagonal(self):
        """The suite wrapper refuses boxes off the diagonal."""
        with pytest.raises(ValidationError, match="m = n"):
            failure_at_diagonal(1, 2)

    @pytest.mark.parametrize("box", [(1, 2), (1, 3)])
    def test_tilting_socle2(self, box):
        """P(m^n) is the tilting module T(m^{n−m}) with regular second socle."""
        assert check_tilting_socle2(*box).status == "pass"

    @pytest.mark.parametrize("box", [(1, 2), (2, 3)])
    def test_uniserial_standards(self, box):
        """Δ(∅) and Δ(m^{n−m}) are uniserial with the predicted layers."""
        assert check_uniserial_standards(*box).status == "pass"

    def test_projective_injective(self):
        """P(λ) is self-dual exactly for regular λ."""
        assert check_projective_injective(1, 2).status == "pass"

    def test_ext_vanishing(self):
        """All four vanishing statements hold on K^1_3."""
        report = check_ext_vanishing(1, 3)

        assert report.status == "pass", report.witnesses
        assert {w["part"] for w in report.witnesses} == {"i", "ii", "iii", "iv"}

    def test_ext_transfer(self):
        """Ext agrees below |n − m| on K^1_3."""
        report = check_ext_transfer(1, 3)

        assert report.status == "pass"
        assert report.params.jmax == 1

    def test_ext_transfer_without_sharpness(self):
        """Without the sharpness pass no breaking degree is searched for."""
        report = check_ext_transfer(1, 3, sharpness=False)

        assert report.passed
        assert "first differing degree" not in report.note

    def test_exact_equivalence(self):
        """gf is the identity on standards, tiltings and projectives of K^1_3."""
        assert check_exact_equivalence(1, 3).status == "pass"

    def test_exact_equivalence_needs_gap(self):
        """|n − m| ≥ 2 is required."""
        with pytest.raises(ValidationError, match="≥ 2"):
            check_exact_equivalence(1, 2)

    def test_sample_modules(self, k11):
        """Standards, simples, nonzero radicals and dual standards."""
        names = [M.name for M in sample_modules(k11)]

        assert len(names) == 8
        assert any(name.startswith("rad P(") for name in names)


class TestSuites:
    """Tests for jobs and the suite runner."""

    def test_unknown_suite(self):
        """Suite names are validated."""
        with pytest.raises(ValidationError, match="Unknown suite"):
            jobs_for("nonsense", 1, 1)

    def test_all_collects_every_suite(self):
        """'all' is the union of the named suites."""
        names = [job.name for job in jobs_for("all", 1, 2)]

        assert "worked_examples" in names
        assert "exact_equivalence" in names

    def test_job_passes_only_accepted_arguments(self):
        """check_worked_examples takes no box."""
        job = jobs_for("combinatorics", 1, 2)[0]

        assert job.name == "worked_examples"
        assert job.kwargs() == {}

    def test_precondition_skips(self):
        """A check outside its range is reported as skipped with a note."""
        report = Job(failure_at_diagonal, 1, 2).run()

        assert report.status == "skipped"
        assert "m = n" in report.note
        assert not report.capped

    @pytest.mark.parametrize(
        "check,m,n",
        [
            (check_ext_transfer, 2, 2),
            (check_exact_equivalence, 1, 2),
            (check_ext_vanishing, 2, 1),
            (failure_at_diagonal, 0, 0),
        ],
    )
    def test_skip_reason_matches_the_check(self, check, m, n):
        """Every box a check rejects is skipped before the check runs."""
        assert skip_reason(check, m, n) is not None
        with pytest.raises(ValidationError):
            check(**Job(check, m, n).kwargs())

    def test_skip_reason_none_inside_range(self):
        """Checks without a precondition always apply."""
        assert skip_reason(check_cartan, 0, 0) is None
        assert skip_reason(check_ext_transfer, 1, 3) is None

    def test_validation_error_in_body_fails(self):
        """An error raised while a check runs is a failure, not a skip."""
        report = Job(check_rejects_its_input, 1, 2).run()

        assert report.status == "fail"
        assert not report.passed
        assert "bad intermediate weight" in report.note

    def test_resource_cap_skips(self, monkeypatch):
        """A cap hit is reported as a capped skip."""
        monkeypatch.setenv("ARCALG_ENUMERATION_CAP", "1")

        report = Job(check_cartan, 2, 2).run()

        assert report.status == "skipped"
        assert report.capped
        assert "ENUMERATION_CAP" in report.note

    def test_run_suite_in_process(self):
        """The combinatorics suite passes on Λ_{1,2}."""
        reports = run_suite("combinatorics", 1, 2, workers=1)

        assert all(r.passed for r in reports)
        assert [r.check for r in reports][0] == "worked_examples"

    def test_run_suite_in_workers(self):
        """Worker processes return the reports in job order."""
        serial = run_suite("combinatorics", 1, 2, workers=1)
        parallel = run_suite("combinatorics", 1, 2, workers=2)

        assert [r.check for r in parallel] == [r.check for r in serial]
        assert [r.status for r in parallel] == [r.status for r in serial]


@pytest.mark.slow
class TestDeepRuns:
    """Larger boxes; run with ``pytest -m slow``."""

    @pytest.mark.parametrize("suite", ["repcat", "functors", "faithfulness"])
    def test_suites_on_1_4(self, suite):
        """No check fails on K^1_4."""
        reports = run_suite(suite, 1, 4, workers=1)

        assert all(r.passed for r in reports), [r.summary_line() for r in reports]

    def test_ext_transfer_deep(self):
        """The deep Ext budget still agrees on K^2_4."""
        assert check_ext_transfer(2, 4, deep=True).passed
