import pytest

from halfgrids import linkdiag
from halfgrids.verify import CheckResult, Report, verify_suite


class TestVerifySuite:
    def test_trivial_scale(self):
        report = verify_suite(1)
        assert report.ok
        names = {r.name for r in report.results}
        assert "writhe-zero" in names and "presentation-equality" in names

    def test_default_scale_passes(self):
        report = verify_suite(5)
        assert report.ok
        for r in report.results:
            assert r.instances > 0, r.name
            assert r.counterexample is None

    def test_instance_counts_follow_catalan(self):
        report = verify_suite(5)
        by_name = {r.name: r for r in report.results}
        # one instance per tree: 1 + 1 + 2 + 5 + 14
        assert by_name["spanning-cardinalities"].instances == 23
        assert by_name["half-grid-validity"].instances == 23
        # one instance per same-size tree pair: 1 + 1 + 4 + 25 + 196
        assert by_name["presentation-equality"].instances == 227
        assert by_name["dual-membership-agreement"].instances == 227

    def test_bounds(self):
        with pytest.raises(ValueError):
            verify_suite(0)
        with pytest.raises(ValueError):
            verify_suite(9)

    def test_report_format(self):
        report = verify_suite(2)
        text = report.format()
        assert "PASS" in text
        assert "all checks passed" in text
        assert "incompatible partition pairs" in text

    def test_failure_reporting(self):
        report = Report(
            1,
            (
                CheckResult("good", 3, True),
                CheckResult("bad", 3, False, "tree (..)"),
            ),
        )
        assert not report.ok
        text = report.format()
        assert "FAIL" in text
        assert "counterexample: tree (..)" in text
        assert "SOME CHECKS FAILED" in text

    def test_flipped_crossing_convention_is_caught(self, monkeypatch):
        # rotating the under direction the wrong way must flip every crossing
        # sign and break the writhe-zero and positivity checks loudly
        monkeypatch.setattr(linkdiag, "_rotate_cw", lambda d: (-d[1], d[0]))
        report = verify_suite(3)
        by_name = {r.name: r for r in report.results}
        failed = by_name["top-half-crossings-positive"]
        assert not failed.passed
        assert failed.counterexample is not None
