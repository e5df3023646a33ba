import io

import pytest

from algorithms.catalog import get_pattern, list_patterns
from algorithms.cli.main import run
from algorithms.cli.verify_paper import CheckRow, build_report, format_report
from algorithms.csp_lib.instance import Instance


class TestCheckRows:
    def test_row(self):
        assert CheckRow("x", "yes", "yes").passed
        assert CheckRow("x", "yes", "no").format().endswith("FAIL")

    def test_format_counts_failures(self):
        text = format_report([CheckRow("a", "yes", "yes"), CheckRow("b", "no", "yes")])
        assert text.splitlines()[-1] == "2 checks, 1 failed"

    def test_custom_instances(self):
        catalog = {entry.name: entry for entry in list_patterns()}
        rows = build_report(catalog, [("EMPTY", Instance([{1}]))])
        checks = {row.check: row for row in rows}
        assert checks["EMPTY is SAC"].observed == "yes"
        assert checks["EMPTY has a solution"].observed == "yes"
        assert checks["Q1 occurs in EMPTY"].observed == "no"
        assert "T1 occurs in I34" not in checks
        assert checks["V2 occurs in T4"].passed

    def test_pattern_files(self):
        rows = build_report(instances=[])
        checks = {row.check for row in rows if row.passed}
        for entry in list_patterns():
            assert "{} matches its .pat file".format(entry.name) in checks
        assert get_pattern("R7-").name == "R7-"


@pytest.mark.slow
class TestVerifyPaper:
    def test_every_check_passes(self):
        rows = build_report()
        assert [row.check for row in rows if not row.passed] == []

    def test_command(self):
        out, err = io.StringIO(), io.StringIO()
        assert run(["verify-paper"], out, err) == 0
        assert out.getvalue().rstrip().endswith("0 failed")
