"""
Verification Module - named, runnable suites with PASS/FAIL reports

Public API:
    run_suite(), run_all()    execute suites
    SuiteReport, Check        report data model
    render_check()            `PASS|FAIL <suite>.<check> [counterexample]`
    SUITES                    registered suite names in run order
"""

from .report import Check, SuiteReport, render_check
from .suites import SUITES, run_all, run_suite

__all__ = ['Check', 'SuiteReport', 'render_check', 'SUITES', 'run_all', 'run_suite']
