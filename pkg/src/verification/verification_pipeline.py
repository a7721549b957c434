"""Verification pipeline: runs a single check and traps its failures"""

from src.verification.report import VerificationReport
from src.verification.suites import SuiteCheck
from typing import Callable
import logging
import time

log = logging.getLogger(__name__)


class VerificationPipeline:
    """Runs one suite check at one n; exceptions become failed reports"""

    def __init__(self, thread_safe_print: Callable):
        self._thread_safe_print = thread_safe_print

    def run_check(self, check: SuiteCheck, n: int) -> VerificationReport:
        check_id = check.check_id(n)
        if check.clamp(n) != n:
            self._thread_safe_print(f"n={n} outside {check.n_range}, using n={check.clamp(n)}", check_id)

        self._thread_safe_print("STEP 1: Evaluate", check_id)
        started = time.perf_counter()
        try:
            report = check.run(n)
        except Exception as e:
            log.debug("check %s raised", check_id, exc_info=True)
            report = VerificationReport(check_id, error=f"{type(e).__name__}: {e}")
        report.duration = time.perf_counter() - started

        self._thread_safe_print("STEP 2: Summarize", check_id)
        if report.error:
            self._thread_safe_print(f"  Execution failed: {report.error}", check_id)
        elif report.passed:
            self._thread_safe_print(f"  {len(report.outcomes)} checks passed ({report.duration:.1f}s)", check_id)
        else:
            self._thread_safe_print(
                f"  {len(report.failures)} of {len(report.outcomes)} checks FAILED ({report.duration:.1f}s)", check_id
            )
        return report
