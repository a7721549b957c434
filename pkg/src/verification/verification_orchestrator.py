"""High-level orchestration of verification suites"""

from src.verification.parallel_processor import ParallelProcessor
from src.verification.report import VerificationReport
from src.verification.suites import suite_checks
from typing import Callable, List
from concurrent.futures import ThreadPoolExecutor, as_completed
import constants


class VerificationOrchestrator:
    """Fans the checks of a suite out over a thread pool and collects the reports"""

    def __init__(self, parallel_processor: ParallelProcessor, max_workers: int, thread_safe_print: Callable):
        self.parallel_processor = parallel_processor
        self.max_workers = max_workers
        self._thread_safe_print = thread_safe_print

    def _banner(self, title: str):
        self._thread_safe_print("\n" + "=" * constants.BANNER_WIDTH + f"\n{title}\n" + "=" * constants.BANNER_WIDTH)

    def run_suite(self, suite: str, n: int) -> List[VerificationReport]:
        """Run every check of ``suite`` at n; reports come back sorted by check id"""
        checks = suite_checks(suite)
        total_checks = len(checks)
        self._thread_safe_print(f"Suite: {suite.upper()}")
        self._thread_safe_print(f"Requested n: {n}")
        self._thread_safe_print(f"Max parallel workers: {self.max_workers}")

        self._banner(f"RUNNING {total_checks} CHECKS IN PARALLEL")

        reports: List[VerificationReport] = []
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_check = {
                executor.submit(self.parallel_processor.process_check_with_index, idx, check, n, total_checks): check
                for idx, check in enumerate(checks)
            }

            for future in as_completed(future_to_check):
                check = future_to_check[future]
                try:
                    reports.append(future.result())
                except Exception as e:
                    self._thread_safe_print(f"Exception: {e}", check.check_id(n))
                    reports.append(VerificationReport(check.check_id(n), error=f"{type(e).__name__}: {e}"))

        reports.sort(key=lambda report: report.check_id)
        passed = sum(report.passed for report in reports)
        self._banner(f"VERIFICATION COMPLETE: {passed} passed, {total_checks - passed} failed, {total_checks} total checks")
        return reports
