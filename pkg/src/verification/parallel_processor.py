"""Parallel processing manager for verification suites"""

from src.verification.report import VerificationReport
from src.verification.suites import SuiteCheck
from src.verification.verification_pipeline import VerificationPipeline
from typing import Callable


class ParallelProcessor:
    """Hands single checks to the pipeline from worker threads"""

    def __init__(self, verification_pipeline: VerificationPipeline, thread_safe_print: Callable):
        self.verification_pipeline = verification_pipeline
        self._thread_safe_print = thread_safe_print

    def process_check_with_index(self, idx: int, check: SuiteCheck, n: int, total_checks: int) -> VerificationReport:
        """Run a single check with its index (for parallel execution)"""
        check_id = check.check_id(n)
        self._thread_safe_print(f"{'=' * 50}\nStarting check {idx + 1}/{total_checks}\n{'=' * 50}", check_id)
        return self.verification_pipeline.run_check(check, n)
