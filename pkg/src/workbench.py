"""Core workbench facade"""

from src.atlas.tables import emit_dims, emit_table
from src.verification.parallel_processor import ParallelProcessor
from src.verification.report import VerificationReport
from src.verification.verification_orchestrator import VerificationOrchestrator
from src.verification.verification_pipeline import VerificationPipeline
from typing import List, Optional, TextIO
import sys
import threading
import constants


class Workbench:
    """Unified facade for tables and verification suites"""

    def __init__(self, max_workers: int = constants.MAX_WORKERS, stream: Optional[TextIO] = None):
        self.max_workers = max_workers
        self._stream = stream or sys.stderr
        self._print_lock = threading.Lock()

        # Build verification module hierarchy
        verification_pipeline = VerificationPipeline(self._thread_safe_print)
        parallel_processor = ParallelProcessor(verification_pipeline, self._thread_safe_print)
        self.verification_orchestrator = VerificationOrchestrator(
            parallel_processor,
            max_workers,
            self._thread_safe_print,
        )

    def _thread_safe_print(self, message: str, check_id: str = None):
        """Thread-safe printing to the diagnostics stream with optional check identification"""
        with self._print_lock:
            if check_id:
                print(f"[{check_id}] {message}", file=self._stream)
            else:
                print(message, file=self._stream)

    def dims(self, algebra: str, n: int, fmt: str = constants.DEFAULT_FORMAT) -> str:
        return emit_dims(algebra, n, fmt)

    def roots(self, n: int, fmt: str = constants.DEFAULT_FORMAT) -> str:
        return emit_table("roots", n, fmt)

    def table(self, which: str, n: int, fmt: str = constants.DEFAULT_FORMAT) -> str:
        return emit_table(which, n, fmt)

    def verify(self, suite: str, n: int) -> List[VerificationReport]:
        return self.verification_orchestrator.run_suite(suite, n)
