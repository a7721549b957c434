"""Registry of verification suites: which module-level checks run for each suite name"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple
import logging

from src.algebra.prolongation import check_relation_soundness, verify_main_theorem, verify_prolongations
from src.algebra.propositions import verify_propositions
from src.algebra.sl1n import verify_psi_embedding
from src.algebra.w_realization import check_oracle_equivalence, check_superalgebra_axioms
from src.atlas.root_atlas import verify_root_atlas
from src.atlas.tables import check_grading_tables, check_multiplicity_tables
from src.atlas.weyl_automorphism import verify_weyl_invariance
from src.en.en_realization import verify_en_relations
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)

CheckRunner = Callable[[int, VerificationReport], object]


def _filled_by(verify: Callable[[int], VerificationReport]) -> CheckRunner:
    """Adapter for checks that build their own report"""

    def run(n: int, report: VerificationReport):
        report.merge(verify(n))

    return run


@dataclass(frozen=True)
class SuiteCheck:
    """One module-level check with the range of n it supports"""

    name: str
    runner: CheckRunner
    n_range: Tuple[int, int]

    def clamp(self, n: int) -> int:
        low, high = self.n_range
        return min(max(n, low), high)

    def check_id(self, n: int) -> str:
        return f"{self.name}:n={self.clamp(n)}"

    def run(self, n: int) -> VerificationReport:
        n = self.clamp(n)
        report = VerificationReport(self.check_id(n))
        self.runner(n, report)
        return report


SUITE_CHECKS: Dict[str, List[SuiteCheck]] = {
    "relations": [
        SuiteCheck("relations", check_relation_soundness, constants.SUITE_N_RANGES["relations"]),
        SuiteCheck("grading", check_grading_tables, constants.SUITE_N_RANGES["relations"]),
        SuiteCheck("oracle", check_oracle_equivalence, (3, constants.ORACLE_N_RANGE[1])),
        SuiteCheck("axioms", check_superalgebra_axioms, (3, constants.ORACLE_N_RANGE[1])),
    ],
    "psi": [
        SuiteCheck("psi", verify_psi_embedding, constants.SUITE_N_RANGES["psi"]),
    ],
    "weyl": [
        SuiteCheck("weyl", verify_weyl_invariance, constants.SUITE_N_RANGES["weyl"]),
        SuiteCheck("roots", verify_root_atlas, constants.ROOT_ATLAS_N_RANGE),
    ],
    "ideal": [
        SuiteCheck("main-theorem", _filled_by(verify_main_theorem), constants.SUITE_N_RANGES["ideal"]),
    ],
    "prolongation": [
        SuiteCheck("prolongation", _filled_by(verify_prolongations), constants.SUITE_N_RANGES["prolongation"]),
    ],
    "props": [
        SuiteCheck("props", _filled_by(verify_propositions), constants.SUITE_N_RANGES["props"]),
        SuiteCheck("multiplicities", check_multiplicity_tables, constants.MULT_TABLE_N_RANGE),
    ],
    "enmap": [
        SuiteCheck("enmap", verify_en_relations, constants.SUITE_N_RANGES["enmap"]),
    ],
}


def suite_checks(suite: str) -> List[SuiteCheck]:
    """Checks of one suite, or of every suite for "all" """
    if suite == "all":
        return [check for name in SUITE_CHECKS for check in SUITE_CHECKS[name]]
    if suite not in SUITE_CHECKS:
        raise ValueError(f"Unknown suite: {suite} (choose from {', '.join(constants.SUITES)})")
    return list(SUITE_CHECKS[suite])
