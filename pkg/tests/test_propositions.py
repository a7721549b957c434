import unittest

from src.algebra.propositions import (
    ChevalleyBasis,
    adjoint_map,
    check_local_completion,
    check_minus_one_decomposition,
    check_redundancy,
    verify_propositions,
)
from src.algebra.w_realization import w_bracket
from src.shared.cartan_data import RootVector
from src.verification.report import VerificationReport


class TestChevalleyBasis(unittest.TestCase):
    """Root vectors of g and g' inside W(n)"""

    def setUp(self):
        self.cb = ChevalleyBasis(4)

    def test_composite_root_vector(self):
        alpha = RootVector((0, 0, 1, 1))
        self.assertEqual(self.cb.e_root(alpha), w_bracket(self.cb.gen("e", 2), self.cb.gen("e", 3)))
        self.assertEqual(self.cb.f_root(alpha), w_bracket(self.cb.gen("f", 3), self.cb.gen("f", 2)))

    def test_simple_root_vector(self):
        self.assertEqual(self.cb.e_root(RootVector.simple(1, 3)), self.cb.gen("e", 1))

    def test_e_f_give_coroot(self):
        for alpha in self.cb.g_roots:
            bracket = w_bracket(self.cb.e_root(alpha), self.cb.f_root(alpha))
            self.assertFalse(bracket.is_zero(), alpha)
            self.assertEqual(bracket.level, 0)

    def test_adjoint_map_covers_g_prime(self):
        self.assertEqual(len(adjoint_map(self.cb)), (self.cb.n - 1) ** 2 - 1)

    def test_root_counts(self):
        self.assertEqual(len(self.cb.g_roots), 6)
        self.assertEqual(len(self.cb.prime_roots), 3)


class TestPropositionChecks(unittest.TestCase):
    """Instance checks of the structural propositions"""

    def setUp(self):
        self.report = VerificationReport("props-test")

    def test_local_completion(self):
        self.assertTrue(check_local_completion(4, self.report))

    def test_minus_one_decomposition(self):
        self.assertTrue(check_minus_one_decomposition(4, self.report), self.report.failures)

    def test_redundancy(self):
        self.assertTrue(check_redundancy(ChevalleyBasis(5), self.report), self.report.failures[:3])

    def test_verify_n4(self):
        report = verify_propositions(4)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.check_id, "props:n=4")

    def test_range(self):
        for n in (3, 6):
            with self.assertRaises(ValueError):
                verify_propositions(n)


if __name__ == "__main__":
    unittest.main()
