import unittest
from fractions import Fraction
from math import comb

from src.algebra.prolongation import (
    JacobiViolationError,
    LocalPart,
    ideal_closure,
    ktilde_element,
    ktilde_span,
    ktilde_symbols,
    level_dimensions,
    minimal_prolongation,
    s_local_part,
    sl1n_local_part,
    verify_ktilde,
    verify_main_theorem,
    verify_prolongations,
    w_local_part,
)
from src.algebra.w_realization import WElement, s_dimension_formula


def sl2_local_part(h_on_f: int = -2) -> LocalPart:
    """sl(2) = <e> + <h> + <f>, all even"""
    return LocalPart(
        "sl2",
        {1: (0,), 0: (0,), -1: (0,)},
        {
            (0, 1): {(0, 0): {0: Fraction(2)}},
            (0, -1): {(0, 0): {0: Fraction(h_on_f)}},
            (1, -1): {(0, 0): {0: Fraction(1)}},
        },
    )


class TestLocalPart(unittest.TestCase):
    """Local parts and their super-Jacobi check"""

    def test_sl2_is_consistent(self):
        self.assertGreater(sl2_local_part().validate(), 0)

    def test_jacobi_violation_reports_triple(self):
        with self.assertRaises(JacobiViolationError) as ctx:
            sl2_local_part(h_on_f=-1).validate()
        self.assertEqual(len(ctx.exception.triple), 3)

    def test_table_outside_basis(self):
        with self.assertRaises(ValueError):
            LocalPart("bad", {1: (0,), 0: (0,), -1: (0,)}, {(0, 1): {(0, 3): {0: Fraction(1)}}})

    def test_reverse_order_by_super_antisymmetry(self):
        """Levels 1 and -1 of W(n) are odd, so their bracket is symmetric"""
        local = w_local_part(3)
        for i in range(local.dim(1)):
            for j in range(local.dim(-1)):
                forward = local.bracket(1, i, -1, j)
                backward = local.bracket(-1, j, 1, i)
                self.assertEqual(forward, backward)
        for i in range(local.dim(1)):
            for j in range(local.dim(0)):
                forward = local.bracket(1, i, 0, j)
                self.assertEqual({k: -v for k, v in forward.items()}, local.bracket(0, j, 1, i))

    def test_bracket_leaving_local_part(self):
        with self.assertRaises(ValueError):
            w_local_part(3).bracket(1, 0, 1, 1)


class TestMinimalProlongation(unittest.TestCase):
    """Minimal prolongation of local parts"""

    def test_w3_levels(self):
        dims = level_dimensions(minimal_prolongation(w_local_part(3), 3))
        self.assertEqual(dims, {1: 3, 0: 9, -1: 9, -2: 3, -3: 0})

    def test_depth_one_is_local_part(self):
        components = minimal_prolongation(w_local_part(3), 1)
        self.assertEqual([c.level for c in components], [1, 0, -1])
        self.assertEqual(level_dimensions(components), {1: 3, 0: 9, -1: 9})

    def test_depth_must_be_positive(self):
        with self.assertRaises(ValueError):
            minimal_prolongation(w_local_part(3), 0)

    def test_sl1n_collapses(self):
        """sl(1|n) is 3-graded: nothing below level -1"""
        for n in (3, 4):
            dims = level_dimensions(minimal_prolongation(sl1n_local_part(n), 2))
            self.assertEqual(dims[-2], 0, n)

    def test_sl2_collapses(self):
        dims = level_dimensions(minimal_prolongation(sl2_local_part(), 2))
        self.assertEqual(dims[-2], 0)

    def test_sn_levels(self):
        dims = level_dimensions(minimal_prolongation(s_local_part(4), 3))
        for k in (1, 2, 3):
            self.assertEqual(dims[-k], s_dimension_formula(4, -k), k)

    def test_transitive(self):
        components = minimal_prolongation(w_local_part(4), 3)
        dims = level_dimensions(components)
        for component in components:
            if component.level < 1:
                self.assertTrue(component.is_transitive(dims[component.level + 1]), component.level)

    def test_rebased_local_part(self):
        """Dimensions do not depend on the bases of G_1 and G_-1"""
        local = w_local_part(3)
        plus = [[1, 0, 0], [1, 1, 0], [0, 2, 1]]
        minus = [[1 if i == j else 0 for j in range(9)] for i in range(9)]
        minus[0][4] = 3
        minus[8] = [0] * 8 + [-1]
        rebased = local.rebased(plus, minus)
        self.assertEqual(rebased.validate(), local.validate())
        self.assertEqual(
            level_dimensions(minimal_prolongation(rebased, 2)),
            level_dimensions(minimal_prolongation(local, 2)),
        )

    def test_rebased_wrong_size(self):
        with self.assertRaises(ValueError):
            w_local_part(3).rebased([[1]], [[1]])


class TestKtilde(unittest.TestCase):
    """The recursively defined K~ elements"""

    def test_counts(self):
        self.assertEqual(ktilde_span(4, 3), 16)
        self.assertEqual(ktilde_span(3, 3), 3)
        self.assertEqual(ktilde_span(3, 4), 0)
        for n in range(3, 9):
            for p in range(3, n + 1):
                self.assertEqual(ktilde_span(n, p), n * comb(n, p), (n, p))

    def test_small_p_rejected(self):
        with self.assertRaises(ValueError):
            ktilde_symbols(4, 2)
        with self.assertRaises(ValueError):
            ktilde_element((0, 1), 2, 4)

    def test_base_case(self):
        self.assertEqual(ktilde_element((0, 1, 2), 3, 4), WElement.symbol(4, (0, 1, 2), 3))

    def test_proportional_and_closed(self):
        report = verify_ktilde(4)
        self.assertTrue(report.passed, report.failures[:3])


class TestMainTheorem(unittest.TestCase):
    """W(n) recovered from its presentation"""

    def test_ideal_closure_n3(self):
        data = ideal_closure(3)
        self.assertEqual(data, {"free": 45, "ideal": 42, "w": 3, "in_kernel": 1})

    def test_ideal_closure_n4(self):
        """W_0 acts on the relation images through brackets with level -1 basis elements"""
        data = ideal_closure(4)
        self.assertEqual((data["free"], data["ideal"], data["w"]), (300, 284, 16))
        self.assertEqual(data["in_kernel"], 1)

    def test_main_theorem_n3(self):
        report = verify_main_theorem(3)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.check_id, "main-theorem:n=3")

    def test_main_theorem_range(self):
        with self.assertRaises(ValueError):
            verify_main_theorem(2)

    def test_prolongations_n3(self):
        report = verify_prolongations(3)
        self.assertTrue(report.passed, report.failures[:3])


if __name__ == "__main__":
    unittest.main()
