import unittest
from collections import Counter
from fractions import Fraction

from src.algebra.w_realization import WElement
from src.atlas.root_atlas import (
    NonDiagonalizableError,
    RootEntry,
    allowed_lengths,
    cartan_images,
    check_root_lengths,
    level_one_roots,
    root_decomposition,
    root_from_weight,
    root_multiplicities,
    verify_root_atlas,
    weight_of,
)
from src.shared.cartan_data import RootVector


class TestRootDecomposition(unittest.TestCase):
    """Roots of W(3) and S(3)"""

    def setUp(self):
        self.entries = root_decomposition("w", 3)

    def test_root_count(self):
        self.assertEqual(len(self.entries), 18)
        self.assertEqual(Counter(entry.level for entry in self.entries), {1: 3, 0: 6, -1: 6, -2: 3})

    def test_double_roots(self):
        mults = {entry.root: entry.multiplicity for entry in self.entries}
        for coeffs in [(-1, 0, 0), (-1, -1, 0), (-1, -1, -1)]:
            self.assertEqual(mults[RootVector(coeffs)], 2, coeffs)
        self.assertEqual(sum(1 for m in mults.values() if m == 2), 3)

    def test_sorted_by_level(self):
        levels = [entry.level for entry in self.entries]
        self.assertEqual(levels, sorted(levels, reverse=True))
        self.assertEqual([list(entry.root.coeffs) for entry in self.entries[:3]], [[1, 0, 0], [1, 1, 0], [1, 1, 1]])

    def test_lengths(self):
        for entry in self.entries:
            self.assertIn(entry.length_sq, allowed_lengths(entry.level), entry.root)
        self.assertEqual({e.length_sq for e in self.entries if e.level == 0}, {2})
        self.assertEqual({e.length_sq for e in self.entries if e.level == 1}, {0})

    def test_dimension_bookkeeping(self):
        counts, cartan_dim = root_multiplicities("w", 3)
        self.assertEqual(cartan_dim, 3)
        self.assertEqual(sum(counts.values()) + cartan_dim, 24)

    def test_sn_roots(self):
        counts, cartan_dim = root_multiplicities("s", 3)
        self.assertEqual(cartan_dim, 2)
        self.assertEqual(sum(counts.values()) + cartan_dim, 17)

    def test_multiplicity_of_minus_alpha0(self):
        for n in (3, 4, 5):
            counts, _ = root_multiplicities("w", n)
            self.assertEqual(counts[-RootVector.simple(0, n - 1)], n - 1, n)

    def test_range_and_algebra(self):
        with self.assertRaises(ValueError):
            root_decomposition("w", 2)
        with self.assertRaises(ValueError):
            root_decomposition("sl1n", 3)

    def test_entry_needs_positive_multiplicity(self):
        with self.assertRaises(ValueError):
            RootEntry(RootVector((1, 0, 0)), 1, 0, Fraction(0))


class TestWeights(unittest.TestCase):
    """Eigenvalues of the Cartan subalgebra"""

    def setUp(self):
        self.hs = cartan_images(3)

    def test_partial_derivative_weight(self):
        weight = weight_of(WElement.symbol(3, (), 0), self.hs)
        self.assertEqual(root_from_weight(weight, 3), RootVector((1, 0, 0)))

    def test_non_eigenvector(self):
        x = WElement.symbol(3, (), 0) + WElement.symbol(3, (), 1)
        with self.assertRaises(NonDiagonalizableError) as ctx:
            weight_of(x, self.hs)
        self.assertEqual(ctx.exception.element, x)

    def test_level_one_roots(self):
        self.assertEqual([list(r.coeffs) for r in level_one_roots(3)], [[1, 0, 0], [1, 1, 0], [1, 1, 1]])

    def test_allowed_lengths(self):
        self.assertEqual(allowed_lengths(1), (0,))
        self.assertEqual(allowed_lengths(-1), (0, 2))
        self.assertEqual(allowed_lengths(-2), (-2, 0))


class TestAtlasChecks(unittest.TestCase):
    """Verification reports of the root atlas"""

    def test_verify_n3(self):
        report = verify_root_atlas(3)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.check_id, "roots:n=3")

    def test_lengths_n4(self):
        for algebra in ("w", "s"):
            report = check_root_lengths(4, algebra=algebra)
            self.assertTrue(report.passed, (algebra, report.failures[:3]))


if __name__ == "__main__":
    unittest.main()
