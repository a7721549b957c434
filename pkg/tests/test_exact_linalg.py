# Run: python -m unittest discover tests -v
import unittest
from fractions import Fraction

import numpy as np
import sympy

from src.shared.exact_linalg import (
    DimensionMismatchError,
    SparseMatrix,
    SparseVector,
    Subspace,
    determinant,
    inverse,
    kernel_basis,
    mat_mul,
    identity,
    rank,
    rref,
    solve,
    span_dim,
)


def random_matrix(rng, rows, cols, density=0.5, bound=5):
    dense = rng.integers(-bound, bound + 1, size=(rows, cols))
    mask = rng.random((rows, cols)) < density
    return [[int(x) if keep else 0 for x, keep in zip(r, m)] for r, m in zip(dense, mask)]


class TestRref(unittest.TestCase):
    """Reduced row-echelon form on small hand-checked matrices"""

    def test_identity_is_fixed(self):
        """Identity 3x3 stays itself with pivots 0,1,2"""
        m = SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        reduced, pivots = rref(m)
        self.assertEqual(pivots, [0, 1, 2])
        self.assertEqual(reduced.to_dense(), m.to_dense())

    def test_zero_matrix(self):
        """Zero matrix has no pivots"""
        reduced, pivots = rref(SparseMatrix.from_dense([[0, 0], [0, 0]]))
        self.assertEqual(pivots, [])
        self.assertEqual(reduced.nrows, 0)

    def test_dependent_rows(self):
        """Rows (1,2) and (2,4) have rank 1"""
        reduced, pivots = rref(SparseMatrix.from_dense([[1, 2], [2, 4]]))
        self.assertEqual(pivots, [0])
        self.assertEqual(reduced.to_dense(), [[1, 2]])

    def test_rational_entries_normalized(self):
        m = SparseMatrix.from_dense([[Fraction(1, 2), Fraction(1, 3)], [3, 1]])
        reduced, pivots = rref(m)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced.to_dense(), [[1, 0], [0, 1]])

    def test_idempotent(self):
        """rref(rref(m)) == rref(m)"""
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = SparseMatrix.from_dense(random_matrix(rng, 4, 6))
            once, pivots = rref(m)
            twice, pivots2 = rref(once)
            self.assertEqual(once.to_dense(), twice.to_dense())
            self.assertEqual(pivots, pivots2)

    def test_matches_sympy(self):
        """Reduced form agrees with sympy's rref on random integer matrices"""
        rng = np.random.default_rng(11)
        for _ in range(30):
            dense = random_matrix(rng, 5, 5)
            reduced, pivots = rref(SparseMatrix.from_dense(dense))
            expected, expected_pivots = sympy.Matrix(dense).rref()
            self.assertEqual(pivots, list(expected_pivots))
            for i, row in enumerate(reduced.to_dense()):
                self.assertEqual([sympy.Rational(x.numerator, x.denominator) for x in row], list(expected.row(i)))


class TestKernelAndSpan(unittest.TestCase):
    def test_identity_kernel_empty(self):
        m = SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(kernel_basis(m), [])

    def test_zero_kernel_full(self):
        """Zero 2x3 matrix has a 3-dimensional kernel"""
        self.assertEqual(len(kernel_basis(SparseMatrix.from_dense([[0, 0, 0], [0, 0, 0]]))), 3)

    def test_kernel_of_single_row(self):
        m = SparseMatrix.from_dense([[1, 1, 0]])
        kernel = kernel_basis(m)
        self.assertEqual(len(kernel), 2)
        for v in kernel:
            self.assertFalse(m.apply(v))

    def test_rank_nullity_random(self):
        """rank + dim kernel = ncols on 500 random matrices, rank checked against sympy"""
        rng = np.random.default_rng(2024)
        for _ in range(500):
            rows, cols = int(rng.integers(1, 7)), int(rng.integers(1, 7))
            dense = random_matrix(rng, rows, cols, density=0.6)
            m = SparseMatrix.from_dense(dense, cols)
            kernel = kernel_basis(m)
            self.assertEqual(rank(m) + len(kernel), cols)
            self.assertEqual(rank(m), sympy.Matrix(dense).rank())
            for v in kernel:
                self.assertFalse(m.apply(v))

    def test_span_dim(self):
        v = SparseVector(3, {0: 1, 2: 5})
        self.assertEqual(span_dim([]), 0)
        self.assertEqual(span_dim([v, v.scaled(2)]), 1)
        generic = [SparseVector.from_dense(x) for x in ([1, 2], [3, -1], [7, 7])]
        self.assertEqual(span_dim(generic), 2)

    def test_span_dim_invariant_under_permutation_and_scaling(self):
        rng = np.random.default_rng(3)
        vectors = [SparseVector.from_dense(r) for r in random_matrix(rng, 6, 5)]
        base = span_dim(vectors)
        shuffled = [vectors[int(i)].scaled(int(i) + 2) for i in rng.permutation(len(vectors))]
        self.assertEqual(span_dim(shuffled), base)

    def test_span_dim_mismatch(self):
        """Vectors of different ambient dimension are rejected"""
        with self.assertRaises(DimensionMismatchError):
            span_dim([SparseVector(2, {0: 1}), SparseVector(3, {0: 1})])


class TestSubspaceAndSolve(unittest.TestCase):
    def setUp(self):
        self.space = Subspace(4)
        self.space.add({0: 2, 1: 2})
        self.space.add({1: 1, 3: -1})

    def test_add_reports_growth(self):
        self.assertFalse(self.space.add({0: 1, 3: 1}))
        self.assertTrue(self.space.add({2: 1}))
        self.assertEqual(len(self.space), 3)

    def test_coordinates(self):
        """Coordinates are the entries at pivot columns"""
        v = {0: 3, 1: 5, 3: -2}
        coords = self.space.coordinates(v)
        rebuilt = {}
        for c, row in zip(coords, self.space.basis()):
            for k, x in row.entries.items():
                rebuilt[k] = rebuilt.get(k, 0) + c * x
        self.assertEqual({k: x for k, x in rebuilt.items() if x}, v)
        with self.assertRaises(ValueError):
            self.space.coordinates({2: 1})

    def test_solve(self):
        vectors = [SparseVector.from_dense([1, 0, 1]), SparseVector.from_dense([0, 1, 1])]
        self.assertEqual(solve(vectors, SparseVector.from_dense([2, 3, 5])), [2, 3])
        self.assertIsNone(solve(vectors, SparseVector.from_dense([0, 0, 1])))


class TestDenseHelpers(unittest.TestCase):
    def test_determinant_against_sympy(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            dense = random_matrix(rng, 4, 4, density=0.8)
            self.assertEqual(determinant(dense), Fraction(int(sympy.Matrix(dense).det())))

    def test_inverse(self):
        a = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        self.assertEqual(mat_mul(a, inverse(a)), identity(3))
        with self.assertRaises(ValueError):
            inverse([[1, 2], [2, 4]])


if __name__ == "__main__":
    unittest.main()
