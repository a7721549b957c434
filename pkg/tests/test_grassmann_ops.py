import unittest
from itertools import product

from src.shared.grassmann_ops import (
    EndOp,
    GrassmannElement,
    InhomogeneousOperatorError,
    all_monomials,
    contract,
    contract_op,
    end_compose,
    end_supercommutator,
    gr_mul,
    identity_op,
    k_op,
    left_mul_op,
)


def xi(n, *indices, coeff=1):
    return GrassmannElement.monomial(n, indices, coeff)


class TestGrassmannProduct(unittest.TestCase):
    """Products of Grassmann generators"""

    def test_sorted_product(self):
        self.assertEqual(gr_mul(xi(3, 0), xi(3, 1)).terms, {(0, 1): 1})

    def test_transposition_sign(self):
        self.assertEqual(gr_mul(xi(3, 1), xi(3, 0)).terms, {(0, 1): -1})

    def test_nilpotent(self):
        self.assertTrue(gr_mul(xi(3, 0), xi(3, 0)).is_zero())

    def test_rank_mismatch(self):
        with self.assertRaises(ValueError):
            gr_mul(xi(2, 0), xi(3, 0))

    def test_associative_and_supercommutative(self):
        """Exhaustive over monomials of Lambda(n), n <= 4"""
        for n in range(1, 5):
            basis = [GrassmannElement(n, {m: 1}) for m in all_monomials(n)]
            for x, y in product(basis, repeat=2):
                sign = -1 if x.parity and y.parity else 1
                self.assertEqual(gr_mul(x, y).terms, gr_mul(y, x).scaled(sign).terms)
                for z in basis:
                    self.assertEqual(gr_mul(gr_mul(x, y), z).terms, gr_mul(x, gr_mul(y, z)).terms)


class TestContraction(unittest.TestCase):
    def setUp(self):
        self.top = xi(3, 0, 1)

    def test_contract_first(self):
        """K_0(xi^0 xi^1) = xi^1"""
        self.assertEqual(contract(0, self.top).terms, {(1,): 1})

    def test_contract_second(self):
        """K_1(xi^0 xi^1) = -xi^0"""
        self.assertEqual(contract(1, self.top).terms, {(0,): -1})

    def test_contract_absent(self):
        self.assertTrue(contract(2, self.top).is_zero())

    def test_contract_squares_to_zero(self):
        for n in range(1, 5):
            for b in range(n):
                for m in all_monomials(n):
                    x = GrassmannElement(n, {m: 1})
                    self.assertTrue(contract(b, contract(b, x)).is_zero())


class TestOperators(unittest.TestCase):
    """k_op and the operator supercommutator"""

    def test_euler_type_action(self):
        self.assertEqual(k_op((0,), 0, 3).apply(xi(3, 0)).terms, {(0,): 1})

    def test_contraction_then_product(self):
        """K^{01}_2 on xi^2 gives xi^0 xi^1"""
        self.assertEqual(k_op((0, 1), 2, 3).apply(xi(3, 2)).terms, {(0, 1): 1})

    def test_contraction_kills_unit(self):
        self.assertTrue(contract_op(1, 3).apply(GrassmannElement.unit(3)).is_zero())

    def test_parity(self):
        self.assertEqual(k_op((), 0, 3).parity, 1)
        self.assertEqual(k_op((0,), 1, 3).parity, 0)
        self.assertEqual(k_op((0, 1), 2, 3).parity, 1)

    def test_repeated_upper_is_zero(self):
        self.assertTrue(k_op((1, 1), 0, 3).is_zero())

    def test_contractions_anticommute(self):
        for a, b in product(range(3), repeat=2):
            self.assertTrue(end_supercommutator(contract_op(a, 3), contract_op(b, 3)).is_zero())

    def test_contraction_with_gl_element(self):
        """[K_0, K^0_1] = K_1"""
        self.assertEqual(end_supercommutator(k_op((), 0, 3), k_op((0,), 1, 3)), k_op((), 1, 3))

    def test_identity_is_central(self):
        ops = [k_op((), 0, 3), k_op((0, 2), 1, 3), left_mul_op(xi(3, 1))]
        for op in ops:
            self.assertTrue(end_supercommutator(identity_op(3), op).is_zero())

    def test_inhomogeneous_supercommutator_rejected(self):
        mixed = identity_op(3) + contract_op(0, 3)
        self.assertIsNone(mixed.parity)
        with self.assertRaises(InhomogeneousOperatorError):
            end_supercommutator(mixed, identity_op(3))

    def test_compose_matches_apply(self):
        f, g = k_op((1,), 0, 3), k_op((0, 2), 1, 3)
        composed = end_compose(f, g)
        for m in all_monomials(3):
            x = GrassmannElement(3, {m: 1})
            self.assertEqual(composed.apply(x).terms, f.apply(g.apply(x)).terms)

    def test_parity_consistent_on_all_columns(self):
        for uppers in [(), (0,), (0, 1), (0, 1, 2)]:
            op = k_op(uppers, 1, 3)
            for m, column in op.columns.items():
                for t in column:
                    self.assertEqual((len(m) + len(t)) % 2, op.parity)

    def test_declared_parity_checked(self):
        with self.assertRaises(InhomogeneousOperatorError):
            EndOp(2, {(): {(0,): 1}}, 0)


if __name__ == "__main__":
    unittest.main()
