import unittest

from src.algebra.sl1n import (
    E,
    F,
    G,
    SLBasisElement,
    psi,
    sl1n_basis,
    sl1n_bracket,
    sl1n_full_basis,
    trace_element,
    verify_psi_embedding,
)
from src.algebra.w_realization import WElement, euler, k_upper


class TestSl1nBracket(unittest.TestCase):
    """Structure constants of sl(1|n)"""

    def setUp(self):
        self.n = 3

    def bracket(self, x, y):
        return sl1n_bracket({x: 1}, {y: 1}, self.n)

    def test_basis_sizes(self):
        self.assertEqual(len(sl1n_basis(self.n, 1)), 3)
        self.assertEqual(len(sl1n_basis(self.n, 0)), 9)
        self.assertEqual(len(sl1n_basis(self.n, -1)), 3)
        self.assertEqual(sl1n_basis(self.n, 2), [])
        self.assertEqual(len(sl1n_full_basis(self.n)), self.n ** 2 + 2 * self.n)

    def test_e_f_bracket(self):
        """[E_a, F^b] = -G^b_a + delta_ab G"""
        self.assertEqual(self.bracket(E(0), F(1)), {G(1, 0): -1})
        self.assertEqual(self.bracket(E(0), F(0)), {G(1, 1): 1, G(2, 2): 1})

    def test_super_antisymmetry(self):
        for x in sl1n_full_basis(self.n):
            for y in sl1n_full_basis(self.n):
                sign = -1 if x.parity and y.parity else 1
                forward = self.bracket(x, y)
                backward = {k: -sign * v for k, v in self.bracket(y, x).items()}
                self.assertEqual(forward, backward, (x, y))

    def test_trace_grades(self):
        """G = sum G^a_a is central in the even part and grades E, F by -1, +1"""
        trace = trace_element(self.n)
        self.assertEqual(sl1n_bracket(trace, {G(0, 1): 1}, self.n), {})
        self.assertEqual(sl1n_bracket(trace, {E(1): 1}, self.n), {E(1): -1})
        self.assertEqual(sl1n_bracket(trace, {F(1): 1}, self.n), {F(1): 1})

    def test_abelian_odd_levels(self):
        self.assertEqual(self.bracket(E(0), E(1)), {})
        self.assertEqual(self.bracket(F(0), F(1)), {})

    def test_bad_symbols(self):
        with self.assertRaises(ValueError):
            SLBasisElement("X", (0,))
        with self.assertRaises(ValueError):
            SLBasisElement("G", (0,))


class TestPsi(unittest.TestCase):
    """The embedding psi of sl(1|n) into W(n)"""

    def test_images(self):
        self.assertEqual(psi(E(1), 3), WElement.symbol(3, (), 1))
        self.assertEqual(psi(G(0, 2), 3), WElement.symbol(3, (0,), 2))
        self.assertEqual(psi(F(2), 3), k_upper(2, 3))
        self.assertEqual(psi(trace_element(3), 3), euler(3))

    def test_embedding(self):
        for n in (3, 4):
            report = verify_psi_embedding(n)
            self.assertTrue(report.passed, report.failures[:3])


if __name__ == "__main__":
    unittest.main()
