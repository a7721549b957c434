import unittest
from collections import Counter, namedtuple

from src.algebra.presentation import (
    GeneratorSymbol,
    e,
    evaluate,
    f,
    f0,
    f0_indices,
    free_level_dim,
    generator_symbols,
    h,
    h_definitions,
    ideal_relations,
    relation,
    relation_set,
)
from src.algebra.w_realization import chevalley_assignment, w_basis, w_bracket
from src.shared.cartan_data import build_cartan, cartan_for_n

Gen = namedtuple("Gen", "level parity")


class TestGeneratorSymbols(unittest.TestCase):
    """Abstract generators and their gradings"""

    def test_multidegrees(self):
        self.assertEqual(e(0).multidegree, (1, 0))
        self.assertEqual(f0(2).multidegree, (0, 1))
        self.assertEqual(e(1).multidegree, (0, 0))
        self.assertEqual(f0(0).level, -1)

    def test_parities(self):
        self.assertEqual(e(0).parity, 1)
        self.assertEqual(f0(0).parity, 1)
        self.assertEqual(e(2).parity, 0)
        self.assertEqual(h(0).parity, 0)

    def test_invalid_symbols(self):
        for kind, index in [("f0", 1), ("f", 0), ("x", 1), ("e", -1)]:
            with self.assertRaises(ValueError):
                GeneratorSymbol(kind, index)

    def test_generator_list(self):
        cartan = cartan_for_n(3)
        self.assertEqual(f0_indices(cartan), [0, 2])
        self.assertEqual(len(generator_symbols(cartan)), 3 + 2 + 3 + 2)


class TestRelationSet(unittest.TestCase):
    """Defining relations of the presentation"""

    def setUp(self):
        self.cartan = cartan_for_n(3)

    def test_count_at_a2(self):
        self.assertEqual(len(relation_set(self.cartan)), 48)
        self.assertEqual(len(h_definitions(self.cartan)), 3)
        self.assertEqual(len(relation_set(self.cartan, with_definitions=True)), 51)

    def test_homogeneous(self):
        for cartan in (cartan_for_n(3), cartan_for_n(5), build_cartan("D", 5), build_cartan("E", 6)):
            for expr in relation_set(cartan) + h_definitions(cartan) + ideal_relations(cartan):
                self.assertTrue(expr.is_homogeneous(), str(expr))

    def test_mixed_family_appears_at_n5(self):
        families = Counter(expr.family for expr in relation_set(cartan_for_n(3)))
        self.assertEqual(families["mixed"], 2)
        families = Counter(expr.family for expr in relation_set(cartan_for_n(5)))
        self.assertEqual(families["mixed"], 3 * 3 * 4)

    def test_ideal_relations_level(self):
        for expr in ideal_relations(cartan_for_n(5)):
            self.assertEqual(expr.level, -2, str(expr))
        families = Counter(expr.family for expr in ideal_relations(cartan_for_n(5)))
        self.assertEqual(families["ideal-mixed"], 3)
        self.assertEqual(families["ideal-difference"], 2)

    def test_ideal_mixed_only_for_a(self):
        families = Counter(expr.family for expr in ideal_relations(build_cartan("D", 5)))
        self.assertEqual(families["ideal-mixed"], 0)

    def test_empty_relation_rejected(self):
        with self.assertRaises(ValueError):
            relation("broken", (0, (e(0),)))

    def test_printing(self):
        expr = relation("h-definition", (1, (e(0), f0(0))), (-1, (h(0),)))
        self.assertEqual(str(expr), "[e0,f00] - h0")


class TestEvaluate(unittest.TestCase):
    """Evaluation of relations in W(n)"""

    def setUp(self):
        self.n = 3
        self.assignment = chevalley_assignment(self.n)

    def test_relations_vanish(self):
        cartan = cartan_for_n(self.n)
        for expr in relation_set(cartan, with_definitions=True) + ideal_relations(cartan):
            self.assertTrue(evaluate(expr, self.assignment, w_bracket).is_zero(), str(expr))

    def test_nonrelation_does_not_vanish(self):
        expr = relation("probe", (1, (e(1), f(1))))
        self.assertFalse(evaluate(expr, self.assignment, w_bracket).is_zero())

    def test_missing_symbol(self):
        expr = relation("probe", (1, (e(7), f(1))))
        with self.assertRaises(ValueError):
            evaluate(expr, self.assignment, w_bracket)


class TestFreeLevelDim(unittest.TestCase):
    """Levels of the free Lie superalgebra on generators of one level"""

    def test_symmetric_square_of_odd_space(self):
        minus_one = w_basis(3, -1)
        self.assertEqual(free_level_dim(minus_one, -1), 9)
        self.assertEqual(free_level_dim(minus_one, -2), 45)
        self.assertEqual(free_level_dim(minus_one, 1), 0)

    def test_single_odd_generator(self):
        x = w_basis(3, -1)[:1]
        self.assertEqual(free_level_dim(x, -2), 1)
        self.assertEqual(free_level_dim(x, -3), 0)

    def test_even_generators(self):
        """Two even generators: the free Lie algebra has dimensions 2, 1, 2"""
        gens = [Gen(-1, 0), Gen(-1, 0)]
        self.assertEqual([free_level_dim(gens, -k) for k in (1, 2, 3)], [2, 1, 2])

    def test_level_zero_generators_rejected(self):
        with self.assertRaises(ValueError):
            free_level_dim(w_basis(2, 0), -1)

    def test_depth_bound(self):
        with self.assertRaises(ValueError):
            free_level_dim(w_basis(3, -1), -4)


if __name__ == "__main__":
    unittest.main()
