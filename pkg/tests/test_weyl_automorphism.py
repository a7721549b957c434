import unittest

from src.algebra.presentation import e, evaluate, f, f0, h, relation
from src.algebra.w_realization import chevalley_assignment, w_bracket
from src.atlas.weyl_automorphism import (
    checked_relations,
    twice_sign,
    verify_weyl_invariance,
    weyl_automorphism,
)
from src.shared.cartan_data import cartan_for_n


class TestWeylAutomorphism(unittest.TestCase):
    """Generator images under the fundamental reflections"""

    def setUp(self):
        self.n = 4
        self.base = chevalley_assignment(self.n)

    def test_images_of_simple_generators(self):
        w = weyl_automorphism(2, self.n)
        self.assertEqual(w.image(e(2)), relation("weyl", (-1, (f(2),))))
        self.assertEqual(w.image(f(2)), relation("weyl", (-1, (e(2),))))
        self.assertEqual(w.image(e(1)), relation("weyl", (1, (e(2), e(1)))))
        self.assertEqual(w.image(f(3)), relation("weyl", (-1, (f(2), f(3)))))
        self.assertEqual(w.image(e(0)), relation("weyl", (1, (e(0),))))

    def test_cartan_images(self):
        w = weyl_automorphism(2, self.n)
        self.assertEqual(w.image(h(2)), relation("weyl", (-1, (h(2),))))
        self.assertEqual(w.image(h(1)), relation("weyl", (1, (h(1),)), (1, (h(2),))))
        self.assertEqual(w.image(h(0)), relation("weyl", (1, (h(0),))))

    def test_f0_images(self):
        w1 = weyl_automorphism(1, self.n)
        self.assertEqual(w1.image(f0(3)), relation("weyl", (-1, (f(1), f0(3)))))
        w3 = weyl_automorphism(3, self.n)
        self.assertEqual(w3.image(f0(2)), relation("weyl", (1, (f0(2),)), (1, (f0(3),))))

    def test_applied_images(self):
        moved = weyl_automorphism(1, self.n).apply(self.base)
        self.assertEqual(moved[e(1)], -self.base[f(1)])
        self.assertEqual(moved[e(2)], w_bracket(self.base[e(1)], self.base[e(2)]))

    def test_h_definition_preserved(self):
        """[e_0', f_00'] = h_0' under w_1"""
        moved = weyl_automorphism(1, self.n).apply(self.base)
        self.assertEqual(w_bracket(moved[e(0)], moved[f0(0)]), moved[h(0)])

    def test_twice_signs(self):
        w = weyl_automorphism(1, self.n)
        twice = w.apply(w.apply(self.base))
        self.assertEqual(twice_sign(self.base[e(1)], twice[e(1)]), 1)
        self.assertEqual(twice_sign(self.base[e(2)], twice[e(2)]), -1)
        self.assertEqual(twice_sign(self.base[e(3)], twice[e(3)]), 1)
        self.assertEqual(twice_sign(self.base[f0(0)], twice[f0(0)]), -1)
        self.assertIsNone(twice_sign(self.base[e(1)], self.base[f(1)]))

    def test_invalid_reflections(self):
        with self.assertRaises(ValueError):
            weyl_automorphism(0, self.n)
        with self.assertRaises(ValueError):
            weyl_automorphism(self.n, self.n)


class TestWeylInvariance(unittest.TestCase):
    """Transformed relations vanish in W(n)"""

    def test_invariance_n3(self):
        report = verify_weyl_invariance(3)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.check_id, "weyl:n=3")

    def test_relations_vanish_before_reflection(self):
        base = chevalley_assignment(3)
        for expr in checked_relations(cartan_for_n(3)):
            self.assertTrue(evaluate(expr, base, w_bracket).is_zero(), str(expr))

    def test_range(self):
        with self.assertRaises(ValueError):
            verify_weyl_invariance(6)


if __name__ == "__main__":
    unittest.main()
