import unittest
from fractions import Fraction
from math import comb

from src.algebra.presentation import e, f, f0, h
from src.en.en_realization import (
    LocalImage,
    eigenvalue_matrix,
    en_bracket,
    en_generator_images,
    f_abc,
    plus_two_probes,
    verify_en_relations,
)
from src.shared.cartan_data import build_cartan
from src.shared.grassmann_ops import GrassmannElement, identity_op


class TestLocalImage(unittest.TestCase):
    """Elements of the local part u(Lambda(n))"""

    def test_levels_and_parity(self):
        x = LocalImage.of_plus(GrassmannElement(4, {(0,): 1}))
        self.assertEqual(x.levels, [1])
        self.assertEqual(x.parity, 0)
        unit = LocalImage.of_plus(GrassmannElement(4, {(): 1}))
        self.assertEqual(unit.parity, 1)

    def test_zero(self):
        self.assertTrue(LocalImage(4).is_zero())
        self.assertEqual(str(LocalImage(4)), "0")

    def test_rank_mismatch(self):
        with self.assertRaises(ValueError):
            LocalImage(4) + LocalImage(5)


class TestEnBracket(unittest.TestCase):
    """Local bracket and formal node level 2 parts"""

    def setUp(self):
        self.n = 4
        self.images = en_generator_images(self.n)

    def test_odd_e0_squares_to_zero(self):
        self.assertTrue(en_bracket(self.images[e(0)], self.images[e(0)]).is_zero())

    def test_en_fn_gives_hn(self):
        bracket = en_bracket(self.images[e(self.n)], self.images[f(self.n)])
        self.assertTrue((bracket - self.images[h(self.n)]).is_zero())

    def test_unit_acts_on_level_one(self):
        """[1, x E] = x E for the identity of U_0"""
        x = LocalImage.of_plus(GrassmannElement(self.n, {(1, 2): 1}))
        self.assertEqual(en_bracket(LocalImage.of_zero(identity_op(self.n)), x).plus, x.plus)

    def test_formal_parts_cannot_be_bracketed(self):
        x = LocalImage.of_plus(GrassmannElement(self.n, {(0,): 1}))
        formal = en_bracket(x, x)
        self.assertTrue(formal.plus_two)
        with self.assertRaises(ValueError):
            en_bracket(formal, self.images[f(self.n)])

    def test_even_self_bracket_vanishes(self):
        x = LocalImage.of_plus(GrassmannElement(self.n, {(0,): 1}))
        self.assertTrue(en_bracket(x, x).is_zero())

    def test_f_abc_kills_unit(self):
        self.assertNotIn((), f_abc(1, 2, 3, self.n))
        self.assertTrue(f_abc(1, 2, 3, self.n))


class TestEnGenerators(unittest.TestCase):
    """Generator images for W(E_n)"""

    def test_every_generator_has_an_image(self):
        images = en_generator_images(5)
        self.assertIn(f0(0), images)
        self.assertIn(f0(5), images)
        self.assertEqual(images[e(5)].levels, [1])
        self.assertEqual(images[f(5)].levels, [-1])

    def test_eigenvalues_rebuild_cartan_matrix(self):
        expected = [[Fraction(x) for x in row] for row in build_cartan("E", 4).entries]
        self.assertEqual(eigenvalue_matrix(4), expected)

    def test_rank_bounds(self):
        with self.assertRaises(ValueError):
            en_generator_images(3)
        with self.assertRaises(ValueError):
            en_generator_images(9)

    def test_relations_vanish_n4(self):
        report = verify_en_relations(4)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.check_id, "enmap:n=4")

    def test_relations_vanish_n6(self):
        report = verify_en_relations(6)
        self.assertTrue(report.passed, report.failures[:3])


class TestLevelTwoVanishing(unittest.TestCase):
    """Formal node level +2 brackets are tested against the whole generated level -1 part"""

    def setUp(self):
        self.n = 4
        self.images = en_generator_images(self.n)

    def test_probes_start_at_fn(self):
        probes = plus_two_probes(self.n)
        self.assertEqual(probes[0].minus, self.images[f(self.n)].minus)
        self.assertTrue(all(probe.levels == [-1] for probe in probes))

    def test_probes_exceed_f_abc(self):
        self.assertGreater(len(plus_two_probes(self.n)), comb(self.n, 3))

    def test_serre_relation_at_level_two(self):
        """(ad e_n)^2 e_b = 0 for the neighbour b of node n"""
        row = build_cartan("E", self.n).entries[self.n]
        b = next(a for a in range(self.n) if row[a] == -1)
        en = self.images[e(self.n)]
        bracket = en_bracket(en, en_bracket(en, self.images[e(b)]))
        self.assertTrue(bracket.is_zero())


if __name__ == "__main__":
    unittest.main()
