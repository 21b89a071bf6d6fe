"""
🧪 Tests Unitaires - Types de Base
==================================

Tests des points, ensembles, paires d'indices, inégalités et systèmes.
"""

import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from integer_sets.core_types import (ClassTag, IndexPair, Inequality, LinearSystem, Point, PointSet,
                                     RationalPoint, bounding_box, format_rational, parse_rational,
                                     point_set_from_rows, validate_class)
from integer_sets.errors import DimensionMismatchError, EmptySetError, InputFormatError, InvalidIndexError
from tests.helpers import pset, pt

coords = st.lists(st.integers(-20, 20), min_size=2, max_size=2)


class TestPoint(unittest.TestCase):
    """Tests pour Point et RationalPoint"""

    def test_lexicographic_order(self):
        """Test ordre lexicographique"""
        self.assertLess(pt(0, 5), pt(1, 0))
        self.assertLess(pt(1, 0), pt(1, 1))

    def test_restrict_uses_one_based_indices(self):
        """Test restriction sur des indices 1-based"""
        self.assertEqual(pt(4, 5, 6).restrict([1, 3]), pt(4, 6))

    def test_non_integer_coordinate_rejected(self):
        """Test refus des coordonnées non entières"""
        with self.assertRaises(TypeError):
            Point((1, 0.5))

    def test_empty_point_rejected(self):
        """Test refus d'un point sans coordonnée"""
        with self.assertRaises(DimensionMismatchError):
            Point(())

    def test_midpoint_is_exact(self):
        """Test milieu rationnel exact"""
        middle = RationalPoint.midpoint(pt(0, 0), pt(1, 3))
        self.assertEqual(middle.coords, (Fraction(1, 2), Fraction(3, 2)))
        self.assertFalse(middle.is_integral())
        self.assertTrue(RationalPoint.midpoint(pt(0, 0), pt(2, 4)).is_integral())

    def test_chebyshev_distance(self):
        """Test distance infinie"""
        self.assertEqual(pt(0, 0).chebyshev_distance(pt(1, -3)), 3)


class TestIndexPair(unittest.TestCase):
    """Tests pour IndexPair"""

    def test_invalid_pairs(self):
        """Test refus de i >= j ou i < 1"""
        for i, j in [(2, 1), (1, 1), (0, 2)]:
            with self.assertRaises(InvalidIndexError):
                IndexPair(i, j)

    def test_all_pairs_lexicographic(self):
        """Test énumération lexicographique des paires"""
        self.assertEqual([p.as_tuple() for p in IndexPair.all_pairs(3)], [(1, 2), (1, 3), (2, 3)])

    def test_check_within(self):
        """Test paire hors dimension"""
        with self.assertRaises(InvalidIndexError):
            IndexPair(1, 4).check_within(3)


class TestPointSet(unittest.TestCase):
    """Tests pour PointSet"""

    def test_deduplication(self):
        """Test déduplication des lignes"""
        s = point_set_from_rows(2, [[0, 0], [0, 0], [1, 2]])
        self.assertEqual(len(s), 2)

    def test_row_length_error_carries_index(self):
        """Test erreur de dimension avec l'indice de la ligne"""
        with self.assertRaises(DimensionMismatchError) as ctx:
            point_set_from_rows(2, [[0, 0], [1, 2, 3]])
        self.assertEqual(ctx.exception.row_index, 1)

    def test_non_integer_row_is_format_error(self):
        """Test coordonnée non entière signalée comme erreur de format"""
        with self.assertRaises(InputFormatError):
            point_set_from_rows(2, [[0, 0], [1, 2.5]])

    def test_order_independent_equality(self):
        """Test égalité indépendante de l'ordre de construction"""
        self.assertEqual(pset((1, 1), (0, 0)), pset((0, 0), (1, 1)))

    def test_iteration_is_sorted(self):
        """Test itération dans l'ordre canonique"""
        self.assertEqual(list(pset((2, 0), (0, 1), (0, 0))), [pt(0, 0), pt(0, 1), pt(2, 0)])

    def test_bounding_box(self):
        """Test boîte englobante"""
        self.assertEqual(bounding_box(pset((0, 3), (2, -1))), (pt(0, -1), pt(2, 3)))
        with self.assertRaises(EmptySetError):
            bounding_box(PointSet.empty(2))

    def test_contains_accepts_tuples(self):
        """Test appartenance depuis un tuple"""
        self.assertIn((1, 2), pset((1, 2)))

    def test_reflections(self):
        """Test réflexions et échange de coordonnées"""
        s = pset((1, 2), (3, 4))
        self.assertEqual(s.negate_coordinate(1), pset((-1, 2), (-3, 4)))
        self.assertEqual(s.swap_coordinates(1, 2), pset((2, 1), (4, 3)))
        self.assertEqual(s.reflect_anti_diagonal(), pset((-2, -1), (-4, -3)))
        with self.assertRaises(InvalidIndexError):
            s.negate_coordinate(3)

    @given(st.lists(coords, min_size=1, max_size=6), coords)
    @settings(max_examples=50, deadline=None)
    def test_translation_is_invertible(self, rows, shift):
        """Test translation puis translation opposée"""
        s = point_set_from_rows(2, rows)
        self.assertEqual(s.translate(shift).translate([-v for v in shift]), s)


class TestInequality(unittest.TestCase):
    """Tests pour Inequality, ClassTag et LinearSystem"""

    def test_tightest_tags(self):
        """Test étiquette la plus forte selon les coefficients"""
        self.assertEqual(Inequality.tagged([1, 0], 0).class_tag, ClassTag.SVPI)
        self.assertEqual(Inequality.tagged([1, -1], 0).class_tag, ClassTag.DC)
        self.assertEqual(Inequality.tagged([-1, -1], 0).class_tag, ClassTag.UTVPI)
        self.assertEqual(Inequality.tagged([2, -1], 0).class_tag, ClassTag.TVPI)
        self.assertEqual(Inequality.tagged([1, 1, 1], 0).class_tag, ClassTag.GENERAL)

    def test_stronger_tag_valid_for_weaker(self):
        """Test une ligne SVPI est valide pour toutes les classes plus faibles"""
        row = Inequality.tagged([0, -1], 3)
        for tag in ClassTag:
            self.assertTrue(row.is_valid_for(tag))

    def test_validate_class_rejects_wrong_tag(self):
        """Test étiquette incohérente"""
        self.assertFalse(validate_class(Inequality((1, 1), 0, ClassTag.DC)))
        self.assertTrue(validate_class(Inequality((1, 1), 0, ClassTag.UTVPI)))

    def test_rational_parsing(self):
        """Test rationnels exacts et refus des flottants"""
        self.assertEqual(parse_rational("3/6"), Fraction(1, 2))
        self.assertEqual(format_rational(Fraction(4, 2)), 2)
        self.assertEqual(format_rational(Fraction(-1, 3)), "-1/3")
        with self.assertRaises(TypeError):
            parse_rational(0.5)

    def test_satisfaction_is_exact(self):
        """Test évaluation exacte avec coefficients rationnels"""
        row = Inequality.tagged(["1/3", "1/3"], "2/3")
        self.assertTrue(row.is_satisfied((1, 1)))
        self.assertFalse(row.is_satisfied((1, 0)))

    def test_system_class_is_weakest(self):
        """Test classe d'un système = la plus faible de ses lignes"""
        system = LinearSystem(2, (Inequality.tagged([1, 0], 0), Inequality.tagged([2, 1], 0)))
        self.assertEqual(system.system_class, ClassTag.TVPI)
        self.assertEqual(LinearSystem(2).system_class, ClassTag.SVPI)

    def test_system_row_dimension(self):
        """Test ligne de mauvaise longueur dans un système"""
        with self.assertRaises(DimensionMismatchError) as ctx:
            LinearSystem(2, (Inequality.tagged([1, 0], 0), Inequality.tagged([1, 0, 0], 0)))
        self.assertEqual(ctx.exception.row_index, 1)

    def test_unknown_tag(self):
        """Test étiquette inconnue"""
        with self.assertRaises(InputFormatError):
            ClassTag.parse("QUAD")


if __name__ == '__main__':
    unittest.main()
