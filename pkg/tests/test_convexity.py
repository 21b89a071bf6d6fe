"""
🧪 Tests Unitaires - Convexité Discrète
=======================================
"""

import unittest
from fractions import Fraction

from integer_sets.convexity import (HullQuery, in_convex_hull, integer_neighborhood, is_hole_free,
                                    is_integrally_convex, is_midpoint_neighbor_closed)
from integer_sets.core_types import PointSet, RationalPoint
from integer_sets.errors import DimensionMismatchError, EmptySetError
from integer_sets.joins import project
from integer_sets.operations import WitnessReason
from tests.helpers import HOLE_FREE_NOT_HEREDITARY, INTCONV_NOT_MU, pset, pt


def rational(*values):
    return RationalPoint(tuple(Fraction(v) for v in values))


class TestNeighborhood(unittest.TestCase):
    """Tests pour integer_neighborhood et la fermeture par voisinage des milieux"""

    def test_neighborhood(self):
        """Test N(x): coordonnée entière fixée, demi-entière encadrée"""
        self.assertEqual(integer_neighborhood(rational("1/2", 1)), pset((0, 1), (1, 1)))
        self.assertEqual(integer_neighborhood(rational(2, -3)), pset((2, -3)))
        self.assertEqual(len(integer_neighborhood(rational("1/2", "-1/2", "3/2"))), 8)

    def test_midpoint_neighbor_closed(self):
        """Test voisinage des milieux sur une boîte et une diagonale"""
        self.assertTrue(is_midpoint_neighbor_closed(pset((0, 0), (0, 1), (1, 0), (1, 1))))
        result = is_midpoint_neighbor_closed(pset((0, 0), (1, 1)))
        self.assertFalse(result)
        self.assertEqual(result.witness.produced, pt(0, 1))
        self.assertEqual(result.witness.reason, WitnessReason.NEIGHBOR_NOT_IN_SET)

    def test_vacuous_cases(self):
        """Test ensembles vide et singleton"""
        self.assertTrue(is_midpoint_neighbor_closed(PointSet.empty(2)))
        self.assertTrue(is_integrally_convex(pset((3, 4))))


class TestHullMembership(unittest.TestCase):
    """Tests du test exact d'appartenance à l'enveloppe convexe"""

    def setUp(self):
        """Initialisation avant chaque test"""
        self.square = pset((0, 0), (0, 2), (2, 0), (2, 2))

    def test_inside_and_outside(self):
        """Test points intérieurs, sur le bord et extérieurs"""
        self.assertTrue(in_convex_hull(HullQuery(rational("1/2", "3/2"), self.square)))
        self.assertTrue(in_convex_hull(HullQuery(rational(2, 1), self.square)))
        self.assertFalse(in_convex_hull(HullQuery(rational(3, 0), self.square)))

    def test_simplex_interior(self):
        """Test barycentre d'un simplexe en dimension 3"""
        simplex = pset((1, 0, 0), (0, 1, 0), (0, 0, 1))
        self.assertTrue(in_convex_hull(HullQuery(rational("1/3", "1/3", "1/3"), simplex)))
        self.assertFalse(in_convex_hull(HullQuery(rational(0, 0, 0), simplex)))

    def test_empty_generators(self):
        """Test enveloppe vide"""
        self.assertFalse(in_convex_hull(HullQuery(rational(0, 0), PointSet.empty(2))))

    def test_dimension_mismatch(self):
        """Test dimensions différentes"""
        with self.assertRaises(DimensionMismatchError):
            HullQuery(rational(0, 0, 0), self.square)


class TestConvexity(unittest.TestCase):
    """Tests de convexité intégrale et d'absence de trous"""

    def test_integrally_convex_but_not_mu_closed(self):
        """Test ensemble intégralement convexe"""
        self.assertTrue(is_integrally_convex(INTCONV_NOT_MU))

    def test_not_integrally_convex(self):
        """Test milieu hors de l'enveloppe locale"""
        result = is_integrally_convex(pset((0, 0), (1, 2)))
        self.assertFalse(result)
        self.assertEqual(result.witness.reason, WitnessReason.MIDPOINT_NOT_IN_LOCAL_HULL)
        self.assertEqual(result.witness.midpoint, (Fraction(1, 2), Fraction(1)))

    def test_hole_free_not_hereditary(self):
        """Test absence de trous non héréditaire"""
        self.assertTrue(is_hole_free(HOLE_FREE_NOT_HEREDITARY))
        result = is_hole_free(project(HOLE_FREE_NOT_HEREDITARY, [1, 2]))
        self.assertFalse(result)
        self.assertEqual(result.witness.produced, pt(1, 1))

    def test_holes_in_one_and_three_dims(self):
        """Test trous en dimensions 1 et 3"""
        self.assertEqual(is_hole_free(pset((0,), (2,))).witness.produced, pt(1))
        self.assertEqual(is_hole_free(pset((0, 0, 0), (2, 2, 2))).witness.produced, pt(1, 1, 1))
        self.assertTrue(is_hole_free(pset((0, 0, 0), (1, 1, 1))))

    def test_hole_free_empty_rejected(self):
        """Test ensemble vide refusé"""
        with self.assertRaises(EmptySetError):
            is_hole_free(PointSet.empty(3))


if __name__ == '__main__':
    unittest.main()
