"""
🧪 Tests Unitaires - Fermetures
===============================

Fermetures par opérations, fermetures de classes et enveloppes 2-D.
"""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from integer_sets.closure_engine import (class_closure, closure_by_kind, closure_under, convex_hull_vertices,
                                         dc_closure, get_closure_cache, hull_inequalities, pairwise_integer_hull,
                                         svpi_closure, tvpi_closure, utvpi_closure)
from integer_sets.core_types import point_set_from_rows
from integer_sets.errors import DimensionMismatchError, EmptySetError, UnboundedOperationError, UnknownNameError
from integer_sets.operations import CEIL_MID, FLOOR_MID, MEDIAN, MU, TotalOp, is_closed
from integer_sets.oracle import naive_closure
from integer_sets.lattice import Box
from tests.helpers import EMPTY_2D, MEDIAN_NOT_TVPI, pset, pt

small_sets = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5).map(
    lambda rows: point_set_from_rows(2, rows)
)


class TestOperationClosure(unittest.TestCase):
    """Tests pour closure_under"""

    def test_mu_closure_of_diagonal_pair(self):
        """Test cl_μ de deux points diagonaux"""
        result = closure_under(pset((0, 0), (2, 2)), [MU])
        self.assertEqual(result.closed_set, pset((0, 0), (1, 1), (2, 2)))
        self.assertEqual(result.generators_added, 1)
        self.assertGreaterEqual(result.iterations, 1)

    def test_closure_is_closed(self):
        """Test la fermeture est fermée"""
        closed = closure_under(pset((0, 0), (3, 1), (1, 4)), [MEDIAN]).closed_set
        self.assertTrue(is_closed(closed, MEDIAN))

    def test_empty_rejected(self):
        """Test fermeture d'un ensemble vide"""
        with self.assertRaises(EmptySetError):
            closure_under(EMPTY_2D, [MU])

    def test_unbounded_operation_detected(self):
        """Test opération qui sort de la boîte englobante"""
        plus = TotalOp('plus', 2, lambda a, b: a + b, bounded=False)
        with self.assertLogs('integer_sets.closure_engine', level='WARNING') as logs:
            with self.assertRaises(UnboundedOperationError) as ctx:
                closure_under(pset((1, 1)), [plus])
        self.assertTrue(any('non bornée plus' in line for line in logs.output))
        self.assertEqual(ctx.exception.point, pt(2, 2))

    @given(small_sets)
    @settings(max_examples=40, deadline=None)
    def test_closure_laws(self, s):
        """Test extensivité, idempotence et accord avec l'oracle naïf"""
        for ops in ([MU], [MEDIAN], [CEIL_MID, FLOOR_MID]):
            closed = closure_under(s, ops).closed_set
            self.assertTrue(s.issubset(closed))
            self.assertEqual(closure_under(closed, ops).closed_set, closed)
            self.assertEqual(naive_closure(s, ops, Box.of_set(s)), closed)

    @given(small_sets)
    @settings(max_examples=40, deadline=None)
    def test_two_dim_mu_equals_utvpi(self, s):
        """Test en dimension 2: cl_μ = fermeture UTVPI"""
        self.assertEqual(closure_under(s, [MU]).closed_set, utvpi_closure(s))


class TestClassClosures(unittest.TestCase):
    """Tests des fermetures SVPI / DC / UTVPI / TVPI"""

    def test_svpi_is_box(self):
        """Test fermeture SVPI = boîte"""
        self.assertEqual(len(svpi_closure(pset((0, 0), (2, 1)))), 6)

    def test_dc_versus_utvpi(self):
        """Test anti-diagonale: DC ajoute des points, UTVPI non"""
        s = pset((0, 1), (1, 0))
        self.assertEqual(dc_closure(s), pset((0, 0), (0, 1), (1, 0), (1, 1)))
        self.assertEqual(utvpi_closure(s), s)

    def test_chain_of_closures(self):
        """Test inclusions tvpi ⊆ utvpi ⊆ dc ⊆ svpi"""
        s = MEDIAN_NOT_TVPI
        chain = [svpi_closure(s), dc_closure(s), utvpi_closure(s), tvpi_closure(s)]
        for wide, narrow in zip(chain, chain[1:]):
            self.assertTrue(narrow.issubset(wide))
        self.assertTrue(s.issubset(chain[-1]))

    def test_tvpi_closure_adds_hole(self):
        """Test trou (1,1,1) de la fermeture TVPI"""
        self.assertEqual(tvpi_closure(MEDIAN_NOT_TVPI).difference(MEDIAN_NOT_TVPI), pset((1, 1, 1)))

    def test_tvpi_requires_two_dims(self):
        """Test fermeture TVPI en dimension 1"""
        with self.assertRaises(DimensionMismatchError):
            tvpi_closure(pset((0,), (2,)))

    def test_dispatch(self):
        """Test aiguillage par nom"""
        s = pset((0, 0), (2, 2))
        self.assertEqual(class_closure(s, 'UTVPI'), utvpi_closure(s))
        self.assertEqual(closure_by_kind(s, 'op:gh').closed_set, pset((0, 0), (1, 1), (2, 2)))
        self.assertEqual(closure_by_kind(s, 'svpi').closed_set, svpi_closure(s))
        with self.assertRaises(UnknownNameError):
            class_closure(s, 'quad')
        with self.assertRaises(UnknownNameError):
            closure_by_kind(s, 'op:max')

    def test_cache_hits(self):
        """Test mémorisation des fermetures de classe"""
        cache = get_closure_cache()
        s = pset((5, 5), (7, 9), (6, 11))
        before = cache.get_stats()['hits']
        first = class_closure(s, 'tvpi')
        second = class_closure(s, 'tvpi')
        self.assertEqual(first, second)
        self.assertGreater(cache.get_stats()['hits'], before)


class TestIntegerHull(unittest.TestCase):
    """Tests de l'enveloppe entière 2-D"""

    def test_collinear_points_dropped(self):
        """Test sommets sans points alignés"""
        self.assertEqual(convex_hull_vertices([(0, 0), (1, 1), (2, 2)]), [(0, 0), (2, 2)])
        self.assertEqual(len(convex_hull_vertices([(0, 0), (2, 0), (0, 2), (1, 0), (1, 1)])), 3)

    def test_triangle_hull(self):
        """Test points entiers d'un triangle"""
        hull = pairwise_integer_hull(pset((0, 0), (2, 0), (0, 2)))
        self.assertEqual(hull, pset((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)))

    def test_segment_hull(self):
        """Test segment avec et sans point entier intérieur"""
        self.assertEqual(pairwise_integer_hull(pset((0, 0), (2, 2))), pset((0, 0), (1, 1), (2, 2)))
        self.assertEqual(pairwise_integer_hull(pset((0, 0), (1, 2))), pset((0, 0), (1, 2)))
        self.assertEqual(pairwise_integer_hull(pset((0, 0), (0, 3))), pset((0, 0), (0, 1), (0, 2), (0, 3)))

    def test_hull_inequalities_are_tvpi_and_valid(self):
        """Test facettes valides pour tous les points"""
        s = pset((0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))
        rows = hull_inequalities(s)
        for row in rows:
            self.assertLessEqual(len(row.support()), 2)
            for p in s:
                self.assertTrue(row.is_satisfied(p))
        self.assertFalse(all(row.is_satisfied((1, 0)) for row in rows))

    def test_hull_requires_two_dims(self):
        """Test enveloppe en dimension 3"""
        with self.assertRaises(DimensionMismatchError):
            hull_inequalities(MEDIAN_NOT_TVPI)


if __name__ == '__main__':
    unittest.main()
