"""
🧪 Tests Unitaires - Opérations et Fermeture
============================================

Lois algébriques (hypothesis) et témoins des tests de fermeture.
"""

import unittest
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from config import BUDGET_CONFIG
from integer_sets.core_types import IndexPair
from integer_sets.errors import BudgetExceededError, InvalidIndexError, UnknownNameError
from integer_sets.operations import (CEIL_MID, FLOOR_MID, MAJ_P, MEDIAN, MU, CoordinateFamily, PartialOp,
                                     WitnessReason, fk_eval, fk_op, is_closed, is_closed_family,
                                     is_closed_under_all, is_strongly_closed, is_weakly_closed, maj_p_eval,
                                     maximum_op, minimum_op, mu_op, operation_by_name)
from tests.helpers import EMPTY_2D, TVPI_NOT_MU, pset, pt

ints = st.integers(-1000, 1000)


class TestScalarOperations(unittest.TestCase):
    """Tests des opérations sur Z"""

    def test_mu_rounds_toward_first_argument(self):
        """Test μ arrondit vers son premier argument"""
        self.assertEqual(mu_op(3, 0), 2)
        self.assertEqual(mu_op(0, 3), 1)
        self.assertEqual(mu_op(-1, 0), -1)
        self.assertEqual(mu_op(0, -1), 0)
        self.assertEqual(mu_op(4, 2), 3)

    def test_rounded_midpoints(self):
        """Test g et h"""
        self.assertEqual(CEIL_MID(-3, 0), -1)
        self.assertEqual(FLOOR_MID(-3, 0), -2)

    @given(ints, ints)
    @settings(max_examples=200)
    def test_mu_sum_identity(self, x, y):
        """Test μ(x,y) + μ(y,x) = x + y et encadrement"""
        self.assertEqual(mu_op(x, y) + mu_op(y, x), x + y)
        self.assertTrue(min(x, y) <= mu_op(x, y) <= max(x, y))
        self.assertTrue(FLOOR_MID(x, y) <= mu_op(x, y) <= CEIL_MID(x, y))

    @given(ints, ints)
    @settings(max_examples=100)
    def test_median_is_majority(self, x, y):
        """Test median(x,x,y) = median(x,y,x) = median(y,x,x) = x"""
        self.assertEqual(MEDIAN(x, x, y), x)
        self.assertEqual(MEDIAN(x, y, x), x)
        self.assertEqual(MEDIAN(y, x, x), x)

    def test_maj_p_domain(self):
        """Test majorité partielle indéfinie sur trois valeurs distinctes"""
        self.assertEqual(maj_p_eval(1, 2, 1), 1)
        self.assertEqual(maj_p_eval(2, 1, 1), 1)
        self.assertIsNone(maj_p_eval(1, 2, 3))

    @given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    def test_f3_equals_maj_p(self, a, b, c):
        """Test f^(3) coïncide avec maj_p"""
        self.assertEqual(fk_eval(3, {(1, 2): a, (1, 3): b, (2, 3): c}), maj_p_eval(a, b, c))

    def test_fk_star_value(self):
        """Test f^(4) constante sur l'étoile de 2"""
        args = {IndexPair(1, 2): 5, IndexPair(2, 3): 5, IndexPair(2, 4): 5,
                IndexPair(1, 3): 0, IndexPair(1, 4): 1, IndexPair(3, 4): 2}
        self.assertEqual(fk_eval(4, args), 5)
        args[IndexPair(2, 4)] = 6
        self.assertIsNone(fk_eval(4, args))

    def test_fk_requires_exact_pairs(self):
        """Test clés différentes de T_k"""
        with self.assertRaises(InvalidIndexError):
            fk_eval(3, {(1, 2): 0, (1, 3): 0})
        with self.assertRaises(InvalidIndexError):
            fk_eval(1, {})

    def test_operation_registry(self):
        """Test résolution des noms de la CLI"""
        self.assertIs(operation_by_name('median'), MEDIAN)
        self.assertIs(operation_by_name('maj-p'), MAJ_P)
        f4 = operation_by_name('fk:4')
        self.assertIsInstance(f4, PartialOp)
        self.assertEqual(f4.arity, 6)
        for name in ['avg', 'fk:x']:
            with self.assertRaises(UnknownNameError):
                operation_by_name(name)


class TestClosedness(unittest.TestCase):
    """Tests des vérificateurs de fermeture"""

    def test_mu_witness_on_tvpi_set(self):
        """Test témoin lexicographique de non μ-fermeture"""
        result = is_closed(TVPI_NOT_MU, MU)
        self.assertFalse(result)
        self.assertEqual(result.witness.inputs, (pt(2, 0), pt(0, 1)))
        self.assertEqual(result.witness.produced, pt(1, 0))
        self.assertEqual(result.witness.reason, WitnessReason.NOT_IN_SET)

    def test_witness_is_reproducible(self):
        """Test le témoin se revérifie sans nouvelle recherche"""
        witness = is_closed(TVPI_NOT_MU, MU).witness
        image = tuple(MU(a, b) for a, b in zip(*witness.inputs))
        self.assertEqual(image, witness.produced.coords)
        self.assertNotIn(witness.produced, TVPI_NOT_MU)

    def test_empty_and_singleton_vacuous(self):
        """Test fermeture vacuement vraie"""
        for op in [MU, MEDIAN, CEIL_MID]:
            self.assertTrue(is_closed(EMPTY_2D, op))
            self.assertTrue(is_closed(pset((4, -2)), op))

    def test_two_points_median_closed(self):
        """Test deux points: toujours median-fermé"""
        self.assertTrue(is_closed(pset((0, 0), (2, 2)), MEDIAN))

    def test_median_witness(self):
        """Test témoin median"""
        s = pset((0, 0, 1), (0, 1, 0), (1, 0, 0))
        result = is_closed(s, MEDIAN)
        self.assertFalse(result)
        self.assertEqual(result.witness.produced, pt(0, 0, 0))

    def test_gh_closed(self):
        """Test fermeture simultanée sous g et h"""
        self.assertTrue(is_closed_under_all(pset((0, 0), (1, 1)), [CEIL_MID, FLOOR_MID]))
        self.assertFalse(is_closed_under_all(pset((0, 0), (2, 0)), [CEIL_MID, FLOOR_MID]))

    def test_weak_and_strong_maj_p(self):
        """Test fermetures faible et forte sous maj_p"""
        s = pset((0, 0, 1), (0, 1, 0), (1, 0, 0))
        weak = is_weakly_closed(s, MAJ_P)
        self.assertFalse(weak)
        self.assertEqual(weak.witness.produced, pt(0, 0, 0))
        strong = is_strongly_closed(s, MAJ_P)
        self.assertFalse(strong)
        self.assertEqual(strong.witness.reason, WitnessReason.NO_AGREEING_MEMBER)

    def test_strong_closed_with_undefined_coordinates(self):
        """Test image partielle satisfaite par un membre"""
        s = pset((0, 0), (1, 1), (2, 2))
        self.assertTrue(is_strongly_closed(s, MAJ_P))

    def test_family_of_bounded_operations(self):
        """Test famille min/max par coordonnée"""
        family = CoordinateFamily(2, (minimum_op(2), maximum_op(2)))
        self.assertTrue(is_closed_family(pset((0, 1), (1, 0)), family))
        result = is_closed_family(pset((0, 0), (1, 1)), family)
        self.assertFalse(result)
        self.assertEqual(result.witness.produced, pt(0, 1))

    def test_budget_guard(self):
        """Test refus d'une énumération trop coûteuse"""
        s = pset(*[(k, 0) for k in range(10)])
        with patch.dict(BUDGET_CONFIG, {'max_enumeration': 10}):
            with self.assertRaises(BudgetExceededError):
                is_closed(s, MU)

    def test_fk_weak_closure(self):
        """Test fermeture faible sous f^(3) = maj_p"""
        s = pset((0, 0, 1), (0, 1, 0), (1, 0, 0))
        self.assertFalse(is_weakly_closed(s, fk_op(3)))
        self.assertTrue(is_weakly_closed(pset((0, 0, 0), (1, 1, 1)), fk_op(3)))


if __name__ == '__main__':
    unittest.main()
