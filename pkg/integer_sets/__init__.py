"""
🔢 Ensembles de Points Entiers - Module Principal
=================================================

Analyse exacte d'ensembles finis de points de Z^n: fermeture sous des
opérations coordonnée par coordonnée (median, μ, g, h), opérations
partielles (maj_p, f^(k)), 2-décomposabilité, convexité discrète et
représentabilité par systèmes SVPI / DC / UTVPI / TVPI.

Modules disponibles:
- core_types: Points, ensembles, inégalités et systèmes (arithmétique exacte)
- lattice: Boîtes et énumération bornée
- set_io: Lecture/écriture JSON
- operations: Opérations et tests de fermeture avec témoins
- closure_engine: Fermetures par opérations et par classe de systèmes
- joins / decomposition: Projections, jointures, 2-décomposabilité, f^(k)
- convexity: Voisinage des milieux, convexité intégrale, absence de trous
- representation: Synthèse de systèmes et représentabilité
- classifier: Profil complet et cohérence des implications
- oracle / theorem_suite / reference_fixtures: Références naïves, suites aléatoires, exemples
"""

from .errors import (BudgetExceededError, DimensionMismatchError, EmptySetError, InputFormatError,
                     IntegerSetError, InvalidIndexError, UnboundedOperationError, UnknownNameError)
from .core_types import (ClassTag, IndexPair, Inequality, LinearSystem, Point, PointSet, RationalPoint,
                         bounding_box, point_set_from_rows, validate_class)
from .lattice import Box
from .set_io import load_point_set, load_system, save_point_set, save_system
from .operations import (CEIL_MID, FLOOR_MID, MAJ_P, MEDIAN, MU, CheckResult, CoordinateFamily, PartialOp,
                         TotalOp, Witness, fk_eval, fk_op, is_closed, is_closed_family, is_strongly_closed,
                         is_weakly_closed, maj_p_eval, mu_op, operation_by_name)
from .closure_engine import (ClosureResult, class_closure, closure_under, dc_closure, svpi_closure,
                             tvpi_closure, utvpi_closure)
from .joins import join, project
from .decomposition import (hereditary_check, is_2_decomposable, is_weakly_F_closed, join_of_closures)
from .convexity import (in_convex_hull, integer_neighborhood, is_hole_free, is_integrally_convex,
                        is_midpoint_neighbor_closed)
from .representation import ReprCertificate, evaluate_system, integer_solutions, is_representable, synthesize_system
from .classifier import ClassReport, SetClassifier, classify
from .oracle import closed_random_set, naive_closure, random_set
from .theorem_suite import SuiteOutcome, TheoremVerifier, run_suites
from .reference_fixtures import FixtureResult, FixtureRunner, run_reference_examples

__all__ = [
    'IntegerSetError', 'DimensionMismatchError', 'EmptySetError', 'InvalidIndexError',
    'UnknownNameError', 'InputFormatError', 'BudgetExceededError', 'UnboundedOperationError',
    'Point', 'RationalPoint', 'PointSet', 'IndexPair', 'ClassTag', 'Inequality', 'LinearSystem',
    'bounding_box', 'point_set_from_rows', 'validate_class', 'Box',
    'load_point_set', 'save_point_set', 'load_system', 'save_system',
    'MEDIAN', 'MU', 'CEIL_MID', 'FLOOR_MID', 'MAJ_P', 'TotalOp', 'PartialOp', 'CoordinateFamily',
    'CheckResult', 'Witness', 'mu_op', 'maj_p_eval', 'fk_eval', 'fk_op', 'operation_by_name',
    'is_closed', 'is_weakly_closed', 'is_strongly_closed', 'is_closed_family',
    'ClosureResult', 'closure_under', 'svpi_closure', 'dc_closure', 'utvpi_closure', 'tvpi_closure',
    'class_closure', 'project', 'join', 'is_2_decomposable', 'join_of_closures', 'hereditary_check',
    'is_weakly_F_closed', 'integer_neighborhood', 'in_convex_hull', 'is_midpoint_neighbor_closed',
    'is_integrally_convex', 'is_hole_free', 'ReprCertificate', 'synthesize_system', 'evaluate_system',
    'integer_solutions', 'is_representable', 'ClassReport', 'SetClassifier', 'classify',
    'naive_closure', 'random_set', 'closed_random_set',
    'SuiteOutcome', 'TheoremVerifier', 'run_suites', 'FixtureResult', 'FixtureRunner', 'run_reference_examples',
]

__version__ = "1.0.0"
__author__ = "Integer Sets Team"
