"""
📐 Convexité Discrète
=====================

Voisinages entiers, fermeture par voisinage des milieux, convexité
intégrale et absence de trous, avec un test exact d'appartenance à
l'enveloppe convexe (élimination de Gauss sur les rationnels, sous-ensembles
de Carathéodory).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor
from typing import List, Optional, Sequence

from .closure_engine import pairwise_integer_hull, svpi_closure, tvpi_closure
from .core_types import Point, PointSet, RationalPoint, require_nonempty
from .errors import DimensionMismatchError
from .operations import CLOSED, CheckResult, Witness, WitnessReason

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HullQuery:
    """Le point cible est-il combinaison convexe des générateurs ?"""
    target: RationalPoint
    generators: PointSet

    def __post_init__(self):
        if self.target.dim != self.generators.dim:
            raise DimensionMismatchError(
                f"Cible de dimension {self.target.dim} et générateurs de dimension {self.generators.dim}"
            )


def integer_neighborhood(x: RationalPoint) -> PointSet:
    """N(x) = {z entier : |z_j - x_j| < 1 pour tout j}"""
    choices = []
    for c in x:
        if c.denominator == 1:
            choices.append((c.numerator,))
        else:
            choices.append((floor(c), ceil(c)))
    return PointSet(x.dim, frozenset(Point(coords) for coords in product(*choices)))


def _solve_unique(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """
    Solution unique de Σ λ_c · columns[c] = rhs, ou None si le système est
    incompatible ou de rang colonne non plein
    """
    n_rows, n_cols = len(rhs), len(columns)
    matrix = [[Fraction(columns[c][r]) for c in range(n_cols)] + [Fraction(rhs[r])] for r in range(n_rows)]
    pivot_row = 0
    for col in range(n_cols):
        found = next((r for r in range(pivot_row, n_rows) if matrix[r][col] != 0), None)
        if found is None:
            return None
        matrix[pivot_row], matrix[found] = matrix[found], matrix[pivot_row]
        pivot = matrix[pivot_row][col]
        matrix[pivot_row] = [v / pivot for v in matrix[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[pivot_row])]
        pivot_row += 1
    if any(matrix[r][n_cols] != 0 for r in range(pivot_row, n_rows)):
        return None
    return [matrix[k][n_cols] for k in range(n_cols)]


def in_convex_hull(query: HullQuery) -> bool:
    """
    Vrai ssi la cible est combinaison convexe des générateurs

    Par Carathéodory il suffit d'essayer les sous-ensembles affinement
    indépendants d'au plus n+1 générateurs: on résout exactement
    [g_1 ... g_m ; 1 ... 1] λ = [cible ; 1] et on exige λ >= 0.
    """
    generators = query.generators.ordered
    target = list(query.target)
    if not generators:
        return False
    lower, upper = query.generators.bounding_box()
    if any(c < lo or c > hi for c, lo, hi in zip(target, lower, upper)):
        return False

    if query.target.is_integral() and query.target.to_point() in query.generators.points:
        return True

    rhs = target + [Fraction(1)]
    max_size = min(len(generators), query.target.dim + 1)
    for size in range(1, max_size + 1):
        for subset in combinations(generators, size):
            columns = [list(p.coords) + [1] for p in subset]
            weights = _solve_unique(columns, rhs)
            if weights is not None and all(w >= 0 for w in weights):
                return True
    return False


def point_in_hull(target: RationalPoint, generators: PointSet) -> bool:
    return in_convex_hull(HullQuery(target, generators))


def is_midpoint_neighbor_closed(point_set: PointSet) -> CheckResult:
    """Vrai ssi N((x+y)/2) ⊆ S pour toute paire x, y de S"""
    for x, y in combinations(point_set.ordered, 2):
        middle = RationalPoint.midpoint(x, y)
        for neighbor in integer_neighborhood(middle).ordered:
            if neighbor not in point_set.points:
                return CheckResult(False, Witness(
                    (x, y), WitnessReason.NEIGHBOR_NOT_IN_SET, 'midpoint-neighbor',
                    produced=neighbor, midpoint=middle.coords,
                ))
    return CLOSED


def is_integrally_convex(point_set: PointSet) -> CheckResult:
    """
    Critère par paires: pour x, y de S avec ||x - y||_∞ >= 2, le milieu
    appartient à conv(S ∩ N((x+y)/2))
    """
    for x, y in combinations(point_set.ordered, 2):
        if x.chebyshev_distance(y) < 2:
            continue
        middle = RationalPoint.midpoint(x, y)
        local = PointSet(point_set.dim, integer_neighborhood(middle).points & point_set.points)
        if not point_in_hull(middle, local):
            logger.debug(f"❌ Milieu {middle} de {x} et {y} hors de l'enveloppe locale")
            return CheckResult(False, Witness(
                (x, y), WitnessReason.MIDPOINT_NOT_IN_LOCAL_HULL, 'integrally-convex',
                midpoint=middle.coords,
            ))
    return CLOSED


def is_hole_free(point_set: PointSet) -> CheckResult:
    """
    Vrai ssi conv(S) ∩ Z^n = S; le témoin est le plus petit trou

    Les candidats sont pris dans la fermeture TVPI, qui contient tous les
    points entiers de conv(S); en dimension 2 elle lui est égale.
    """
    require_nonempty(point_set, "is_hole_free")
    if point_set.dim == 1:
        holes = sorted(svpi_closure(point_set).points - point_set.points)
    elif point_set.dim == 2:
        holes = sorted(pairwise_integer_hull(point_set).points - point_set.points)
    else:
        candidates = sorted(tvpi_closure(point_set).points - point_set.points)
        holes = (c for c in candidates if point_in_hull(RationalPoint.from_point(c), point_set))
    hole = next(iter(holes), None)
    if hole is None:
        return CLOSED
    return CheckResult(False, Witness((), WitnessReason.HOLE, 'hole-free', produced=hole))
