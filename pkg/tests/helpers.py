"""
Constructeurs partagés par les tests
"""

from integer_sets.core_types import Point, PointSet, point_set_from_rows


def pset(*rows):
    """Ensemble depuis des tuples de coordonnées: pset((0, 0), (1, 1))"""
    return point_set_from_rows(len(rows[0]), rows)


def pt(*coords):
    return Point(tuple(coords))


# Exemples de référence
MEDIAN_NOT_TVPI = pset((0, 0, 0), (1, 1, 2), (2, 1, 2), (1, 2, 2))
TVPI_NOT_MU = pset((0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))
INTCONV_NOT_MU = pset((-1, 1, 1), (0, 0, 1), (0, 1, 0), (1, 0, 0))
PROJ_BREAKS_DECOMP = pset((0, 0, 1, 2), (0, 1, 0, 3), (1, 0, 0, 4))
HOLE_FREE_NOT_HEREDITARY = pset((0, 0, 0), (2, 2, 3))
EMPTY_2D = PointSet.empty(2)
