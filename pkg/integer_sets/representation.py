"""
📜 Représentabilité par Systèmes d'Inégalités
=============================================

Synthèse des systèmes SVPI / DC / UTVPI / TVPI les plus serrés contenant un
ensemble, évaluation exacte des systèmes, énumération de leurs solutions
entières dans une boîte et décision de représentabilité avec certificat.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from config import SCHEMA_VERSIONS

from .closure_engine import class_closure, hull_inequalities, svpi_closure
from .core_types import Inequality, LinearSystem, Point, PointSet, require_nonempty
from .errors import DimensionMismatchError, UnknownNameError
from .joins import pairwise_projections
from .lattice import Box, enumerate_filtered
from .set_io import system_to_dict

logger = logging.getLogger(__name__)

SYNTHESIS_CLASSES = ('svpi', 'dc', 'utvpi', 'tvpi')


@dataclass
class ReprCertificate:
    """Système synthétisé si représentable, sinon un trou de la fermeture de classe"""
    representable: bool
    cls: str
    system: Optional[LinearSystem] = None
    hole: Optional[Point] = None

    def __bool__(self) -> bool:
        return self.representable

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA_VERSIONS['certificate'],
            'class': self.cls.upper(),
            'representable': self.representable,
            'system': system_to_dict(self.system) if self.system is not None else None,
            'hole': self.hole.to_list() if self.hole is not None else None,
        }


def _check_class(cls: str) -> str:
    key = cls.lower()
    if key not in SYNTHESIS_CLASSES:
        raise UnknownNameError(f"Classe inconnue: {cls} (attendu: {', '.join(SYNTHESIS_CLASSES)})")
    return key


def _unit_row(dim: int, terms: Dict[int, int], rhs: int) -> Inequality:
    coeffs = [0] * dim
    for index, coeff in terms.items():
        coeffs[index] = coeff
    return Inequality.tagged(coeffs, rhs)


def _bound_rows(point_set: PointSet) -> List[Inequality]:
    lower, upper = point_set.bounding_box()
    rows = []
    for k in range(point_set.dim):
        rows.append(_unit_row(point_set.dim, {k: 1}, lower[k]))
        rows.append(_unit_row(point_set.dim, {k: -1}, -upper[k]))
    return rows


def _pair_rows(point_set: PointSet, with_sums: bool) -> List[Inequality]:
    rows = []
    points = point_set.points
    for i in range(point_set.dim):
        for j in range(i + 1, point_set.dim):
            diffs = [p[i] - p[j] for p in points]
            rows.append(_unit_row(point_set.dim, {i: 1, j: -1}, min(diffs)))
            rows.append(_unit_row(point_set.dim, {i: -1, j: 1}, -max(diffs)))
            if with_sums:
                sums = [p[i] + p[j] for p in points]
                rows.append(_unit_row(point_set.dim, {i: 1, j: 1}, min(sums)))
                rows.append(_unit_row(point_set.dim, {i: -1, j: -1}, -max(sums)))
    return rows


def _lifted_hull_rows(point_set: PointSet) -> List[Inequality]:
    rows = []
    for pair, part in pairwise_projections(point_set).items():
        for row in hull_inequalities(part):
            coeffs = [0] * point_set.dim
            coeffs[pair.i - 1] = row.coeffs[0]
            coeffs[pair.j - 1] = row.coeffs[1]
            rows.append(Inequality.tagged(coeffs, row.rhs))
    return rows


def synthesize_system(point_set: PointSet, cls: str) -> LinearSystem:
    """
    Système le plus serré de la classe contenant S

    SVPI/DC/UTVPI: une inégalité c·x >= min_S c·s par direction admissible.
    TVPI: facettes des enveloppes des projections par paires, relevées en
    dimension n. Lignes dédupliquées, étiquetées par leur classe la plus forte.

    Raises:
        EmptySetError: S vide
        UnknownNameError: classe inconnue
    """
    key = _check_class(cls)
    require_nonempty(point_set, "synthesize_system")
    if key == 'svpi' or (key == 'tvpi' and point_set.dim == 1):
        rows = _bound_rows(point_set)
    elif key == 'dc':
        rows = _bound_rows(point_set) + _pair_rows(point_set, with_sums=False)
    elif key == 'utvpi':
        rows = _bound_rows(point_set) + _pair_rows(point_set, with_sums=True)
    else:
        rows = _lifted_hull_rows(point_set)
    unique = list(dict.fromkeys(rows))
    system = LinearSystem(point_set.dim, tuple(unique))
    logger.debug(f"Système {key.upper()} synthétisé: {len(system)} inégalité(s)")
    return system


def evaluate_system(system: LinearSystem, x: Point) -> bool:
    """Vrai ssi x satisfait toutes les lignes (arithmétique exacte)"""
    if x.dim != system.dim:
        raise DimensionMismatchError(f"Point de dimension {x.dim} pour un système de dimension {system.dim}")
    return system.is_satisfied(x)


def integer_solutions(system: LinearSystem, box: Box) -> PointSet:
    """
    Points entiers de la boîte satisfaisant le système

    Chaque ligne est testée dès que sa dernière variable est fixée.

    Raises:
        DimensionMismatchError: boîte et système de dimensions différentes
        BudgetExceededError: boîte trop grande
    """
    if box.dim != system.dim:
        raise DimensionMismatchError(f"Boîte de dimension {box.dim} pour un système de dimension {system.dim}")
    checks: Dict[int, list] = {}
    for row in system.rows:
        support = row.support()
        level = support[-1] if support else 1
        checks.setdefault(level, []).append(lambda prefix, row=row: row.is_satisfied(prefix))
    points = enumerate_filtered(box, checks, what="solutions entières")
    return PointSet(system.dim, frozenset(points))


def is_representable(point_set: PointSet, cls: str) -> ReprCertificate:
    """
    S est représentable dans la classe ssi il est égal à sa fermeture de classe

    Le certificat porte le système synthétisé, ou le plus petit point de la
    fermeture absent de S.
    """
    key = _check_class(cls)
    require_nonempty(point_set, "is_representable")
    if key == 'tvpi' and point_set.dim == 1:
        closed = svpi_closure(point_set)
    else:
        closed = class_closure(point_set, key)
    extra = closed.points - point_set.points
    if extra:
        hole = min(extra)
        logger.debug(f"❌ Non représentable {key.upper()}: {hole} dans la fermeture")
        return ReprCertificate(False, key, hole=hole)
    return ReprCertificate(True, key, system=synthesize_system(point_set, key))
