"""
🧩 2-Décomposabilité
====================

2-décomposabilité (S égal à la jointure de ses projections par paires),
jointures de fermetures 2-D, versions héréditaires et fermeture faible
sous la famille f^(k).
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, Optional, Tuple

from config import BUDGET_CONFIG, JOIN_CLOSURE_KINDS

from .closure_engine import closure_under, pairwise_integer_hull
from .core_types import IndexPair, Point, PointSet
from .errors import BudgetExceededError, DimensionMismatchError, InvalidIndexError, UnknownNameError
from .joins import join, pairwise_projections, project
from .operations import (CEIL_MID, CLOSED, FLOOR_MID, MAJ_P, MEDIAN, MU, CheckResult, TotalOp,
                         fk_op, is_strongly_closed, is_weakly_closed)

logger = logging.getLogger(__name__)


@dataclass
class DecompReport:
    """Verdict de 2-décomposabilité avec le plus petit point manquant"""
    decomposable: bool
    missing_point: Optional[Point]
    projections: Dict[IndexPair, PointSet] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.decomposable

    def to_dict(self) -> Dict[str, Any]:
        return {
            'decomposable': self.decomposable,
            'missing_point': self.missing_point.to_list() if self.missing_point is not None else None,
            'projections': {f"{p.i},{p.j}": part.to_rows() for p, part in self.projections.items()},
        }


def is_2_decomposable(point_set: PointSet) -> DecompReport:
    """
    Vrai ssi S = ⋈ π_{i,j}(S); sinon le plus petit point de la jointure absent de S

    Raises:
        DimensionMismatchError: dimension < 2
    """
    if point_set.dim < 2:
        raise DimensionMismatchError("La 2-décomposabilité exige une dimension >= 2")
    projections = pairwise_projections(point_set)
    if point_set.dim == 2:
        return DecompReport(True, None, projections)
    joined = join(projections, point_set.dim)
    extra = joined.points - point_set.points
    missing = min(extra) if extra else None
    if missing is not None:
        logger.debug(f"❌ {missing} est dans la jointure des projections mais pas dans l'ensemble")
    return DecompReport(missing is None, missing, projections)


def _closure_2d(kind: str) -> Callable[[PointSet], PointSet]:
    ops: Dict[str, Tuple[TotalOp, ...]] = {
        'mu': (MU,),
        'gh': (CEIL_MID, FLOOR_MID),
        'median': (MEDIAN,),
    }
    if kind not in JOIN_CLOSURE_KINDS:
        raise UnknownNameError(f"Fermeture 2-D inconnue: {kind} (attendu: {', '.join(JOIN_CLOSURE_KINDS)})")
    if kind == 'hull':
        return pairwise_integer_hull
    return lambda part: closure_under(part, ops[kind]).closed_set


def join_of_closures(point_set: PointSet, closure_kind: str, mu: TotalOp = MU) -> PointSet:
    """
    ⋈ cl(π_{i,j}(S)) pour la fermeture 2-D choisie (mu, gh, median, hull)

    Args:
        point_set: Ensemble de dimension >= 2
        closure_kind: Fermeture appliquée à chaque projection
        mu: Opération utilisée pour "mu" (remplaçable par un mutant dans les suites)
    """
    if point_set.dim < 2:
        raise DimensionMismatchError("La jointure de fermetures exige une dimension >= 2")
    if point_set.is_empty():
        return point_set
    if closure_kind == 'mu' and mu is not MU:
        closure = lambda part: closure_under(part, (mu,)).closed_set
    else:
        closure = _closure_2d(closure_kind)
    parts = {pair: closure(part) for pair, part in pairwise_projections(point_set).items()}
    return join(parts, point_set.dim)


# ---------------------------------------------------------------------------
# Versions héréditaires
# ---------------------------------------------------------------------------

HEREDITARY_CHECKS: Dict[str, Callable[[PointSet], Any]] = {
    '2-decomposable': is_2_decomposable,
    'weak-maj-p': lambda s: is_weakly_closed(s, MAJ_P),
    'strong-maj-p': lambda s: is_strongly_closed(s, MAJ_P),
}


@dataclass
class HereditaryResult:
    """Verdict héréditaire: premier ensemble d'indices fautif et son certificat"""
    holds: bool
    predicate: str
    failing_indices: Optional[Tuple[int, ...]] = None
    certificate: Any = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'predicate': self.predicate,
            'failing_indices': list(self.failing_indices) if self.failing_indices else None,
            'certificate': self.certificate.to_dict() if self.certificate is not None else None,
        }


def hereditary_check(point_set: PointSet, predicate: str) -> HereditaryResult:
    """
    Vrai ssi toutes les projections sur au moins deux indices vérifient le prédicat

    Les ensembles d'indices sont parcourus par taille croissante puis dans
    l'ordre lexicographique; le premier échec est renvoyé.

    Args:
        predicate: "2-decomposable", "weak-maj-p" ou "strong-maj-p"
    """
    if predicate not in HEREDITARY_CHECKS:
        raise UnknownNameError(f"Prédicat héréditaire inconnu: {predicate} (attendu: {', '.join(HEREDITARY_CHECKS)})")
    check = HEREDITARY_CHECKS[predicate]
    for size in range(2, point_set.dim + 1):
        for indices in combinations(range(1, point_set.dim + 1), size):
            projected = project(point_set, indices)
            verdict = check(projected)
            if not verdict:
                logger.debug(f"❌ {predicate} échoue sur la projection {indices}")
                return HereditaryResult(False, predicate, indices, verdict)
    return HereditaryResult(True, predicate)


# ---------------------------------------------------------------------------
# Famille f^(k)
# ---------------------------------------------------------------------------

def is_weakly_F_closed(point_set: PointSet, k_max: int) -> CheckResult:
    """
    Fermeture faible sous f^(k) pour tout 2 <= k <= k_max

    La famille complète est infinie; l'implication "fermé => 2-décomposable"
    n'utilise que f^(n), d'où l'exigence k_max >= n. Le coût est
    |S|^C(k,2) tuples pour chaque k.

    Raises:
        DimensionMismatchError: dimension < 2
        InvalidIndexError: k_max < n
        BudgetExceededError: |S|^C(k,2) dépasse BUDGET_CONFIG['max_f_tuples']
    """
    dim = point_set.dim
    if dim < 2:
        raise DimensionMismatchError("La famille f^(k) exige une dimension >= 2")
    if k_max < dim:
        raise InvalidIndexError(f"k_max={k_max} doit être >= n={dim}")
    budget = BUDGET_CONFIG['max_f_tuples']
    for k in range(2, k_max + 1):
        bound = len(point_set) ** comb(k, 2)
        if bound > budget:
            logger.warning(f"⚠️ f^({k}) refusée: {bound} tuples à énumérer")
            raise BudgetExceededError(f"f^({k})", bound, budget)
        result = is_weakly_closed(point_set, fk_op(k), budget=budget)
        if not result:
            return result
    return CLOSED
