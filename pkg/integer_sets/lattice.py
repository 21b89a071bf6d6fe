"""
📦 Boîtes Entières et Énumération Filtrée
=========================================

Boîtes entières finies et énumération des points entiers d'une boîte
avec élagage par préfixe: une contrainte est testée dès que toutes les
coordonnées qu'elle lit sont fixées.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from config import BUDGET_CONFIG

from .core_types import Point, PointSet, bounding_box
from .errors import BudgetExceededError, DimensionMismatchError, InputFormatError

logger = logging.getLogger(__name__)

# Contrainte sur un préfixe de coordonnées (tuple de longueur >= niveau)
PrefixCheck = Callable[[Tuple[int, ...]], bool]


@dataclass(frozen=True)
class Box:
    """Produit d'intervalles entiers [lower_k, upper_k]"""
    lower: Point
    upper: Point

    def __post_init__(self):
        if self.lower.dim != self.upper.dim:
            raise DimensionMismatchError("Bornes de boîte de dimensions différentes")

    @classmethod
    def of_set(cls, point_set: PointSet) -> 'Box':
        lower, upper = bounding_box(point_set)
        return cls(lower, upper)

    @classmethod
    def from_bounds(cls, bounds: Sequence[Tuple[int, int]]) -> 'Box':
        return cls(Point(tuple(lo for lo, _ in bounds)), Point(tuple(hi for _, hi in bounds)))

    @classmethod
    def parse(cls, text: str) -> 'Box':
        """Lit une boîte au format "l1:u1,l2:u2,..." """
        bounds = []
        try:
            for chunk in text.split(','):
                low, high = chunk.split(':')
                bounds.append((int(low), int(high)))
        except ValueError as e:
            raise InputFormatError(f"Boîte invalide '{text}': attendu 'l1:u1,...,ln:un'") from e
        if not bounds:
            raise InputFormatError(f"Boîte vide '{text}'")
        return cls.from_bounds(bounds)

    @property
    def dim(self) -> int:
        return self.lower.dim

    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in zip(self.lower, self.upper))

    def volume(self) -> int:
        if self.is_empty():
            return 0
        return prod(hi - lo + 1 for lo, hi in zip(self.lower, self.upper))

    def contains(self, point: Point) -> bool:
        return all(lo <= c <= hi for lo, c, hi in zip(self.lower, point, self.upper))

    def padded(self, margin: int = 1) -> 'Box':
        return Box(Point(tuple(c - margin for c in self.lower)), Point(tuple(c + margin for c in self.upper)))

    def ranges(self) -> List[range]:
        return [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]

    def iter_points(self) -> Iterator[Point]:
        """Points de la boîte dans l'ordre lexicographique"""
        for coords in product(*self.ranges()):
            yield Point(coords)

    def to_text(self) -> str:
        return ','.join(f"{lo}:{hi}" for lo, hi in zip(self.lower, self.upper))

    def __repr__(self) -> str:
        return f"Box[{self.to_text()}]"


def check_box_budget(box: Box, what: str, budget: Optional[int] = None):
    """Refuse une boîte dont le volume dépasse le budget configuré"""
    budget = BUDGET_CONFIG['max_box_points'] if budget is None else budget
    volume = box.volume()
    if volume > budget:
        logger.warning(f"⚠️ Boîte trop grande pour {what}: {volume} points")
        raise BudgetExceededError(what, volume, budget)


def enumerate_filtered(box: Box,
                       checks: Dict[int, List[PrefixCheck]],
                       what: str = "énumération",
                       budget: Optional[int] = None) -> List[Point]:
    """
    Énumère les points entiers de la boîte qui passent toutes les contraintes

    Args:
        box: Boîte finie
        checks: Contraintes groupées par niveau (1-based): une contrainte de
            niveau k ne lit que les k premières coordonnées
        what: Libellé pour les messages de budget
        budget: Volume maximal accepté (défaut: BUDGET_CONFIG)

    Returns:
        Points retenus, triés lexicographiquement
    """
    if box.is_empty():
        return []
    check_box_budget(box, what, budget)

    ranges = box.ranges()
    dim = box.dim
    found: List[Point] = []
    prefix: List[int] = []

    def descend(level: int):
        if level == dim:
            found.append(Point(tuple(prefix)))
            return
        level_checks = checks.get(level + 1, ())
        for value in ranges[level]:
            prefix.append(value)
            current = tuple(prefix)
            if all(check(current) for check in level_checks):
                descend(level + 1)
            prefix.pop()

    descend(0)
    logger.debug(f"🔍 {what}: {len(found)} point(s) retenus sur {box.volume()}")
    return found
