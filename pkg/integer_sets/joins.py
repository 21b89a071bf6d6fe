"""
🔗 Projections et Jointures
===========================

Projection d'un ensemble sur un sous-ensemble d'indices et jointure de
parties 2-D indexées par les paires {i, j}.
"""

import logging
from typing import Dict, Mapping, Optional, Sequence

from .core_types import IndexPair, Point, PointSet
from .errors import DimensionMismatchError, InvalidIndexError
from .lattice import Box, enumerate_filtered

logger = logging.getLogger(__name__)


def _check_indices(indices: Sequence[int], dim: int):
    if not indices:
        raise InvalidIndexError("Ensemble d'indices vide")
    if any(not isinstance(i, int) or isinstance(i, bool) for i in indices):
        raise InvalidIndexError(f"Indices non entiers: {indices}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise InvalidIndexError(f"Indices non strictement croissants: {list(indices)}")
    if indices[0] < 1 or indices[-1] > dim:
        raise InvalidIndexError(f"Indices {list(indices)} hors de [1, {dim}]")


def project(point_set: PointSet, indices: Sequence[int]) -> PointSet:
    """
    Projection π_I(S) sur des indices 1-based strictement croissants

    Raises:
        InvalidIndexError: indices vides, non croissants ou hors bornes
    """
    indices = tuple(indices)
    _check_indices(indices, point_set.dim)
    return PointSet(len(indices), frozenset(p.restrict(indices) for p in point_set.points))


def pairwise_projections(point_set: PointSet) -> Dict[IndexPair, PointSet]:
    """Projections π_{i,j}(S) pour toutes les paires, dans l'ordre lexicographique"""
    if point_set.dim < 2:
        raise DimensionMismatchError("Les projections par paires exigent une dimension >= 2")
    return {pair: project(point_set, pair.as_tuple()) for pair in IndexPair.all_pairs(point_set.dim)}


def join_box(parts: Mapping[IndexPair, PointSet], dim: int) -> Optional[Box]:
    """
    Boîte contenant toute la jointure: par coordonnée, intersection des
    intervalles de valeurs des parties qui la lisent. None si une partie est vide.
    """
    lower = [None] * dim
    upper = [None] * dim
    for pair, part in parts.items():
        if part.is_empty():
            return None
        for slot, k in enumerate(pair.as_tuple()):
            values = part.values(slot + 1)
            lo, hi = values[0], values[-1]
            lower[k - 1] = lo if lower[k - 1] is None else max(lower[k - 1], lo)
            upper[k - 1] = hi if upper[k - 1] is None else min(upper[k - 1], hi)
    return Box(Point(tuple(lower)), Point(tuple(upper)))


def join(parts: Mapping[IndexPair, PointSet], dim: int, box: Optional[Box] = None) -> PointSet:
    """
    Jointure ⋈ S_{i,j}: points entiers dont chaque projection π_{i,j} est dans S_{i,j}

    Args:
        parts: Une partie 2-D par paire de [dim]
        dim: Dimension n >= 2
        box: Boîte d'énumération (défaut: boîte déduite des parties)

    Returns:
        La jointure (vide si une partie est vide)

    Raises:
        InvalidIndexError: paire manquante ou dimension < 2
    """
    if dim < 2:
        raise InvalidIndexError("La jointure exige une dimension >= 2")
    expected = IndexPair.all_pairs(dim)
    missing = [pair for pair in expected if pair not in parts]
    if missing:
        raise InvalidIndexError(f"Paires manquantes dans la jointure: {missing}")
    for pair in expected:
        if parts[pair].dim != 2:
            raise DimensionMismatchError(f"La partie {pair} doit être de dimension 2")

    if box is None:
        box = join_box(parts, dim)
        if box is None:
            return PointSet.empty(dim)

    checks = {}
    for pair in expected:
        allowed = frozenset(p.coords for p in parts[pair].points)
        i, j = pair.i - 1, pair.j - 1
        checks.setdefault(pair.j, []).append(
            lambda prefix, allowed=allowed, i=i, j=j: (prefix[i], prefix[j]) in allowed
        )
    points = enumerate_filtered(box, checks, what="jointure")
    return PointSet(dim, frozenset(points))


def join_of_projections(point_set: PointSet) -> PointSet:
    """⋈ π_{i,j}(S), toujours un sur-ensemble de S"""
    return join(pairwise_projections(point_set), point_set.dim)
