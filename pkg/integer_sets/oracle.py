"""
🧪 Oracles de Référence
=======================

Références naïves indépendantes des chemins optimisés, et générateurs
d'instances aléatoires reproductibles (graine explicite).
"""

import logging
from itertools import product
from typing import Iterable, List

import numpy as np

from .closure_engine import closure_under
from .core_types import Inequality, LinearSystem, Point, PointSet
from .errors import IntegerSetError, UnboundedOperationError
from .lattice import Box
from .operations import TotalOp

logger = logging.getLogger(__name__)


def naive_closure(point_set: PointSet, ops: Iterable[TotalOp], box: Box) -> PointSet:
    """
    Saturation par balayages complets, sans optimisation

    Chaque tour réapplique toutes les opérations à tous les tuples de
    l'ensemble courant, jusqu'à ce qu'un tour n'ajoute rien.

    Raises:
        UnboundedOperationError: un point produit sort de la boîte
    """
    ops = list(ops)
    current = set(point_set.points)
    changed = True
    while changed:
        changed = False
        snapshot = list(current)
        for op in ops:
            for args in product(snapshot, repeat=op.arity):
                image = Point(tuple(op.func(*column) for column in zip(*args)))
                if image in current:
                    continue
                if not box.contains(image):
                    raise UnboundedOperationError(op.name, image, box)
                current.add(image)
                changed = True
    return PointSet(point_set.dim, frozenset(current))


def _decode(index: int, box: Box) -> Point:
    """Décodage en base mixte d'un indice de la boîte (ordre lexicographique)"""
    coords = []
    for lo, hi in reversed(list(zip(box.lower, box.upper))):
        side = hi - lo + 1
        index, offset = divmod(index, side)
        coords.append(lo + offset)
    return Point(tuple(reversed(coords)))


def random_set(dim: int, box: Box, size: int, seed: int) -> PointSet:
    """
    Sous-ensemble pseudo-aléatoire de taille size de la boîte, déterministe pour une graine

    Raises:
        IntegerSetError: taille supérieure au volume de la boîte
    """
    if box.dim != dim:
        raise IntegerSetError(f"Boîte de dimension {box.dim} pour la dimension {dim}")
    volume = box.volume()
    if size < 0 or size > volume:
        raise IntegerSetError(f"Impossible de tirer {size} points dans une boîte de {volume} points")
    rng = np.random.default_rng(seed)
    indices = rng.choice(volume, size=size, replace=False)
    return PointSet(dim, frozenset(_decode(int(i), box) for i in indices))


def closed_random_set(dim: int, box: Box, size: int, seed: int, ops: Iterable[TotalOp]) -> PointSet:
    """Fermeture sous ops d'un ensemble aléatoire: fermé par construction et contenu dans la boîte"""
    ops = list(ops)
    base = random_set(dim, box, size, seed)
    if not ops or base.is_empty():
        return base
    return closure_under(base, ops).closed_set


def random_box(dim: int, side: int, low: int = 0) -> Box:
    return Box(Point((low,) * dim), Point((low + side - 1,) * dim))


def random_utvpi_system(dim: int, box: Box, rows: int, seed: int) -> LinearSystem:
    """
    Système UTVPI aléatoire non vide: bornes de la boîte plus des lignes
    ±x_i ±x_j >= b satisfaites par un point tiré dans la boîte
    """
    rng = np.random.default_rng(seed)
    anchor = [int(rng.integers(lo, hi + 1)) for lo, hi in zip(box.lower, box.upper)]
    result: List[Inequality] = []
    for k in range(dim):
        for sign, bound in ((1, box.lower[k]), (-1, -box.upper[k])):
            coeffs = [0] * dim
            coeffs[k] = sign
            result.append(Inequality.tagged(coeffs, bound))
    for _ in range(rows):
        coeffs = [0] * dim
        if dim >= 2 and rng.random() < 0.8:
            i, j = (int(v) for v in rng.choice(dim, size=2, replace=False))
            coeffs[i] = int(rng.choice([-1, 1]))
            coeffs[j] = int(rng.choice([-1, 1]))
        else:
            coeffs[int(rng.integers(0, dim))] = int(rng.choice([-1, 1]))
        value = sum(c * a for c, a in zip(coeffs, anchor))
        result.append(Inequality.tagged(coeffs, value - int(rng.integers(0, 3))))
    return LinearSystem(dim, tuple(result))
