"""
🔒 Moteur de Fermetures
=======================

Fermetures d'ensembles finis de points entiers:
- cl_f par balayages jusqu'au point fixe (opérations bornées coordonnée par coordonnée)
- fermetures SVPI / DC / UTVPI par resserrement des inégalités de chaque direction
- enveloppe entière 2-D exacte (chaîne monotone) et fermeture TVPI par jointure

Toutes les fermetures restent dans la boîte englobante de l'ensemble d'entrée.
"""

import logging
import time
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from config import BUDGET_CONFIG

from .closure_cache import ClosureCache
from .core_types import Inequality, IndexPair, Point, PointSet, require_nonempty
from .errors import DimensionMismatchError, UnboundedOperationError, UnknownNameError
from .joins import join, pairwise_projections
from .lattice import Box, check_box_budget, enumerate_filtered
from .operations import CEIL_MID, FLOOR_MID, MEDIAN, MU, TotalOp, apply_componentwise

logger = logging.getLogger(__name__)

_closure_cache = ClosureCache(BUDGET_CONFIG['closure_cache_size'])


def get_closure_cache() -> ClosureCache:
    return _closure_cache


@dataclass(frozen=True)
class ClosureResult:
    """Ensemble fermé obtenu, nombre de balayages et points ajoutés"""
    closed_set: PointSet
    iterations: int
    generators_added: int

    def to_dict(self) -> Dict:
        return {
            'iterations': self.iterations,
            'generators_added': self.generators_added,
            'size': len(self.closed_set),
        }


# ---------------------------------------------------------------------------
# Fermeture sous des opérations
# ---------------------------------------------------------------------------

def _tuples_touching(old: Sequence[Point], delta: Sequence[Point], arity: int):
    """
    Tuples de (old ∪ delta) contenant au moins un point de delta, chacun une seule fois:
    la position p est la première occupée par un point de delta.
    """
    current = list(old) + list(delta)

    def fill(prefix: Tuple[Point, ...], position: int, first_delta: int):
        if position == arity:
            yield prefix
            return
        if position < first_delta:
            pool = old
        elif position == first_delta:
            pool = delta
        else:
            pool = current
        for point in pool:
            yield from fill(prefix + (point,), position + 1, first_delta)

    for first_delta in range(arity):
        yield from fill((), 0, first_delta)


def closure_under(point_set: PointSet, ops: Iterable[TotalOp]) -> ClosureResult:
    """
    Plus petit sur-ensemble de S fermé sous toutes les opérations

    Balayages semi-naïfs: chaque balayage n'évalue que les tuples contenant au
    moins un point ajouté au balayage précédent.

    Raises:
        EmptySetError: S vide
        UnboundedOperationError: un point produit sort de la boîte englobante
    """
    require_nonempty(point_set, "closure_under")
    ops = list(ops)
    start = time.time()
    box = Box.of_set(point_set)
    for op in ops:
        if not op.bounded:
            logger.warning(f"⚠️ Opération non bornée {op.name}: la fermeture peut sortir de la boîte englobante")

    known = set(point_set.points)
    old: List[Point] = []
    delta: List[Point] = sorted(known)
    iterations = 0

    while delta:
        iterations += 1
        produced = set()
        for op in ops:
            for args in _tuples_touching(old, delta, op.arity):
                image = apply_componentwise(op, args)
                if image in known or image in produced:
                    continue
                if not box.contains(image):
                    logger.error(f"❌ {op.name}{args} = {image} sort de {box}")
                    raise UnboundedOperationError(op.name, image, box)
                produced.add(image)
        old = old + delta
        delta = sorted(produced)
        known.update(produced)

    closed = PointSet(point_set.dim, frozenset(known))
    added = len(closed) - len(point_set)
    logger.debug(
        f"🔍 Fermeture {[op.name for op in ops]}: {iterations} balayage(s), "
        f"{added} point(s) ajouté(s) en {time.time() - start:.3f}s"
    )
    return ClosureResult(closed, iterations, added)


# ---------------------------------------------------------------------------
# Fermetures par classes d'inégalités
# ---------------------------------------------------------------------------

def _pair_range(point_set: PointSet, i: int, j: int, sign: int) -> Tuple[int, int]:
    values = [p[i - 1] + sign * p[j - 1] for p in point_set.points]
    return min(values), max(values)


def _filtered_closure(point_set: PointSet, with_sums: bool, what: str) -> PointSet:
    """Points de la boîte satisfaisant les encadrements resserrés de x_i - x_j (et x_i + x_j)"""
    require_nonempty(point_set, what)
    box = Box.of_set(point_set)
    checks: Dict[int, List] = {}
    for pair in IndexPair.all_pairs(point_set.dim):
        signs = (-1, 1) if with_sums else (-1,)
        for sign in signs:
            lo, hi = _pair_range(point_set, pair.i, pair.j, sign)
            i, j = pair.i - 1, pair.j - 1
            checks.setdefault(pair.j, []).append(
                lambda prefix, i=i, j=j, sign=sign, lo=lo, hi=hi: lo <= prefix[i] + sign * prefix[j] <= hi
            )
    return PointSet(point_set.dim, frozenset(enumerate_filtered(box, checks, what=what)))


def svpi_closure(point_set: PointSet) -> PointSet:
    """Boîte entière ∏[min_k, max_k]"""
    require_nonempty(point_set, "svpi_closure")
    box = Box.of_set(point_set)
    check_box_budget(box, "svpi_closure")
    return PointSet(point_set.dim, frozenset(box.iter_points()))


def dc_closure(point_set: PointSet) -> PointSet:
    """Solutions entières du système DC le plus serré: bornes et min_S(s_i - s_j) <= x_i - x_j"""
    return _filtered_closure(point_set, with_sums=False, what="dc_closure")


def utvpi_closure(point_set: PointSet) -> PointSet:
    """Solutions entières des inégalités ±x_i ±x_j >= min_S et ±x_k >= min_S"""
    return _filtered_closure(point_set, with_sums=True, what="utvpi_closure")


# ---------------------------------------------------------------------------
# Enveloppe entière 2-D
# ---------------------------------------------------------------------------

def _cross(o: Tuple[int, int], a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_vertices(points: Iterable[Sequence[int]]) -> List[Tuple[int, int]]:
    """
    Sommets de l'enveloppe convexe, sens horaire, sans points alignés

    Chaîne monotone sur les points triés, en arithmétique entière.
    """
    points = sorted(set(tuple(p) for p in points))
    if len(points) <= 1:
        return points
    upper: List[Tuple[int, int]] = []
    for p in points:
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) >= 0:
            upper.pop()
        upper.append(p)
    lower: List[Tuple[int, int]] = []
    for p in reversed(points):
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) >= 0:
            lower.pop()
        lower.append(p)
    return upper + lower[1:-1]


def _normalized(a1: int, a2: int, rhs: int) -> Inequality:
    divisor = gcd(gcd(abs(a1), abs(a2)), abs(rhs)) or 1
    return Inequality.tagged((a1 // divisor, a2 // divisor), rhs // divisor)


def hull_inequalities(point_set: PointSet) -> List[Inequality]:
    """
    Inégalités a·x >= b décrivant exactement l'enveloppe convexe d'un ensemble 2-D

    Polygone: une inégalité par arête. Segment ou point: égalités de la droite
    support encadrées par les bornes de la boîte. Coefficients entiers divisés
    par leur pgcd.

    Raises:
        DimensionMismatchError: dimension différente de 2
        EmptySetError: ensemble vide
    """
    if point_set.dim != 2:
        raise DimensionMismatchError("L'enveloppe entière par paires exige la dimension 2")
    require_nonempty(point_set, "hull_inequalities")
    hull = convex_hull_vertices(point_set.points)

    rows: List[Inequality] = []
    if len(hull) >= 3:
        for k, v0 in enumerate(hull):
            v1 = hull[(k + 1) % len(hull)]
            a1 = v1[1] - v0[1]
            a2 = -(v1[0] - v0[0])
            rows.append(_normalized(a1, a2, a1 * v0[0] + a2 * v0[1]))
        return rows

    lower, upper = point_set.bounding_box()
    if len(hull) == 2:
        (x0, y0), (x1, y1) = hull
        a1, a2 = y1 - y0, -(x1 - x0)
        rhs = a1 * x0 + a2 * y0
        if a1 != 0 and a2 != 0:
            rows.append(_normalized(a1, a2, rhs))
            rows.append(_normalized(-a1, -a2, -rhs))
    for k in range(2):
        unit = [0, 0]
        unit[k] = 1
        rows.append(Inequality.tagged(tuple(unit), lower[k]))
        unit[k] = -1
        rows.append(Inequality.tagged(tuple(unit), -upper[k]))
    return rows


def pairwise_integer_hull(point_set: PointSet) -> PointSet:
    """conv(S2) ∩ Z^2 par énumération de la boîte et test exact des facettes"""
    rows = hull_inequalities(point_set)
    box = Box.of_set(point_set)
    checks = {2: [lambda prefix, rows=rows: all(row.is_satisfied(prefix) for row in rows)]}
    return PointSet(2, frozenset(enumerate_filtered(box, checks, what="enveloppe 2-D")))


def tvpi_closure(point_set: PointSet) -> PointSet:
    """Jointure des enveloppes entières des projections par paires"""
    require_nonempty(point_set, "tvpi_closure")
    if point_set.dim < 2:
        raise DimensionMismatchError("La fermeture TVPI exige une dimension >= 2")
    hulls = {pair: pairwise_integer_hull(part) for pair, part in pairwise_projections(point_set).items()}
    return join(hulls, point_set.dim, Box.of_set(point_set))


# ---------------------------------------------------------------------------
# Aiguillage
# ---------------------------------------------------------------------------

_CLASS_CLOSURES = {
    'svpi': svpi_closure,
    'dc': dc_closure,
    'utvpi': utvpi_closure,
    'tvpi': tvpi_closure,
}

_OPERATION_CLOSURES = {
    'op:mu': (MU,),
    'op:median': (MEDIAN,),
    'op:gh': (CEIL_MID, FLOOR_MID),
}


def class_closure(point_set: PointSet, cls: str, use_cache: bool = True) -> PointSet:
    """
    Fermeture de classe ("svpi", "dc", "utvpi", "tvpi"), mémorisée dans le cache

    Raises:
        UnknownNameError: classe inconnue
    """
    key = cls.lower()
    if key not in _CLASS_CLOSURES:
        raise UnknownNameError(f"Classe inconnue: {cls} (attendu: {', '.join(_CLASS_CLOSURES)})")
    if not use_cache:
        return _CLASS_CLOSURES[key](point_set)
    cache_key = _closure_cache.get_cache_key(key, point_set)
    cached = _closure_cache.get(cache_key)
    if cached is not None:
        return cached
    closed = _CLASS_CLOSURES[key](point_set)
    _closure_cache.set(cache_key, closed)
    return closed


def closure_by_kind(point_set: PointSet, kind: str) -> ClosureResult:
    """Fermeture nommée comme dans la CLI: op:mu, op:median, op:gh, svpi, dc, utvpi, tvpi"""
    if kind in _OPERATION_CLOSURES:
        return closure_under(point_set, _OPERATION_CLOSURES[kind])
    if kind in _CLASS_CLOSURES:
        closed = class_closure(point_set, kind)
        return ClosureResult(closed, 1, len(closed) - len(point_set))
    raise UnknownNameError(
        f"Type de fermeture inconnu: {kind} (attendu: {', '.join(list(_OPERATION_CLOSURES) + list(_CLASS_CLOSURES))})"
    )
