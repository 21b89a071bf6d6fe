"""
⚙️ Opérations sur Z et Tests de Fermeture
=========================================

Opérations totales (median, μ, milieux arrondis), opérations partielles
(majorité partielle, famille f^(k)), familles par coordonnée, et
vérificateurs de fermeture produisant des témoins.

Tous les tests énumèrent les tuples avec répétition dans l'ordre
lexicographique des points triés: le témoin renvoyé est toujours le plus
petit tuple fautif.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from config import BUDGET_CONFIG

from .core_types import IndexPair, Point, PointSet
from .errors import BudgetExceededError, DimensionMismatchError, InvalidIndexError, UnknownNameError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Opérations scalaires
# ---------------------------------------------------------------------------

def median_op(a: int, b: int, c: int) -> int:
    """Valeur médiane du triplet"""
    return sorted((a, b, c))[1]


def ceil_mid(a: int, b: int) -> int:
    """g(a, b) = ⌈(a+b)/2⌉"""
    return -((-(a + b)) // 2)


def floor_mid(a: int, b: int) -> int:
    """h(a, b) = ⌊(a+b)/2⌋"""
    return (a + b) // 2


def mu_op(a: int, b: int) -> int:
    """Milieu discret orienté: arrondi vers le premier argument"""
    return ceil_mid(a, b) if a >= b else floor_mid(a, b)


def maj_p_eval(a: int, b: int, c: int) -> Optional[int]:
    """Majorité partielle: valeur répétée, None si les trois valeurs sont distinctes"""
    if a == b or a == c:
        return a
    if b == c:
        return b
    return None


def mu_ceil_mutant(a: int, b: int) -> int:
    """Variante fautive de μ (arrondi vers le haut dans les deux cas), pour les tests de mutation"""
    return ceil_mid(a, b)


def fk_pairs(k: int) -> List[IndexPair]:
    """T_k: paires de [k] dans l'ordre lexicographique"""
    if k < 2:
        raise InvalidIndexError(f"f^(k) exige k >= 2 (reçu {k})")
    return IndexPair.all_pairs(k)


def _normalize_fk_args(k: int, args: Mapping[Any, int]) -> Dict[Tuple[int, int], int]:
    expected = {pair.as_tuple() for pair in fk_pairs(k)}
    normalized = {}
    for key, value in args.items():
        if isinstance(key, IndexPair):
            key = key.as_tuple()
        else:
            key = tuple(sorted(key))
        normalized[key] = value
    if set(normalized) != expected:
        raise InvalidIndexError(
            f"f^({k}) attend exactement les {len(expected)} paires de T_{k}, reçu {sorted(normalized)}"
        )
    return normalized


def fk_eval(k: int, args: Mapping[Any, int]) -> Optional[int]:
    """
    Évalue f^(k) sur une affectation des paires de T_k

    Renvoie d si les valeurs sont constantes égales à d sur une étoile
    S_l = {{l, m} : m != l}, sinon None. Deux étoiles partagent toujours une
    paire, donc d est unique.

    Args:
        k: Entier >= 2
        args: Valeur par paire (clés IndexPair ou couples (i, j))

    Raises:
        InvalidIndexError: si les clés ne sont pas exactement T_k
    """
    values = _normalize_fk_args(k, args)
    for center in range(1, k + 1):
        star = [values[tuple(sorted((center, other)))] for other in range(1, k + 1) if other != center]
        if all(v == star[0] for v in star):
            return star[0]
    return None


# ---------------------------------------------------------------------------
# Définitions d'opérations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TotalOp:
    """
    Opération totale Z^arity -> Z

    bounded: l'image reste entre le min et le max des arguments
    symmetric: invariante par permutation des arguments
    majority: renvoie l'argument répété dès que deux arguments coïncident
    """
    name: str
    arity: int
    func: Callable[..., int] = field(compare=False)
    bounded: bool = True
    symmetric: bool = False
    majority: bool = False

    def __call__(self, *args: int) -> int:
        return self.func(*args)


@dataclass(frozen=True)
class PartialOp:
    """Opération partielle: func renvoie None hors du domaine"""
    name: str
    arity: int
    func: Callable[..., Optional[int]] = field(compare=False)
    symmetric: bool = False
    majority: bool = False

    def __call__(self, *args: int) -> Optional[int]:
        return self.func(*args)


@dataclass(frozen=True)
class CoordinateFamily:
    """Une opération totale par coordonnée, toutes de même arité"""
    dim: int
    ops: Tuple[TotalOp, ...]

    def __post_init__(self):
        ops = tuple(self.ops)
        if len(ops) != self.dim:
            raise DimensionMismatchError(f"Famille de {len(ops)} opérations pour la dimension {self.dim}")
        if len({op.arity for op in ops}) > 1:
            raise DimensionMismatchError("Les opérations d'une famille doivent avoir la même arité")
        object.__setattr__(self, 'ops', ops)

    @classmethod
    def uniform(cls, op: TotalOp, dim: int) -> 'CoordinateFamily':
        return cls(dim, tuple(op for _ in range(dim)))

    @property
    def arity(self) -> int:
        return self.ops[0].arity if self.ops else 0

    @property
    def name(self) -> str:
        return '(' + ','.join(op.name for op in self.ops) + ')'


MEDIAN = TotalOp('median', 3, median_op, symmetric=True, majority=True)
MU = TotalOp('mu', 2, mu_op)
CEIL_MID = TotalOp('ceil-mid', 2, ceil_mid, symmetric=True)
FLOOR_MID = TotalOp('floor-mid', 2, floor_mid, symmetric=True)
MAJ_P = PartialOp('maj-p', 3, maj_p_eval, symmetric=True, majority=True)
MU_CEIL_MUTANT = TotalOp('mu', 2, mu_ceil_mutant)


def minimum_op(arity: int) -> TotalOp:
    return TotalOp(f'min{arity}', arity, lambda *args: min(args), symmetric=True)


def maximum_op(arity: int) -> TotalOp:
    return TotalOp(f'max{arity}', arity, lambda *args: max(args), symmetric=True)


def fk_op(k: int) -> PartialOp:
    """f^(k) comme opération partielle d'arité C(k,2), arguments dans l'ordre de T_k"""
    pairs = [pair.as_tuple() for pair in fk_pairs(k)]

    def evaluate(*args: int) -> Optional[int]:
        return fk_eval(k, dict(zip(pairs, args)))

    return PartialOp(f'fk:{k}', len(pairs), evaluate)


OperationSpec = Union[TotalOp, PartialOp]

_BUILTIN_OPERATIONS: Dict[str, OperationSpec] = {
    'median': MEDIAN,
    'mu': MU,
    'ceil-mid': CEIL_MID,
    'floor-mid': FLOOR_MID,
    'maj-p': MAJ_P,
}


def operation_by_name(name: str) -> OperationSpec:
    """Résout un nom CLI ("median", "mu", "ceil-mid", "floor-mid", "maj-p", "fk:<k>")"""
    if name in _BUILTIN_OPERATIONS:
        return _BUILTIN_OPERATIONS[name]
    if name.startswith('fk:'):
        try:
            k = int(name[3:])
        except ValueError as e:
            raise UnknownNameError(f"Opération inconnue: {name}") from e
        return fk_op(k)
    raise UnknownNameError(f"Opération inconnue: {name} (attendu: {', '.join(_BUILTIN_OPERATIONS)}, fk:<k>)")


# ---------------------------------------------------------------------------
# Témoins et résultats
# ---------------------------------------------------------------------------

class WitnessReason(Enum):
    """Nature de la violation portée par un témoin"""
    NOT_IN_SET = "not_in_set"
    NO_AGREEING_MEMBER = "no_agreeing_member"
    NEIGHBOR_NOT_IN_SET = "neighbor_not_in_set"
    MIDPOINT_NOT_IN_LOCAL_HULL = "midpoint_not_in_local_hull"
    HOLE = "hole"


@dataclass(frozen=True)
class Witness:
    """Données suffisantes pour revérifier une violation sans relancer la recherche"""
    inputs: Tuple[Point, ...]
    reason: WitnessReason
    operation: str
    produced: Optional[Point] = None
    partial_image: Optional[Tuple[Optional[int], ...]] = None
    midpoint: Optional[Tuple[Fraction, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'operation': self.operation,
            'reason': self.reason.value,
            'inputs': [p.to_list() for p in self.inputs],
            'produced': self.produced.to_list() if self.produced is not None else None,
        }
        if self.partial_image is not None:
            data['partial_image'] = list(self.partial_image)
        if self.midpoint is not None:
            data['midpoint'] = [str(c) for c in self.midpoint]
        return data


@dataclass(frozen=True)
class CheckResult:
    """Verdict d'un test de propriété, avec témoin en cas d'échec"""
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'witness': self.witness.to_dict() if self.witness is not None else None,
        }


CLOSED = CheckResult(True)


# ---------------------------------------------------------------------------
# Application et énumération des tuples
# ---------------------------------------------------------------------------

def apply_componentwise(op: TotalOp, args: Sequence[Point]) -> Point:
    """Applique op coordonnée par coordonnée"""
    _check_args(op.arity, args)
    return Point(tuple(op.func(*column) for column in zip(*args)))


def apply_partial(op: PartialOp, args: Sequence[Point]) -> Tuple[Optional[int], ...]:
    """Image partielle: None aux coordonnées où op n'est pas définie"""
    _check_args(op.arity, args)
    return tuple(op.func(*column) for column in zip(*args))


def apply_family(family: CoordinateFamily, args: Sequence[Point]) -> Point:
    _check_args(family.arity, args)
    if args and args[0].dim != family.dim:
        raise DimensionMismatchError(f"Famille de dimension {family.dim} appliquée à des points de dimension {args[0].dim}")
    return Point(tuple(op.func(*column) for op, column in zip(family.ops, zip(*args))))


def _check_args(arity: int, args: Sequence[Point]):
    if len(args) != arity:
        raise DimensionMismatchError(f"Arité {arity} attendue, {len(args)} argument(s) reçu(s)")
    if len({p.dim for p in args}) > 1:
        raise DimensionMismatchError("Arguments de dimensions différentes")


def tuple_count(size: int, arity: int, symmetric: bool = False, majority: bool = False) -> int:
    if majority:
        return comb(size, arity)
    if symmetric:
        return comb(size + arity - 1, arity)
    return size ** arity


def candidate_tuples(point_set: PointSet, arity: int, symmetric: bool = False,
                     majority: bool = False, what: str = "tuples",
                     budget: Optional[int] = None) -> Iterator[Tuple[Point, ...]]:
    """
    Tuples à tester, dans l'ordre lexicographique

    Une opération symétrique ne nécessite que les tuples triés; une opération
    de majorité envoie tout tuple avec répétition sur un de ses arguments,
    seuls les tuples de points distincts restent. Dans les deux cas le plus
    petit tuple fautif est trié, donc le témoin reste le minimum lexicographique.
    """
    budget = BUDGET_CONFIG['max_enumeration'] if budget is None else budget
    count = tuple_count(len(point_set), arity, symmetric, majority)
    if count > budget:
        logger.warning(f"⚠️ Énumération refusée ({what}): {count} tuples")
        raise BudgetExceededError(what, count, budget)
    points = point_set.ordered
    if majority:
        return combinations(points, arity)
    if symmetric:
        return combinations_with_replacement(points, arity)
    return product(points, repeat=arity)


# ---------------------------------------------------------------------------
# Tests de fermeture
# ---------------------------------------------------------------------------

def is_closed(point_set: PointSet, op: TotalOp) -> CheckResult:
    """
    Vrai ssi tout tuple de S (avec répétition) a son image dans S

    Vacuement vrai sur l'ensemble vide. En cas d'échec, le témoin porte le
    plus petit tuple fautif et son image.
    """
    for args in candidate_tuples(point_set, op.arity, op.symmetric, op.majority, f"fermeture {op.name}"):
        image = apply_componentwise(op, args)
        if image not in point_set.points:
            logger.debug(f"❌ {op.name}{args} = {image} hors de l'ensemble")
            return CheckResult(False, Witness(args, WitnessReason.NOT_IN_SET, op.name, produced=image))
    return CLOSED


def is_closed_under_all(point_set: PointSet, ops: Iterable[TotalOp]) -> CheckResult:
    """Fermeture simultanée; le témoin vient de la première opération fautive"""
    for op in ops:
        result = is_closed(point_set, op)
        if not result:
            return result
    return CLOSED


def is_weakly_closed(point_set: PointSet, op: PartialOp, budget: Optional[int] = None) -> CheckResult:
    """Les tuples dont l'image est définie sur toutes les coordonnées restent dans S"""
    for args in candidate_tuples(point_set, op.arity, op.symmetric, op.majority,
                                 f"fermeture faible {op.name}", budget):
        image = apply_partial(op, args)
        if any(v is None for v in image):
            continue
        produced = Point(image)
        if produced not in point_set.points:
            return CheckResult(False, Witness(args, WitnessReason.NOT_IN_SET, op.name,
                                              produced=produced, partial_image=image))
    return CLOSED


def _agrees(point: Point, image: Tuple[Optional[int], ...]) -> bool:
    return all(v is None or c == v for c, v in zip(point, image))


def is_strongly_closed(point_set: PointSet, op: PartialOp) -> CheckResult:
    """Pour tout tuple, un membre de S coïncide avec l'image partielle aux coordonnées définies"""
    for args in candidate_tuples(point_set, op.arity, op.symmetric, op.majority, f"fermeture forte {op.name}"):
        image = apply_partial(op, args)
        if any(_agrees(member, image) for member in point_set.ordered):
            continue
        produced = Point(image) if all(v is not None for v in image) else None
        return CheckResult(False, Witness(args, WitnessReason.NO_AGREEING_MEMBER, op.name,
                                          produced=produced, partial_image=image))
    return CLOSED


def is_closed_family(point_set: PointSet, family: CoordinateFamily) -> CheckResult:
    """Fermeture sous (f_i): la i-ème coordonnée de l'image est f_i des i-èmes coordonnées"""
    if family.dim != point_set.dim:
        raise DimensionMismatchError(f"Famille de dimension {family.dim} pour un ensemble de dimension {point_set.dim}")
    symmetric = all(op.symmetric for op in family.ops)
    majority = all(op.majority for op in family.ops)
    for args in candidate_tuples(point_set, family.arity, symmetric, majority, f"famille {family.name}"):
        image = apply_family(family, args)
        if image not in point_set.points:
            return CheckResult(False, Witness(args, WitnessReason.NOT_IN_SET, family.name, produced=image))
    return CLOSED
