"""
🧱 Types de Base - Arithmétique Exacte
======================================

Types immuables partagés par tous les modules: points entiers, points
rationnels, ensembles de points, inégalités, systèmes linéaires et paires
d'indices. Aucune valeur flottante: entiers Python et fractions exactes.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import DimensionMismatchError, EmptySetError, InputFormatError, InvalidIndexError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction, str]


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"Coordonnée non entière {value!r} ({where})")
    return value


@dataclass(frozen=True, order=True)
class Point:
    """Vecteur de Z^n (n >= 1), comparé coordonnée par coordonnée"""
    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(_as_int(c, 'Point') for c in self.coords)
        if not coords:
            raise DimensionMismatchError("Un point doit avoir au moins une coordonnée")
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, *coords: int) -> 'Point':
        return cls(tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def restrict(self, indices: Sequence[int]) -> 'Point':
        """Projection sur des indices 1-based"""
        return Point(tuple(self.coords[i - 1] for i in indices))

    def chebyshev_distance(self, other: 'Point') -> int:
        return max(abs(a - b) for a, b in zip(self.coords, other.coords))

    def to_list(self) -> List[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return f"({', '.join(str(c) for c in self.coords)})"


@dataclass(frozen=True)
class RationalPoint:
    """Vecteur de rationnels exacts (milieux, requêtes d'enveloppe)"""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not coords:
            raise DimensionMismatchError("Un point rationnel doit avoir au moins une coordonnée")
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def midpoint(cls, x: Point, y: Point) -> 'RationalPoint':
        if x.dim != y.dim:
            raise DimensionMismatchError(f"Dimensions {x.dim} et {y.dim} incompatibles")
        return cls(tuple(Fraction(a + b, 2) for a, b in zip(x, y)))

    @classmethod
    def from_point(cls, point: Point) -> 'RationalPoint':
        return cls(tuple(Fraction(c) for c in point))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_point(self) -> Point:
        if not self.is_integral():
            raise ValueError(f"{self} n'est pas entier")
        return Point(tuple(c.numerator for c in self.coords))

    def __repr__(self) -> str:
        return f"({', '.join(str(c) for c in self.coords)})"


@dataclass(frozen=True, order=True)
class IndexPair:
    """Paire d'indices 1 <= i < j"""
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidIndexError(f"Paire d'indices invalide ({self.i}, {self.j}): il faut 1 <= i < j")

    @classmethod
    def all_pairs(cls, dim: int) -> List['IndexPair']:
        """Toutes les paires sur [dim], dans l'ordre lexicographique"""
        return [cls(i, j) for i, j in combinations(range(1, dim + 1), 2)]

    def check_within(self, dim: int):
        if self.j > dim:
            raise InvalidIndexError(f"Paire {self} hors de la dimension {dim}")

    def as_tuple(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def __repr__(self) -> str:
        return f"{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class PointSet:
    """Ensemble fini (dédupliqué, non ordonné) de points de même dimension"""
    dim: int
    points: FrozenSet[Point] = field(default_factory=frozenset)

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionMismatchError(f"Dimension invalide: {self.dim!r}")
        points = frozenset(self.points)
        for point in points:
            if point.dim != self.dim:
                raise DimensionMismatchError(
                    f"Point {point} de dimension {point.dim} dans un ensemble de dimension {self.dim}"
                )
        object.__setattr__(self, 'points', points)

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Point]) -> 'PointSet':
        return cls(dim, frozenset(points))

    @classmethod
    def empty(cls, dim: int) -> 'PointSet':
        return cls(dim, frozenset())

    @cached_property
    def ordered(self) -> Tuple[Point, ...]:
        """Points triés lexicographiquement (ordre canonique des énumérations)"""
        return tuple(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.ordered)

    def __contains__(self, point) -> bool:
        if isinstance(point, Point):
            return point in self.points
        return Point(tuple(point)) in self.points

    def is_empty(self) -> bool:
        return not self.points

    def issubset(self, other: 'PointSet') -> bool:
        return self.dim == other.dim and self.points <= other.points

    def union(self, other: 'PointSet') -> 'PointSet':
        self._check_same_dim(other)
        return PointSet(self.dim, self.points | other.points)

    def difference(self, other: 'PointSet') -> 'PointSet':
        self._check_same_dim(other)
        return PointSet(self.dim, self.points - other.points)

    def _check_same_dim(self, other: 'PointSet'):
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Dimensions {self.dim} et {other.dim} incompatibles")

    def bounding_box(self) -> Tuple[Point, Point]:
        return bounding_box(self)

    def values(self, k: int) -> List[int]:
        """Valeurs distinctes prises par la coordonnée k (1-based), triées"""
        return sorted({p[k - 1] for p in self.points})

    # Transformations (réflexions, translations)

    def translate(self, vector: Sequence[int]) -> 'PointSet':
        if len(vector) != self.dim:
            raise DimensionMismatchError(f"Vecteur de translation de longueur {len(vector)} != {self.dim}")
        return PointSet(self.dim, frozenset(
            Point(tuple(c + v for c, v in zip(p, vector))) for p in self.points
        ))

    def negate_coordinate(self, k: int) -> 'PointSet':
        """Réflexion par rapport à l'hyperplan x_k = 0"""
        if not 1 <= k <= self.dim:
            raise InvalidIndexError(f"Coordonnée {k} hors de [1, {self.dim}]")
        return PointSet(self.dim, frozenset(
            Point(tuple(-c if idx == k - 1 else c for idx, c in enumerate(p))) for p in self.points
        ))

    def swap_coordinates(self, i: int, j: int) -> 'PointSet':
        """Réflexion par rapport à l'hyperplan x_i = x_j"""
        for k in (i, j):
            if not 1 <= k <= self.dim:
                raise InvalidIndexError(f"Coordonnée {k} hors de [1, {self.dim}]")

        def swap(p: Point) -> Point:
            coords = list(p.coords)
            coords[i - 1], coords[j - 1] = coords[j - 1], coords[i - 1]
            return Point(tuple(coords))

        return PointSet(self.dim, frozenset(swap(p) for p in self.points))

    def reflect_anti_diagonal(self) -> 'PointSet':
        """Réflexion 2-D par rapport à la droite x_1 = -x_2"""
        if self.dim != 2:
            raise DimensionMismatchError("La réflexion anti-diagonale n'existe qu'en dimension 2")
        return PointSet(2, frozenset(Point((-p[1], -p[0])) for p in self.points))

    def to_rows(self) -> List[List[int]]:
        return [p.to_list() for p in self.ordered]

    def __repr__(self) -> str:
        inner = ', '.join(repr(p) for p in self.ordered)
        return f"PointSet(dim={self.dim}, {{{inner}}})"


def point_set_from_rows(dim: int, rows: Sequence[Sequence[int]]) -> PointSet:
    """
    Construit un PointSet dédupliqué depuis des lignes d'entiers

    Args:
        dim: Dimension attendue (>= 1)
        rows: Lignes de coordonnées

    Returns:
        Ensemble de points dédupliqué

    Raises:
        DimensionMismatchError: si une ligne n'a pas la longueur dim (index fourni)
        InputFormatError: si une coordonnée n'est pas entière
    """
    points = []
    for index, row in enumerate(rows):
        row = tuple(row)
        if len(row) != dim:
            raise DimensionMismatchError(
                f"Ligne {index}: longueur {len(row)} au lieu de {dim}", row_index=index
            )
        try:
            points.append(Point(row))
        except TypeError as e:
            raise InputFormatError(f"Ligne {index}: {e}") from e
    return PointSet(dim, frozenset(points))


def bounding_box(point_set: PointSet) -> Tuple[Point, Point]:
    """Minimum et maximum coordonnée par coordonnée d'un ensemble non vide"""
    if point_set.is_empty():
        raise EmptySetError("Boîte englobante d'un ensemble vide")
    columns = list(zip(*point_set.points))
    return (Point(tuple(min(c) for c in columns)), Point(tuple(max(c) for c in columns)))


class ClassTag(Enum):
    """Classes d'inégalités, de la plus forte à la plus faible"""
    SVPI = "SVPI"
    DC = "DC"
    UTVPI = "UTVPI"
    TVPI = "TVPI"
    GENERAL = "GENERAL"

    @property
    def rank(self) -> int:
        return _TAG_ORDER.index(self)

    @classmethod
    def parse(cls, name: str) -> 'ClassTag':
        try:
            return cls(name.upper())
        except ValueError as e:
            raise InputFormatError(f"Classe d'inégalité inconnue: {name}") from e


_TAG_ORDER = [ClassTag.SVPI, ClassTag.DC, ClassTag.UTVPI, ClassTag.TVPI, ClassTag.GENERAL]


def _syntactic_checks(coeffs: Sequence[Fraction], tag: ClassTag) -> bool:
    nonzero = [c for c in coeffs if c != 0]
    unit = all(c in (1, -1) for c in nonzero)
    if tag is ClassTag.SVPI:
        return unit and len(nonzero) <= 1
    if tag is ClassTag.DC:
        return unit and sum(1 for c in nonzero if c == 1) <= 1 and sum(1 for c in nonzero if c == -1) <= 1
    if tag is ClassTag.UTVPI:
        return unit and len(nonzero) <= 2
    if tag is ClassTag.TVPI:
        return len(nonzero) <= 2
    return True


def tightest_tag(coeffs: Sequence[Fraction]) -> ClassTag:
    """Classe la plus forte dont les coefficients respectent la contrainte syntaxique"""
    for tag in _TAG_ORDER:
        if _syntactic_checks(coeffs, tag):
            return tag
    return ClassTag.GENERAL


def parse_rational(value: RationalLike) -> Fraction:
    """Entier, Fraction ou chaîne "p/q" vers Fraction exacte (pas de flottants)"""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Valeur non exacte refusée: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Valeur rationnelle invalide: {value!r}")


def format_rational(value: Fraction) -> Union[int, str]:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Inequality:
    """Une ligne a·x >= b avec son étiquette de classe"""
    coeffs: Tuple[Fraction, ...]
    rhs: Fraction
    class_tag: ClassTag = ClassTag.GENERAL

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(parse_rational(c) for c in self.coeffs))
        object.__setattr__(self, 'rhs', parse_rational(self.rhs))
        if isinstance(self.class_tag, str):
            object.__setattr__(self, 'class_tag', ClassTag.parse(self.class_tag))
        if not self.coeffs:
            raise DimensionMismatchError("Une inégalité doit avoir au moins un coefficient")

    @classmethod
    def tagged(cls, coeffs: Sequence[RationalLike], rhs: RationalLike) -> 'Inequality':
        """Inégalité étiquetée avec sa classe la plus forte"""
        values = tuple(parse_rational(c) for c in coeffs)
        return cls(values, parse_rational(rhs), tightest_tag(values))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def support(self) -> List[int]:
        """Indices 1-based des coefficients non nuls"""
        return [k + 1 for k, c in enumerate(self.coeffs) if c != 0]

    def lhs(self, x: Sequence[int]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, x) if c != 0), Fraction(0))

    def is_satisfied(self, x: Sequence[int]) -> bool:
        return self.lhs(x) >= self.rhs

    def is_valid_for(self, tag: ClassTag) -> bool:
        return _syntactic_checks(self.coeffs, tag)

    def __repr__(self) -> str:
        terms = ' '.join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}x{k + 1}"
                         for k, c in enumerate(self.coeffs) if c != 0) or '0'
        return f"{terms} >= {self.rhs} [{self.class_tag.value}]"


def validate_class(ineq: Inequality) -> bool:
    """Vrai ssi les coefficients respectent la contrainte syntaxique de l'étiquette"""
    return ineq.is_valid_for(ineq.class_tag)


@dataclass(frozen=True)
class LinearSystem:
    """Conjonction finie d'inégalités Ax >= b"""
    dim: int
    rows: Tuple[Inequality, ...] = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        for index, row in enumerate(rows):
            if row.dim != self.dim:
                raise DimensionMismatchError(
                    f"Inégalité {index} de longueur {row.dim} dans un système de dimension {self.dim}",
                    row_index=index,
                )
        object.__setattr__(self, 'rows', rows)

    @property
    def system_class(self) -> ClassTag:
        """Classe la plus faible parmi les étiquettes des lignes (SVPI si vide)"""
        if not self.rows:
            return ClassTag.SVPI
        return max((row.class_tag for row in self.rows), key=lambda tag: tag.rank)

    def __len__(self) -> int:
        return len(self.rows)

    def is_satisfied(self, x: Sequence[int]) -> bool:
        return all(row.is_satisfied(x) for row in self.rows)

    def invalid_rows(self) -> List[int]:
        return [k for k, row in enumerate(self.rows) if not validate_class(row)]


def require_nonempty(point_set: PointSet, what: str):
    if point_set.is_empty():
        raise EmptySetError(f"{what}: l'ensemble est vide")
