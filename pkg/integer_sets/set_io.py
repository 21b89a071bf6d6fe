"""
📄 Formats de Fichiers - Ensembles et Systèmes
==============================================

Lecture et écriture JSON des ensembles de points et des systèmes
d'inégalités. Les fichiers écrits portent un champ "schema"; les fichiers
lus peuvent l'omettre.

Ensemble:  {"dim": n, "points": [[...], ...]}
Système:   {"dim": n, "rows": [{"coeffs": [...], "rhs": r, "class": "UTVPI"}, ...]}
"""

import json
import logging
from typing import Any, Dict

from config import SCHEMA_VERSIONS

from .core_types import ClassTag, Inequality, LinearSystem, PointSet, format_rational, point_set_from_rows
from .errors import DimensionMismatchError, InputFormatError

logger = logging.getLogger(__name__)


def point_set_to_dict(point_set: PointSet) -> Dict[str, Any]:
    return {
        'schema': SCHEMA_VERSIONS['point_set'],
        'dim': point_set.dim,
        'points': point_set.to_rows(),
    }


def point_set_from_dict(data: Dict[str, Any]) -> PointSet:
    if not isinstance(data, dict) or 'dim' not in data or 'points' not in data:
        raise InputFormatError("Ensemble attendu: {\"dim\": n, \"points\": [...]}")
    dim = data['dim']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputFormatError(f"Dimension invalide: {dim!r}")
    rows = data['points']
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InputFormatError("Le champ 'points' doit être une liste de listes d'entiers")
    return point_set_from_rows(dim, rows)


def system_to_dict(system: LinearSystem) -> Dict[str, Any]:
    return {
        'schema': SCHEMA_VERSIONS['system'],
        'dim': system.dim,
        'class': system.system_class.value,
        'rows': [
            {
                'coeffs': [format_rational(c) for c in row.coeffs],
                'rhs': format_rational(row.rhs),
                'class': row.class_tag.value,
            }
            for row in system.rows
        ],
    }


def system_from_dict(data: Dict[str, Any]) -> LinearSystem:
    if not isinstance(data, dict) or 'dim' not in data or 'rows' not in data:
        raise InputFormatError("Système attendu: {\"dim\": n, \"rows\": [...]}")
    dim = data['dim']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputFormatError(f"Dimension invalide: {dim!r}")
    if not isinstance(data['rows'], list) or not all(isinstance(raw, dict) for raw in data['rows']):
        raise InputFormatError("Le champ 'rows' doit être une liste d'inégalités {\"coeffs\": [...], \"rhs\": b}")
    rows = []
    for index, raw in enumerate(data['rows']):
        try:
            coeffs = raw['coeffs']
            rhs = raw['rhs']
            if len(coeffs) != dim:
                raise DimensionMismatchError(
                    f"Inégalité {index}: {len(coeffs)} coefficients au lieu de {dim}", row_index=index
                )
            ineq = Inequality.tagged(coeffs, rhs)
            if 'class' in raw:
                ineq = Inequality(ineq.coeffs, ineq.rhs, ClassTag.parse(raw['class']))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            if isinstance(e, DimensionMismatchError):
                raise
            raise InputFormatError(f"Inégalité {index} invalide: {e}") from e
        rows.append(ineq)
    system = LinearSystem(dim, tuple(rows))
    invalid = system.invalid_rows()
    if invalid:
        logger.warning(f"⚠️ Étiquettes de classe incohérentes sur les lignes {invalid}")
    return system


def _read_json(path: str) -> Any:
    with open(path, 'r', encoding='utf-8') as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"JSON invalide dans {path}: {e}") from e


def write_json(path: str, payload: Dict[str, Any]):
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(payload, handle, indent=2, ensure_ascii=False)
        handle.write('\n')
    logger.debug(f"Fichier écrit: {path}")


def load_point_set(path: str) -> PointSet:
    point_set = point_set_from_dict(_read_json(path))
    logger.info(f"🔍 Ensemble chargé depuis {path}: dimension {point_set.dim}, {len(point_set)} point(s)")
    return point_set


def save_point_set(point_set: PointSet, path: str):
    write_json(path, point_set_to_dict(point_set))


def load_system(path: str) -> LinearSystem:
    system = system_from_dict(_read_json(path))
    logger.info(f"🔍 Système chargé depuis {path}: {len(system)} inégalité(s), classe {system.system_class.value}")
    return system


def save_system(system: LinearSystem, path: str):
    write_json(path, system_to_dict(system))


__all__ = [
    'point_set_to_dict', 'point_set_from_dict', 'system_to_dict', 'system_from_dict',
    'load_point_set', 'save_point_set', 'load_system', 'save_system', 'write_json',
]
