"""
Outils partagés par les sous-commandes
"""

import logging
from typing import Any, Iterable, List, Optional

from config import CLI_MESSAGES
from integer_sets.core_types import Point, PointSet
from integer_sets.errors import InputFormatError
from integer_sets.set_io import load_point_set
from utils import ascii_plot, display_cli_message

logger = logging.getLogger(__name__)


def require_input(path: Optional[str], what: str = "ensemble") -> str:
    if not path:
        raise InputFormatError(f"Fichier d'entrée requis (--in) pour lire un {what}")
    return path


def load_input_set(path: Optional[str]) -> PointSet:
    point_set = load_point_set(require_input(path))
    logger.debug(CLI_MESSAGES['info']['loaded'].format(dim=point_set.dim, size=len(point_set)))
    return point_set


def certificate_points(certificate: Any) -> List[Point]:
    """Points à mettre en évidence dans un tracé: image d'un témoin, trou, point manquant"""
    if not isinstance(certificate, dict):
        return []
    found = []
    for key in ('produced', 'hole', 'missing_point'):
        value = certificate.get(key)
        if isinstance(value, list) and value and all(isinstance(c, int) for c in value):
            found.append(Point(tuple(value)))
    return found


def maybe_plot(enabled: bool, point_set: PointSet, highlight: Iterable[Point] = ()):
    if not enabled:
        return
    if point_set.dim != 2:
        display_cli_message('warning', 'plot_two_dim_only')
        return
    print(ascii_plot(point_set, highlight))
