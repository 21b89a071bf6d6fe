"""
Fonctions utilitaires pour la ligne de commande
Contient l'affichage des messages, des tableaux et des tracés, et les exports
"""

import json
import logging
import sys
from typing import Any, Dict, Iterable, Optional

import pandas as pd
from colorama import Fore, Style, init as colorama_init

from config import CLI_MESSAGES
from integer_sets.core_types import Point, PointSet
from integer_sets.set_io import write_json

logger = logging.getLogger(__name__)

colorama_init(autoreset=True)

_COLORS = {
    'success': Fore.GREEN,
    'warning': Fore.YELLOW,
    'error': Fore.RED,
    'info': Fore.CYAN,
}


def display_cli_message(message_type, message_key, **kwargs):
    """
    Affiche un message de la CLI de manière centralisée

    Args:
        message_type (str): Type de message (success, warning, error, info)
        message_key (str): Clé du message
        **kwargs: Variables à formater dans le message
    """
    message = CLI_MESSAGES[message_type][message_key].format(**kwargs)
    stream = sys.stderr if message_type == 'error' else sys.stdout
    print(f"{_COLORS[message_type]}{message}{Style.RESET_ALL}", file=stream)


def status_label(passed: bool) -> str:
    """PASS en vert, FAIL en rouge"""
    if passed:
        return f"{Fore.GREEN}PASS{Style.RESET_ALL}"
    return f"{Fore.RED}FAIL{Style.RESET_ALL}"


def render_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(vide)"
    return frame.to_string(index=False)


def emit_document(payload: Dict[str, Any], out_path: Optional[str] = None, as_json: bool = False):
    """
    Écrit un document JSON versionné dans un fichier et/ou sur la sortie standard

    Args:
        payload: Document (porte son champ "schema")
        out_path: Fichier de sortie (optionnel)
        as_json: Affiche aussi le document sur la sortie standard
    """
    if out_path:
        write_json(out_path, payload)
        logger.info(f"✅ Document écrit: {out_path}")
    if as_json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))


def export_xlsx(frames: Dict[str, pd.DataFrame], path: str):
    """Exporte un ou plusieurs tableaux dans un classeur Excel (une feuille par tableau)"""
    with pd.ExcelWriter(path, engine='openpyxl') as writer:
        for sheet, frame in frames.items():
            frame.to_excel(writer, sheet_name=sheet[:31], index=False)
    logger.info(f"✅ Export Excel: {path} ({len(frames)} feuille(s))")


def ascii_plot(point_set: PointSet, highlight: Iterable[Point] = ()) -> str:
    """
    Tracé ASCII d'un petit ensemble 2-D

    '#' membre de l'ensemble, 'o' point mis en évidence (trou, image d'un
    témoin), '.' autre point de la boîte englobante. x_1 en abscisse, x_2
    en ordonnée croissante vers le haut.
    """
    if point_set.dim != 2:
        raise ValueError("Tracé ASCII limité à la dimension 2")
    marked = [p for p in highlight if p.dim == 2]
    everything = list(point_set.points) + marked
    if not everything:
        return "(ensemble vide)"
    xs = [p[0] for p in everything]
    ys = [p[1] for p in everything]
    width = max(len(str(y)) for y in ys)
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        cells = []
        for x in range(min(xs), max(xs) + 1):
            point = Point((x, y))
            if point in point_set.points:
                cells.append('#')
            elif point in marked:
                cells.append('o')
            else:
                cells.append('.')
        lines.append(f"{str(y).rjust(width)} | {' '.join(cells)}")
    lines.append(f"{' ' * width} +-{'--' * (max(xs) - min(xs) + 1)}")
    lines.append(f"{' ' * width}   x_1 de {min(xs)} à {max(xs)}")
    return '\n'.join(lines)
