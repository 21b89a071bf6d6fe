"""
✔️ Sous-commande check
======================

Teste une propriété nommée sur un ensemble et écrit le certificat.
Noms acceptés: ceux du classificateur, plus "closed:<op>", "strong:<op>",
"weak-F:<kmax>" et "hereditary:<prédicat>".
"""

import logging
from typing import Any, Tuple

from config import EXIT_CODES, SCHEMA_VERSIONS
from integer_sets.classifier import SetClassifier
from integer_sets.core_types import PointSet
from integer_sets.decomposition import hereditary_check, is_weakly_F_closed
from integer_sets.errors import UnknownNameError
from integer_sets.operations import (PartialOp, TotalOp, is_closed, is_strongly_closed, is_weakly_closed,
                                     operation_by_name)
from utils import display_cli_message, emit_document

from .common import certificate_points, load_input_set, maybe_plot

logger = logging.getLogger(__name__)


def _witness(result) -> Any:
    return result.witness.to_dict() if result.witness is not None else None


def evaluate_property(point_set: PointSet, name: str, classifier: SetClassifier) -> Tuple[bool, Any]:
    """Verdict et certificat (dict JSON ou None) d'une propriété nommée"""
    if name in classifier.checkers:
        return classifier.checkers[name](point_set)

    prefix, _, argument = name.partition(':')
    if prefix == 'closed' and argument:
        op = operation_by_name(argument)
        result = is_closed(point_set, op) if isinstance(op, TotalOp) else is_weakly_closed(point_set, op)
        return result.holds, _witness(result)
    if prefix == 'strong' and argument:
        op = operation_by_name(argument)
        if not isinstance(op, PartialOp):
            raise UnknownNameError(f"'{argument}' n'est pas une opération partielle")
        result = is_strongly_closed(point_set, op)
        return result.holds, _witness(result)
    if prefix == 'weak-F' and argument:
        try:
            k_max = int(argument)
        except ValueError as e:
            raise UnknownNameError(f"k_max invalide: {argument}") from e
        result = is_weakly_F_closed(point_set, k_max)
        return result.holds, _witness(result)
    if prefix == 'hereditary' and argument:
        result = hereditary_check(point_set, argument)
        return result.holds, result.to_dict()
    raise UnknownNameError(
        f"Propriété inconnue: {name} (attendu: {', '.join(classifier.checkers)}, "
        f"closed:<op>, strong:<op>, weak-F:<kmax>, hereditary:<prédicat>)"
    )


def run_check(args) -> int:
    point_set = load_input_set(args.input)
    holds, certificate = evaluate_property(point_set, args.property, SetClassifier())
    document = {
        'schema': SCHEMA_VERSIONS['certificate'],
        'property': args.property,
        'dim': point_set.dim,
        'holds': holds,
        'certificate': certificate,
    }
    emit_document(document, args.out, args.json)
    maybe_plot(args.plot, point_set, certificate_points(certificate))

    if holds:
        display_cli_message('success', 'property_holds', name=args.property)
        return EXIT_CODES['property_true']
    display_cli_message('warning', 'property_fails', name=args.property)
    return EXIT_CODES['property_false']
