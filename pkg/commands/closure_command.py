"""
Sous-commande closure: fermeture par opérations ou par classe de systèmes
"""

import logging

from config import EXIT_CODES
from integer_sets.closure_engine import closure_by_kind
from integer_sets.set_io import point_set_to_dict
from utils import display_cli_message, emit_document

from .common import load_input_set, maybe_plot

logger = logging.getLogger(__name__)


def run_closure(args) -> int:
    point_set = load_input_set(args.input)
    result = closure_by_kind(point_set, args.kind)
    document = point_set_to_dict(result.closed_set)
    document['closure'] = {'kind': args.kind, **result.to_dict()}
    emit_document(document, args.out, args.json)
    added = sorted(result.closed_set.points - point_set.points)
    maybe_plot(args.plot, point_set, added)
    logger.debug(f"Points ajoutés: {added}")
    display_cli_message('success', 'closure_written', kind=args.kind, size=len(result.closed_set),
                        added=len(added))
    return EXIT_CODES['property_true']
