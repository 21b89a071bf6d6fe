"""
Sous-commande solve: solutions entières d'un système dans une boîte
"""

import logging

from config import EXIT_CODES
from integer_sets.errors import InputFormatError
from integer_sets.lattice import Box
from integer_sets.representation import integer_solutions
from integer_sets.set_io import load_system, point_set_to_dict
from utils import display_cli_message, emit_document

from .common import maybe_plot, require_input

logger = logging.getLogger(__name__)


def run_solve(args) -> int:
    system = load_system(require_input(args.input, "système"))
    if not args.box:
        raise InputFormatError("Boîte requise (--box l1:u1,...,ln:un)")
    box = Box.parse(args.box)
    solutions = integer_solutions(system, box)
    document = point_set_to_dict(solutions)
    document['box'] = box.to_text()
    emit_document(document, args.out, args.json)
    maybe_plot(args.plot, solutions)
    display_cli_message('success', 'solutions_written', count=len(solutions))
    return EXIT_CODES['property_true']
