"""
Sous-commande repr: représentabilité dans une classe de systèmes
"""

import logging

from config import EXIT_CODES
from integer_sets.representation import is_representable
from integer_sets.set_io import system_to_dict
from utils import display_cli_message, emit_document

from .common import certificate_points, load_input_set, maybe_plot

logger = logging.getLogger(__name__)


def run_repr(args) -> int:
    point_set = load_input_set(args.input)
    certificate = is_representable(point_set, args.cls)
    if certificate.representable:
        # Le fichier écrit est directement relisible comme système
        document = system_to_dict(certificate.system)
        document['representable'] = True
        emit_document(document, args.out, args.json)
        display_cli_message('success', 'system_written', cls=args.cls.upper(), rows=len(certificate.system))
        return EXIT_CODES['property_true']

    document = certificate.to_dict()
    emit_document(document, args.out, args.json)
    maybe_plot(args.plot, point_set, certificate_points(document))
    display_cli_message('warning', 'property_fails', name=f"repr-{args.cls.lower()}")
    print(f"  trou: {certificate.hole}")
    return EXIT_CODES['property_false']
