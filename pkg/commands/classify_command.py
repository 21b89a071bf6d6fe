"""
Sous-commande classify: profil complet d'un ensemble
"""

import logging

from config import EXIT_CODES
from integer_sets.classifier import SetClassifier
from utils import emit_document, export_xlsx, render_table

from .common import load_input_set, maybe_plot

logger = logging.getLogger(__name__)


def run_classify(args) -> int:
    point_set = load_input_set(args.input)
    report = SetClassifier().classify(point_set)
    emit_document(report.to_dict(), args.out, args.json)
    if not args.json:
        print(render_table(report.to_frame()))
        for note in report.notes:
            print(f"  ℹ️ {note}")
    if args.xlsx:
        export_xlsx({'profil': report.to_frame()}, args.xlsx)
    maybe_plot(args.plot, point_set)

    # Une implication violée signale une erreur d'implémentation
    if report.consistency:
        for rule in report.consistency:
            logger.error(f"❌ Implication violée: {rule}")
        return EXIT_CODES['property_false']
    return EXIT_CODES['property_true']
