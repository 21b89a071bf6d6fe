"""
Sous-commande paper-examples: rejoue les exemples de référence embarqués
"""

import logging

from config import EXIT_CODES, FIXTURES_DIR, SCHEMA_VERSIONS
from integer_sets.reference_fixtures import FixtureRunner
from utils import display_cli_message, emit_document, export_xlsx, status_label

logger = logging.getLogger(__name__)


def run_examples_command(args) -> int:
    runner = FixtureRunner()
    results = runner.run_all(getattr(args, 'fixtures_dir', None) or FIXTURES_DIR)
    for result in results:
        print(f"{status_label(result.passed)}  {result.name}")
        for failure in result.failures:
            print(f"      {failure}")

    document = {
        'schema': SCHEMA_VERSIONS['verification'],
        'kind': 'paper-examples',
        'results': [r.to_dict() for r in results],
    }
    emit_document(document, args.out, args.json)
    if args.xlsx:
        export_xlsx({'exemples': runner.to_frame(results)}, args.xlsx)

    failed = [r for r in results if not r.passed]
    if failed:
        display_cli_message('warning', 'fixtures_failed', count=len(failed))
        return EXIT_CODES['property_false']
    display_cli_message('success', 'fixtures_passed', count=len(results))
    return EXIT_CODES['property_true']
