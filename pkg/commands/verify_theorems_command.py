"""
Sous-commande verify-theorems: suites aléatoires de vérification des implications
"""

import logging

from config import EXIT_CODES, SCHEMA_VERSIONS
from integer_sets.theorem_suite import TheoremVerifier
from utils import display_cli_message, emit_document, export_xlsx, render_table, status_label

logger = logging.getLogger(__name__)


def run_verify_theorems(args) -> int:
    verifier = TheoremVerifier(seed=args.seed, trials=args.trials, mutate=args.mutate)
    outcomes = verifier.run(args.suite)

    frame = TheoremVerifier.to_frame(outcomes)
    if not args.json:
        print(render_table(frame))
    for outcome in outcomes:
        if outcome.passed:
            continue
        print(f"{status_label(False)}  {outcome.name}")
        for violation in outcome.violations[:5]:
            print(f"      {violation.rule}: {violation.points} {violation.detail}")

    document = {
        'schema': SCHEMA_VERSIONS['verification'],
        'kind': 'verify-theorems',
        'seed': args.seed,
        'trials': args.trials,
        'mutate': args.mutate,
        'suites': [o.to_dict() for o in outcomes],
    }
    emit_document(document, args.out, args.json)
    if args.xlsx:
        export_xlsx({'suites': frame}, args.xlsx)

    violations = sum(len(o.violations) for o in outcomes)
    if violations:
        display_cli_message('warning', 'suites_failed', count=violations)
        return EXIT_CODES['property_false']
    display_cli_message('success', 'suites_passed', trials=args.trials)
    return EXIT_CODES['property_true']
