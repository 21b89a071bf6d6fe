"""
🔢 Ensembles de Points Entiers - Ligne de Commande
==================================================

Sous-commandes:
- check: teste une propriété et écrit le certificat
- closure: fermeture par opérations ou par classe de systèmes
- classify: profil complet avec cohérence des implications
- repr: représentabilité SVPI / DC / UTVPI / TVPI
- solve: solutions entières d'un système dans une boîte
- paper-examples: rejoue les exemples de référence
- verify-theorems: suites aléatoires de vérification

Codes de sortie: 0 propriété vraie, 1 propriété fausse, 2 erreur d'utilisation.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from config import BUDGET_CONFIG, CLOSURE_KINDS, EXIT_CODES, LOG_LEVEL, REPRESENTATION_CLASSES, SUITE_DEFAULTS
from commands import (run_check, run_classify, run_closure, run_examples_command, run_repr, run_solve,
                      run_verify_theorems)
from integer_sets.classifier import PROPERTY_ORDER
from integer_sets.errors import IntegerSetError
from integer_sets.theorem_suite import MUTATIONS, SUITE_NAMES
from utils import display_cli_message

logger = logging.getLogger(__name__)


def _global_flags() -> argparse.ArgumentParser:
    """Options communes, acceptées après chaque sous-commande"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--in', dest='input', metavar='FICHIER', help="Fichier JSON d'entrée")
    parent.add_argument('--out', metavar='FICHIER', help="Fichier JSON de sortie (certificat, ensemble, système)")
    parent.add_argument('--json', action='store_true', help="Affiche le document JSON sur la sortie standard")
    parent.add_argument('--budget', type=int, metavar='N', help="Budget d'énumération (tuples et points de boîte)")
    parent.add_argument('--seed', type=int, default=SUITE_DEFAULTS['seed'], help="Graine des instances aléatoires")
    parent.add_argument('--plot', action='store_true', help="Tracé ASCII (dimension 2)")
    parent.add_argument('--xlsx', metavar='FICHIER', help="Export Excel des tableaux")
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true', help="Journalisation détaillée")
    verbosity.add_argument('--quiet', '-q', action='store_true', help="Avertissements et erreurs seulement")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(
        prog='integer-sets',
        description="Analyse exacte d'ensembles finis de points entiers",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    check = subparsers.add_parser('check', parents=[parent], help="Teste une propriété")
    check.add_argument('--property', required=True,
                       help=f"Nom de propriété ({', '.join(PROPERTY_ORDER)}, "
                            "closed:<op>, strong:<op>, weak-F:<kmax>, hereditary:<prédicat>)")
    check.set_defaults(handler=run_check)

    closure = subparsers.add_parser('closure', parents=[parent], help="Calcule une fermeture")
    closure.add_argument('--kind', required=True, choices=CLOSURE_KINDS)
    closure.set_defaults(handler=run_closure)

    classify = subparsers.add_parser('classify', parents=[parent], help="Profil complet")
    classify.set_defaults(handler=run_classify)

    representation = subparsers.add_parser('repr', parents=[parent], help="Représentabilité")
    representation.add_argument('--class', dest='cls', required=True,
                                type=str.lower, choices=REPRESENTATION_CLASSES)
    representation.set_defaults(handler=run_repr)

    solve = subparsers.add_parser('solve', parents=[parent], help="Solutions entières d'un système")
    solve.add_argument('--box', metavar='l1:u1,...', help="Boîte d'énumération")
    solve.set_defaults(handler=run_solve)

    examples = subparsers.add_parser('paper-examples', parents=[parent], help="Rejoue les exemples de référence")
    examples.add_argument('--fixtures-dir', metavar='DOSSIER', help="Répertoire d'exemples alternatif")
    examples.set_defaults(handler=run_examples_command)

    verify = subparsers.add_parser('verify-theorems', parents=[parent], help="Suites de vérification")
    verify.add_argument('--trials', type=int, default=SUITE_DEFAULTS['trials'])
    verify.add_argument('--suite', action='append', choices=SUITE_NAMES,
                        help="Restreint à une suite (répétable)")
    verify.add_argument('--mutate', choices=sorted(MUTATIONS), help="Injecte une variante fautive de μ")
    verify.set_defaults(handler=run_verify_theorems)

    return parser


def _configure_logging(args):
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = getattr(logging, LOG_LEVEL, logging.INFO)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', force=True)


def _apply_budget(budget: Optional[int]):
    if budget is None:
        return
    if budget < 1:
        raise IntegerSetError(f"Budget invalide: {budget}")
    BUDGET_CONFIG['max_enumeration'] = budget
    BUDGET_CONFIG['max_box_points'] = budget
    logger.debug(f"Budget d'énumération fixé à {budget}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: 0 pour --help, 2 pour une erreur d'utilisation
        return e.code if isinstance(e.code, int) else EXIT_CODES['usage_error']

    _configure_logging(args)
    saved_budget = dict(BUDGET_CONFIG)
    try:
        _apply_budget(args.budget)
        if args.seed < 0:
            raise IntegerSetError(f"Graine invalide: {args.seed} (entier >= 0 attendu)")
        return args.handler(args)
    except IntegerSetError as e:
        logger.error(f"Erreur {args.command}: {e}")
        display_cli_message('error', 'usage', error=e)
        return EXIT_CODES['usage_error']
    except json.JSONDecodeError as e:
        logger.error(f"Erreur {args.command}: {e}")
        display_cli_message('error', 'json', error=e)
        return EXIT_CODES['usage_error']
    except OSError as e:
        logger.error(f"Erreur {args.command}: {e}")
        display_cli_message('error', 'file', error=e)
        return EXIT_CODES['usage_error']
    finally:
        BUDGET_CONFIG.update(saved_budget)


if __name__ == '__main__':
    sys.exit(main())
