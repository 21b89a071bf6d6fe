"""
Configuration centralisée pour l'analyse de représentabilité d'ensembles entiers
Contient les budgets d'énumération, les noms reconnus et les messages de la CLI
"""

import os

from dotenv import load_dotenv

# Surcharges optionnelles depuis un fichier .env
load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        return default


# Budgets d'énumération (garde-fous contre l'explosion combinatoire)
BUDGET_CONFIG = {
    # Nombre maximal de tuples énumérés par un test de fermeture
    'max_enumeration': _env_int('INTEGER_SETS_MAX_ENUMERATION', 2_000_000),
    # Nombre maximal de points entiers énumérés dans une boîte
    'max_box_points': _env_int('INTEGER_SETS_MAX_BOX_POINTS', 250_000),
    # Nombre maximal de tuples pour la famille f^(k)
    'max_f_tuples': _env_int('INTEGER_SETS_MAX_F_TUPLES', 500_000),
    # Taille du cache des fermetures
    'closure_cache_size': _env_int('INTEGER_SETS_CACHE_SIZE', 512),
}

LOG_LEVEL = os.getenv('INTEGER_SETS_LOG_LEVEL', 'INFO').upper()

# Types de fermeture de la commande closure
CLOSURE_KINDS = ['op:mu', 'op:median', 'op:gh', 'svpi', 'dc', 'utvpi', 'tvpi']

# Fermetures 2-D utilisables dans une jointure
JOIN_CLOSURE_KINDS = ['mu', 'gh', 'median', 'hull']

REPRESENTATION_CLASSES = ['svpi', 'dc', 'utvpi', 'tvpi']

# Versions des schémas JSON écrits
SCHEMA_VERSIONS = {
    'point_set': 'integer-sets/point-set/v1',
    'system': 'integer-sets/system/v1',
    'certificate': 'integer-sets/certificate/v1',
    'class_report': 'integer-sets/class-report/v1',
    'verification': 'integer-sets/verification/v1',
}

# Codes de sortie stables
EXIT_CODES = {
    'property_true': 0,
    'property_false': 1,
    'usage_error': 2,
}

# Paramètres par défaut des suites de vérification
SUITE_DEFAULTS = {
    'seed': 0,
    'trials': 200,
    'box_side': 6,
    'max_set_size': 10,
    'dims': [2, 3],
    'f_family_max_size': 5,
}

# Répertoire des exemples de référence embarqués
FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'fixtures')

# Messages de la CLI
CLI_MESSAGES = {
    'success': {
        'property_holds': "✅ Propriété '{name}' vérifiée",
        'closure_written': "✅ Fermeture '{kind}' calculée: {size} points ({added} ajoutés)",
        'system_written': "✅ Système {cls} synthétisé: {rows} inégalités",
        'solutions_written': "✅ {count} solution(s) entière(s) dans la boîte",
        'fixtures_passed': "✅ {count} exemple(s) de référence reproduit(s)",
        'suites_passed': "✅ Aucune violation sur {trials} essai(s) par suite",
    },
    'warning': {
        'property_fails': "⚠️ Propriété '{name}' non vérifiée",
        'fixtures_failed': "⚠️ {count} exemple(s) en échec",
        'suites_failed': "⚠️ {count} violation(s) détectée(s)",
        'plot_two_dim_only': "⚠️ Le tracé ASCII n'est disponible qu'en dimension 2",
    },
    'error': {
        'usage': "❌ Erreur d'utilisation: {error}",
        'file': "❌ Erreur de lecture/écriture: {error}",
        'json': "❌ JSON invalide: {error}",
    },
    'info': {
        'loaded': "🔍 Ensemble chargé: dimension {dim}, {size} point(s)",
        'running_suite': "🧪 Suite '{name}' ({trials} essais)",
    },
}
