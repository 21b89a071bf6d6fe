"""
⚠️ Erreurs du domaine
=====================

Hiérarchie d'exceptions commune à tous les modules d'analyse d'ensembles entiers.
"""

from typing import Any, Optional


class IntegerSetError(ValueError):
    """Erreur de base pour toutes les analyses d'ensembles entiers"""


class DimensionMismatchError(IntegerSetError):
    """Dimension incohérente (ligne, point, système ou famille)"""

    def __init__(self, message: str, row_index: Optional[int] = None):
        super().__init__(message)
        self.row_index = row_index


class EmptySetError(IntegerSetError):
    """Opération non définie sur un ensemble vide"""


class InvalidIndexError(IntegerSetError):
    """Ensemble d'indices invalide (ordre, bornes, paire)"""


class UnknownNameError(IntegerSetError):
    """Nom d'opération, de propriété ou de fermeture inconnu"""


class InputFormatError(IntegerSetError):
    """Fichier JSON mal formé"""


class BudgetExceededError(IntegerSetError):
    """L'énumération demandée dépasse le budget configuré"""

    def __init__(self, what: str, bound: int, budget: int):
        super().__init__(
            f"Budget dépassé pour {what}: {bound} éléments à énumérer > budget {budget}"
        )
        self.what = what
        self.bound = bound
        self.budget = budget


class UnboundedOperationError(IntegerSetError):
    """Un point généré sort de la boîte englobante: terminaison non garantie"""

    def __init__(self, operation: str, point: Any, box: Any):
        super().__init__(
            f"L'opération '{operation}' a produit {point} hors de la boîte {box}: "
            f"terminaison de la fermeture non garantie"
        )
        self.operation = operation
        self.point = point
        self.box = box
